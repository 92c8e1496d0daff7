//! Canonical descriptor of a (possibly two-scale, possibly derivative-kernel)
//! Bessel moment integral.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Moment family:
/// - `Plain`: ∫ I0^a K0^b t^n dt
/// - `Iv`:    ∫ I0(√u t) I0^{a-1} K0^b t^n dt         (a counts the rescaled factor)
/// - `Kv`:    ∫ K0(√u t) I0^a K0^{b-1} t^n dt         (b counts the rescaled factor)
/// - `Ip`:    ∫ I1(√u t) I0^{a-1} K0^b t^{n+1} dt
/// - `Kp`:   -∫ K1(√u t) I0^a K0^{b-1} t^{n+1} dt
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MomentFamily {
    Plain,
    Iv,
    Kv,
    Ip,
    Kp,
}

impl MomentFamily {
    pub fn tag(self) -> &'static str {
        match self {
            MomentFamily::Plain => "IKM",
            MomentFamily::Iv => "IvKM",
            MomentFamily::Kv => "IKvM",
            MomentFamily::Ip => "IpKM",
            MomentFamily::Kp => "IKpM",
        }
    }

    /// Sign of √u in the convergence exponent: +1 when the rescaled kernel
    /// grows (I-type), -1 when it decays (K-type), 0 for plain moments.
    pub fn rescale_sign(self) -> i32 {
        match self {
            MomentFamily::Plain => 0,
            MomentFamily::Iv | MomentFamily::Ip => 1,
            MomentFamily::Kv | MomentFamily::Kp => -1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MomentSpec {
    pub family: MomentFamily,
    /// Count of I0-type factors, including the rescaled one for Iv/Ip.
    pub a: u32,
    /// Count of K0-type factors, including the rescaled one for Kv/Kp.
    pub b: u32,
    /// Power of t (before the extra t for Ip/Kp).
    pub n: u32,
    /// Scale parameter; 1 for plain moments.
    pub u: f64,
}

impl MomentSpec {
    pub fn plain(a: u32, b: u32, n: u32) -> MomentSpec {
        MomentSpec {
            family: MomentFamily::Plain,
            a,
            b,
            n,
            u: 1.0,
        }
    }

    pub fn two_scale(family: MomentFamily, a: u32, b: u32, n: u32, u: f64) -> MomentSpec {
        MomentSpec { family, a, b, n, u }
    }

    /// Exponential convergence rate δ of the assembled integrand: for plain
    /// moments b - a, otherwise the rescaled kernel contributes ∓√u in
    /// place of one unit.  The integral converges iff δ > 0.
    pub fn delta(&self) -> f64 {
        let a = self.a as f64;
        let b = self.b as f64;
        match self.family {
            MomentFamily::Plain => b - a,
            MomentFamily::Iv | MomentFamily::Ip => b - (a - 1.0) - self.u.sqrt(),
            MomentFamily::Kv | MomentFamily::Kp => (b - 1.0) - a + self.u.sqrt(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self.family {
            MomentFamily::Plain => {}
            MomentFamily::Iv | MomentFamily::Ip => {
                if self.a == 0 {
                    return Err(Error::Domain(format!(
                        "{self}: the I-count includes the rescaled kernel and must be >= 1"
                    )));
                }
                if self.u < 0.0 {
                    return Err(Error::Domain(format!("{self}: u must be >= 0")));
                }
            }
            MomentFamily::Kv | MomentFamily::Kp => {
                if self.b == 0 {
                    return Err(Error::Domain(format!(
                        "{self}: the K-count includes the rescaled kernel and must be >= 1"
                    )));
                }
                if self.u <= 0.0 {
                    return Err(Error::Domain(format!("{self}: u must be > 0")));
                }
            }
        }
        Ok(())
    }

    /// Canonical string form, unique per spec (used as cache key).
    pub fn canonical(&self) -> String {
        self.to_string()
    }

    /// Parse the canonical form, e.g. "IKM(2,3;1)" or "IvKM(1,4;1|0.5)".
    pub fn parse(s: &str) -> Result<MomentSpec> {
        let err = || Error::Parse(format!("cannot parse moment spec: {s}"));
        let s = s.trim();
        let open = s.find('(').ok_or_else(err)?;
        if !s.ends_with(')') {
            return Err(err());
        }
        let family = match &s[..open] {
            "IKM" => MomentFamily::Plain,
            "IvKM" => MomentFamily::Iv,
            "IKvM" => MomentFamily::Kv,
            "IpKM" => MomentFamily::Ip,
            "IKpM" => MomentFamily::Kp,
            _ => return Err(err()),
        };
        let body = &s[open + 1..s.len() - 1];
        let (ab_n, u_str) = match body.split_once('|') {
            Some((l, r)) => (l, Some(r)),
            None => (body, None),
        };
        let (ab, n_str) = ab_n.split_once(';').ok_or_else(err)?;
        let (a_str, b_str) = ab.split_once(',').ok_or_else(err)?;
        let a: u32 = a_str.trim().parse().map_err(|_| err())?;
        let b: u32 = b_str.trim().parse().map_err(|_| err())?;
        let n: u32 = n_str.trim().parse().map_err(|_| err())?;
        let u: f64 = match (family, u_str) {
            (MomentFamily::Plain, None) => 1.0,
            (MomentFamily::Plain, Some(_)) => return Err(err()),
            (_, Some(us)) => us.trim().parse().map_err(|_| err())?,
            (_, None) => return Err(err()),
        };
        let spec = MomentSpec { family, a, b, n, u };
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for MomentSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            MomentFamily::Plain => write!(f, "{}({},{};{})", self.family.tag(), self.a, self.b, self.n),
            _ => write!(
                f,
                "{}({},{};{}|{})",
                self.family.tag(),
                self.a,
                self.b,
                self.n,
                self.u
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_matches_known_convergence_domains() {
        // IvKM(1,4;1|u) converges for u < 16
        let s = MomentSpec::two_scale(MomentFamily::Iv, 1, 4, 1, 15.9);
        assert!(s.delta() > 0.0);
        let s = MomentSpec::two_scale(MomentFamily::Iv, 1, 4, 1, 16.1);
        assert!(s.delta() < 0.0);
        // IvKM(3,3;1|u) converges for u < 1
        let s = MomentSpec::two_scale(MomentFamily::Iv, 3, 3, 1, 0.99);
        assert!(s.delta() > 0.0);
        let s = MomentSpec::two_scale(MomentFamily::Iv, 3, 3, 1, 1.01);
        assert!(s.delta() < 0.0);
        // IKvM(1,4;1|u) converges for every u > 0
        let s = MomentSpec::two_scale(MomentFamily::Kv, 1, 4, 1, 100.0);
        assert!(s.delta() > 0.0);
    }

    #[test]
    fn canonical_roundtrip() {
        for s in ["IKM(2,3;1)", "IvKM(1,4;3|0.5)", "IKpM(2,3;1|0.25)"] {
            let spec = MomentSpec::parse(s).unwrap();
            assert_eq!(spec.canonical(), s);
            assert_eq!(MomentSpec::parse(&spec.canonical()).unwrap(), spec);
        }
    }

    #[test]
    fn parse_rejects_malformed() {
        assert!(MomentSpec::parse("IKM(2,3)").is_err());
        assert!(MomentSpec::parse("XKM(2,3;1)").is_err());
        assert!(MomentSpec::parse("IvKM(1,4;3)").is_err());
        assert!(MomentSpec::parse("IKM(2,3;1|0.5)").is_err());
    }
}
