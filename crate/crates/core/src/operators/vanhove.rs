//! Reconstruction of the order-n holonomic operators in u that annihilate
//! the homogeneous two-scale moments with n+2 kernels.
//!
//! The construction intertwines the adjoint of the order-(n+2) symmetric
//! power with the rescaled kernel:  t·L̃_n K0(√u t) = (-1)^n 2^{-n}
//! L*_{n+2}[K0(√u t)/t].  The right side is computed exactly in the combo
//! algebra, the unknown coefficients c_j(u) of L̃_n = Σ c_j(u) D^j are then
//! matched against D^j K0(√u t) power-by-power in t, and the linear system
//! is solved by fraction-free elimination over the polynomial ring.

use super::bmw::bmw_symmetric_power;
use super::combo::{apply_operator, BesselCombo, KernelFamily};
use super::{DiffOperator, OpBasis, OpVar};
use crate::error::{Error, Result};
use crate::exact::{rat_frac, rat_i64, solve_overdetermined, Poly, Rat, RatFn};
use crate::moments::{MomentFamily, MomentSpec, Moments};
use num::{One, Zero};

/// Which monic leading polynomial family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MathfrakKind {
    /// 𝔪_{2k-1}(u) = u^k Π_{j=1..k} (u - (2j)²)   — odd orders
    M,
    /// 𝔫_{2k}(u) = u^k Π_{j=1..k+1} (u - (2j-1)²) — even orders
    N,
}

/// Exact leading polynomial 𝔪_{2k-1} or 𝔫_{2k}.
pub fn mathfrak_poly(kind: MathfrakKind, k: u32) -> Poly {
    assert!(k >= 1);
    let mut p = Poly::monomial(Rat::one(), k as usize);
    let roots: Vec<i64> = match kind {
        MathfrakKind::M => (1..=k as i64).map(|j| (2 * j) * (2 * j)).collect(),
        MathfrakKind::N => (1..=k as i64 + 1).map(|j| (2 * j - 1) * (2 * j - 1)).collect(),
    };
    for r in roots {
        p = p.mul(&Poly::from_integers(&[-r, 1]));
    }
    p
}

/// Order-n operator in u with monic polynomial leading coefficient.
#[derive(Clone, Debug)]
pub struct VanhovePair {
    pub n: u32,
    pub operator: DiffOperator,
    pub leading_poly: Poly,
}

/// Singular points of the leading polynomial (for proximity warnings).
pub fn leading_roots(n: u32) -> Vec<f64> {
    let mut roots = vec![0.0];
    if n % 2 == 1 {
        let k = (n + 1) / 2;
        roots.extend((1..=k).map(|j| ((2 * j) * (2 * j)) as f64));
    } else {
        let k = n / 2;
        roots.extend((1..=k + 1).map(|j| ((2 * j - 1) * (2 * j - 1)) as f64));
    }
    roots
}

/// Derive the order-n operator, 1 <= n <= 6.
pub fn derive_vanhove(n: u32) -> Result<VanhovePair> {
    if !(1..=6).contains(&n) {
        return Err(Error::Domain(format!(
            "operators derived for 1 <= n <= 6, got {n}"
        )));
    }
    // R := (-1)^n 2^{-n} L*_{n+2}[K0(√u t)/t], then L̃_n K0(√u t) = R/t.
    let sym = bmw_symmetric_power(n + 1); // order n+2, θ basis
    let adjoint = sym.theta_to_plain().formal_adjoint();
    let seed = BesselCombo::kernel_over_t(KernelFamily::K);
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let rhs = apply_operator(&adjoint, &seed)
        .scale(&RatFn::from_rat(rat_frac(sign, 1 << n)))
        .shift_t(-1);

    // Basis combos D^j K0(√u t), j = 0..n.
    let mut basis = Vec::with_capacity(n as usize + 1);
    let mut d = BesselCombo::kernel(KernelFamily::K);
    for _ in 0..=n {
        basis.push(d.clone());
        d = d.d_du();
    }

    // Equations: one per occurring power of t per component.
    let mut t_degrees = std::collections::BTreeSet::new();
    for combo in basis.iter().chain(std::iter::once(&rhs)) {
        for l in [&combo.c0, &combo.c1] {
            for d in l.degrees() {
                t_degrees.insert(d);
            }
        }
    }
    let mut rows: Vec<Vec<Poly>> = Vec::new();
    let mut rhs_col: Vec<Poly> = Vec::new();
    for &deg in &t_degrees {
        for side in 0..2 {
            let pick = |c: &BesselCombo| -> RatFn {
                if side == 0 {
                    c.c0.coeff(deg)
                } else {
                    c.c1.coeff(deg)
                }
            };
            let entries: Vec<RatFn> = basis.iter().map(pick).collect();
            let r = pick(&rhs);
            if entries.iter().all(|e| e.is_zero()) && r.is_zero() {
                continue;
            }
            // Clear denominators across the row.
            let mut lcm = Poly::one();
            for e in entries.iter().chain(std::iter::once(&r)) {
                let den = e.denom();
                let g = lcm.gcd(den);
                lcm = lcm.mul(&den.div_exact(&g).expect("gcd divides"));
            }
            let clear = |e: &RatFn| -> Poly {
                e.numer()
                    .mul(&lcm.div_exact(e.denom()).expect("lcm divisible"))
            };
            rows.push(entries.iter().map(clear).collect());
            rhs_col.push(clear(&r));
        }
    }

    let solution = solve_overdetermined(rows, rhs_col)?;

    // Convert v-rational solutions to u-rational and normalize the leading
    // coefficient to the monic 𝔪/𝔫 polynomial.
    let target = if n % 2 == 1 {
        mathfrak_poly(MathfrakKind::M, (n + 1) / 2)
    } else {
        mathfrak_poly(MathfrakKind::N, n / 2)
    };
    let mut in_u: Vec<RatFn> = Vec::with_capacity(solution.len());
    for c in &solution {
        in_u.push(c.even_to_half_variable().ok_or_else(|| {
            Error::Inconsistent("operator coefficients are not even in √u".into())
        })?);
    }
    let lead = in_u.last().unwrap().clone();
    if lead.is_zero() {
        return Err(Error::Inconsistent("vanishing leading coefficient".into()));
    }
    let alpha = RatFn::from_poly(target.clone()).div(&lead);
    let mut coeffs = Vec::with_capacity(in_u.len());
    for c in &in_u {
        let scaled = c.mul(&alpha);
        let p = scaled
            .as_poly()
            .ok_or_else(|| {
                Error::Inconsistent("normalized coefficient is not polynomial in u".into())
            })?
            .clone();
        coeffs.push(p);
    }
    debug_assert_eq!(coeffs.last().unwrap(), &target);
    Ok(VanhovePair {
        n,
        operator: DiffOperator::new(OpVar::U, OpBasis::Plain, coeffs),
        leading_poly: target,
    })
}

impl VanhovePair {
    /// Numeric application Σ_j c_j(u)·D^j f(u) to a two-scale moment
    /// (Iv or Kv family), with derivatives from the exact symbolic
    /// reduction.  Returns (value, near-singular warning).
    pub fn apply_numeric(
        &self,
        moments: &Moments,
        target: &MomentSpec,
        u: f64,
        rel_tol: f64,
    ) -> Result<(f64, bool)> {
        if !matches!(target.family, MomentFamily::Iv | MomentFamily::Kv) {
            return Err(Error::Domain(
                "operator application targets Iv/Kv moments".into(),
            ));
        }
        let warn = leading_roots(self.n)
            .iter()
            .any(|r| (u - r).abs() < 1e-2);
        let spec_at_u = MomentSpec { u, ..*target };
        let mut acc = 0.0;
        for j in 0..=self.operator.order().unwrap_or(0) {
            let c = self.operator.coeff(j);
            if c.is_zero() {
                continue;
            }
            let d = moments.u_derivative(&spec_at_u, j as u32, rel_tol)?;
            acc += c.eval_f64(u) * d.value;
        }
        Ok((acc, warn))
    }

    /// Same application to a 1/(2k+1)-weighted combination
    /// [IvKM(1,m;·) + m·IKvM(1,m;·)]/(m+1) used by the Wronskian rows.
    pub fn apply_numeric_combination(
        &self,
        moments: &Moments,
        parts: &[(f64, MomentSpec)],
        u: f64,
        rel_tol: f64,
    ) -> Result<f64> {
        let mut acc = 0.0;
        for (w, spec) in parts {
            let (v, _) = self.apply_numeric(moments, spec, u, rel_tol)?;
            acc += w * v;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mathfrak_examples() {
        // 𝔪_3(u) = u²(u-4)(u-16)
        let m2 = mathfrak_poly(MathfrakKind::M, 2);
        let expect = Poly::monomial(Rat::one(), 2)
            .mul(&Poly::from_integers(&[-4, 1]))
            .mul(&Poly::from_integers(&[-16, 1]));
        assert_eq!(m2, expect);
        // 𝔪_1(u) = u(u-4)
        assert_eq!(
            mathfrak_poly(MathfrakKind::M, 1),
            Poly::from_integers(&[0, -4, 1])
        );
        // 𝔫_4(u) = u²(u-1)(u-9)(u-25)
        let n2 = mathfrak_poly(MathfrakKind::N, 2);
        let expect = Poly::monomial(Rat::one(), 2)
            .mul(&Poly::from_integers(&[-1, 1]))
            .mul(&Poly::from_integers(&[-9, 1]))
            .mul(&Poly::from_integers(&[-25, 1]));
        assert_eq!(n2, expect);
    }

    #[test]
    fn order_one_operator() {
        // L̃_1 = u(u-4) D + (u-2)
        let p = derive_vanhove(1).unwrap();
        assert_eq!(p.operator.coeff(1), Poly::from_integers(&[0, -4, 1]));
        assert_eq!(p.operator.coeff(0), Poly::from_integers(&[-2, 1]));
    }
}
