//! Evaluation of single-scale moments IKM(a,b;n), two-scale moments
//! IvKM/IKvM, derivative-kernel moments IpKM/IKpM, exact-symbolic
//! u-derivatives of two-scale moments, vacuum diagrams V_n, and the
//! hypergeometric/Heaviside closed-form oracles.
//!
//! Every integrand is assembled from exponentially scaled kernels with one
//! explicit e^{-δt} factor, δ from the spec, so products of ten kernels
//! cannot overflow.

mod cache;
mod derived;
mod spec;

pub use cache::{CacheRecord, MomentCache};
pub use derived::{d_u_combo, derived_kernel, DerivedKernelExpr};
pub use spec::{MomentFamily, MomentSpec};

use crate::error::{Error, Result};
use crate::kernels::{gamma_fn, i0e, i1e, k0e, k1e, KernelKind};
use crate::quadrature::{integrate_algebraic, integrate_decaying, IntegrandMeta};
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

/// δ below this is treated as out of the supported range (the tail becomes
/// impractically slow); within ten times of it a slow-tail warning is set.
pub const DELTA_FLOOR: f64 = 1e-3;
pub const DELTA_WARN: f64 = 1e-2;

#[derive(Clone, Copy, Debug)]
pub struct MomentValue {
    pub value: f64,
    pub err: f64,
    /// δ was within [DELTA_FLOOR, DELTA_WARN): tolerance degraded.
    pub slow_tail: bool,
    pub cache_hit: bool,
}

/// Moment evaluator with an in-process memo and an optional persistent
/// cache.  Pure evaluation; safe to share across threads.
pub struct Moments {
    pub rel_tol: f64,
    memo: RwLock<HashMap<(String, u64), MomentValue>>,
    persistent: Option<Arc<MomentCache>>,
}

impl Moments {
    pub fn new(rel_tol: f64) -> Moments {
        Moments {
            rel_tol,
            memo: RwLock::new(HashMap::new()),
            persistent: None,
        }
    }

    pub fn with_cache(rel_tol: f64, cache: Arc<MomentCache>) -> Moments {
        Moments {
            rel_tol,
            memo: RwLock::new(HashMap::new()),
            persistent: Some(cache),
        }
    }

    pub fn cache(&self) -> Option<&Arc<MomentCache>> {
        self.persistent.as_ref()
    }

    /// IKM(a,b;n) at the default tolerance.
    pub fn ikm(&self, a: u32, b: u32, n: u32) -> Result<f64> {
        Ok(self.eval(&MomentSpec::plain(a, b, n), self.rel_tol)?.value)
    }

    /// V_n = IKM(0,n;1).
    pub fn vacuum(&self, n: u32) -> Result<f64> {
        if n == 0 {
            return Err(Error::Domain("vacuum diagrams start at n = 1".into()));
        }
        self.ikm(0, n, 1)
    }

    /// Evaluate any moment spec at the given tolerance.
    pub fn eval(&self, spec: &MomentSpec, rel_tol: f64) -> Result<MomentValue> {
        spec.validate()?;
        let key = (spec.canonical(), rel_tol.to_bits());
        if let Some(v) = self.memo.read().unwrap().get(&key) {
            let mut v = *v;
            v.cache_hit = true;
            return Ok(v);
        }
        if let Some(c) = &self.persistent {
            if let Some(rec) = c.get(&key.0, rel_tol) {
                let v = MomentValue {
                    value: rec.value,
                    err: rec.err,
                    slow_tail: false,
                    cache_hit: true,
                };
                self.memo.write().unwrap().insert(key, v);
                return Ok(v);
            }
        }
        let v = self.eval_uncached(spec, rel_tol)?;
        self.memo.write().unwrap().insert(key.clone(), v);
        if let Some(c) = &self.persistent {
            c.insert(CacheRecord {
                key: key.0,
                tol: rel_tol,
                value: v.value,
                err: v.err,
                engine: concat!("bmlab-", env!("CARGO_PKG_VERSION"), "/de").into(),
            });
        }
        Ok(v)
    }

    fn eval_uncached(&self, spec: &MomentSpec, rel_tol: f64) -> Result<MomentValue> {
        let delta = spec.delta();
        if spec.family == MomentFamily::Plain {
            if spec.b < spec.a {
                return Err(Error::Divergent(format!(
                    "{spec}: needs at least as many K as I factors"
                )));
            }
            if spec.b == spec.a {
                // Exponential parts cancel; the tail is algebraic,
                // (I0 K0)^a t^n = O(t^{n-2a}), integrable iff 2a - n > 1.
                let p = 2.0 * spec.a as f64 - spec.n as f64;
                if p <= 1.0 {
                    return Err(Error::Divergent(format!(
                        "{spec}: algebraic tail t^{{-{p}}} is not integrable"
                    )));
                }
                let (ia, n) = (spec.a, spec.n as i64);
                let f = move |t: f64| -> f64 {
                    scaled_power_product(ia, ia, t) * powi64(t, n)
                };
                let q = integrate_algebraic(&f, p, rel_tol)?;
                if !q.converged {
                    return Err(Error::NoConvergence(format!(
                        "algebraic quadrature stalled at err {:.3e}",
                        q.err_estimate
                    )));
                }
                return Ok(MomentValue {
                    value: q.value,
                    err: q.err_estimate,
                    slow_tail: false,
                    cache_hit: false,
                });
            }
        } else if delta <= 0.0 {
            return Err(Error::Divergent(format!("{spec}: decay exponent {delta} <= 0")));
        } else if delta < DELTA_FLOOR {
            return Err(Error::Divergent(format!(
                "{spec}: decay exponent {delta} below supported floor {DELTA_FLOOR}"
            )));
        }
        let slow_tail = delta < DELTA_WARN;

        let v = spec.u.sqrt();
        let (i_plain, k_plain, rescaled, t_pow, sign): (u32, u32, Option<(KernelKind, f64)>, i64, f64) =
            match spec.family {
                MomentFamily::Plain => (spec.a, spec.b, None, spec.n as i64, 1.0),
                MomentFamily::Iv => (spec.a - 1, spec.b, Some((KernelKind::I0, v)), spec.n as i64, 1.0),
                MomentFamily::Kv => (spec.a, spec.b - 1, Some((KernelKind::K0, v)), spec.n as i64, 1.0),
                MomentFamily::Ip => (
                    spec.a - 1,
                    spec.b,
                    Some((KernelKind::I1, v)),
                    spec.n as i64 + 1,
                    1.0,
                ),
                MomentFamily::Kp => (
                    spec.a,
                    spec.b - 1,
                    Some((KernelKind::K1, v)),
                    spec.n as i64 + 1,
                    -1.0,
                ),
            };
        // u = 0 degenerations: I0(0) = 1, I1(0) = 0.
        if spec.u == 0.0 {
            match spec.family {
                MomentFamily::Ip => {
                    return Ok(MomentValue {
                        value: 0.0,
                        err: 0.0,
                        slow_tail: false,
                        cache_hit: false,
                    })
                }
                MomentFamily::Iv => {
                    return self.product_moment(i_plain, k_plain, &[], t_pow, delta, rel_tol)
                }
                _ => unreachable!("validate() rejects u = 0 for K-rescaled families"),
            }
        }
        let extra: Vec<(KernelKind, f64)> = rescaled.into_iter().collect();
        let mut r = self.product_moment(i_plain, k_plain, &extra, t_pow, delta, rel_tol)?;
        r.value *= sign;
        r.slow_tail = slow_tail;
        Ok(r)
    }

    fn product_moment(
        &self,
        i_plain: u32,
        k_plain: u32,
        extra: &[(KernelKind, f64)],
        t_pow: i64,
        delta: f64,
        rel_tol: f64,
    ) -> Result<MomentValue> {
        let factors = extra.to_vec();
        let log_pow = k_plain + extra.len() as u32;
        let f = move |t: f64| -> f64 {
            let mut val = scaled_power_product(i_plain, k_plain, t);
            for &(kind, s) in &factors {
                val *= scaled_kernel(kind, s * t);
            }
            val * powi64(t, t_pow) * (-delta * t).exp()
        };
        let meta = IntegrandMeta::decaying(delta, log_pow);
        let q = integrate_decaying(&f, &meta, rel_tol)?;
        if !q.converged {
            return Err(Error::NoConvergence(format!(
                "decaying quadrature stalled at err {:.3e}",
                q.err_estimate
            )));
        }
        Ok(MomentValue {
            value: q.value,
            err: q.err_estimate,
            slow_tail: false,
            cache_hit: false,
        })
    }

    /// Two-scale moment (any non-plain family).
    pub fn two_scale(&self, spec: &MomentSpec, rel_tol: f64) -> Result<MomentValue> {
        if spec.family == MomentFamily::Plain {
            return Err(Error::Domain("two_scale expects a rescaled family".into()));
        }
        self.eval(spec, rel_tol)
    }

    /// D^m of a two-scale (Iv or Kv) moment at its u, by exact symbolic
    /// differentiation of the rescaled kernel followed by quadrature of
    /// every term.
    pub fn u_derivative(&self, spec: &MomentSpec, m: u32, rel_tol: f64) -> Result<MomentValue> {
        let (sigma, i_plain, k_plain) = match spec.family {
            MomentFamily::Iv => (1i32, spec.a - 1, spec.b),
            MomentFamily::Kv => (-1i32, spec.a, spec.b - 1),
            _ => {
                return Err(Error::Domain(
                    "u_derivative applies to the Iv/Kv families".into(),
                ))
            }
        };
        if m == 0 {
            return self.eval(spec, rel_tol);
        }
        spec.validate()?;
        if spec.u == 0.0 {
            // I0(√u t) is analytic in u: D^m at 0 contributes t^{2m}/(4^m m!).
            let delta = spec.b as f64 - i_plain as f64;
            if delta <= 0.0 {
                return Err(Error::Divergent(format!("{spec}: divergent at u = 0")));
            }
            let mut r = self.product_moment(
                i_plain,
                k_plain,
                &[],
                spec.n as i64 + 2 * m as i64,
                delta,
                rel_tol,
            )?;
            let mut scale = 1.0;
            for j in 1..=m {
                scale /= 4.0 * j as f64;
            }
            r.value *= scale;
            r.err *= scale;
            return Ok(r);
        }
        let delta = spec.delta();
        if delta < DELTA_FLOOR {
            return Err(Error::Divergent(format!(
                "{spec}: decay exponent {delta} below supported floor"
            )));
        }
        let expr = derived_kernel(sigma, m);
        let v = spec.u.sqrt();
        let (a_min, a_coeffs) = expr.a.eval_coeffs_f64(v);
        let (b_min, b_coeffs) = expr.b.eval_coeffs_f64(v);
        let n = spec.n as i64;
        let f = move |t: f64| -> f64 {
            let x0 = scaled_kernel(if sigma > 0 { KernelKind::I0 } else { KernelKind::K0 }, v * t);
            let x1 = scaled_kernel(if sigma > 0 { KernelKind::I1 } else { KernelKind::K1 }, v * t);
            let pa = eval_laurent_f64(a_min, &a_coeffs, t);
            let pb = eval_laurent_f64(b_min, &b_coeffs, t);
            (pa * x0 + pb * x1)
                * scaled_power_product(i_plain, k_plain, t)
                * powi64(t, n)
                * (-delta * t).exp()
        };
        let meta = IntegrandMeta::decaying(delta, k_plain + 1);
        let q = integrate_decaying(&f, &meta, rel_tol)?;
        if !q.converged {
            return Err(Error::NoConvergence(format!(
                "u-derivative quadrature stalled at err {:.3e}",
                q.err_estimate
            )));
        }
        Ok(MomentValue {
            value: q.value,
            err: q.err_estimate,
            slow_tail: delta < DELTA_WARN,
            cache_hit: false,
        })
    }
}

/// Moment of an arbitrary product of (possibly rescaled) kernels against
/// t^power: ∫ Π kernel(scale·t) · t^power dt.  Used by integration-by-parts
/// checks that involve K1 factors.
pub fn bessel_product_moment(
    factors: &[(KernelKind, f64)],
    t_power: i64,
    rel_tol: f64,
) -> Result<MomentValue> {
    let mut delta = 0.0;
    let mut log_pow = 0u32;
    for &(kind, s) in factors {
        if !kind.is_modified() {
            return Err(Error::Domain(
                "bessel_product_moment handles modified kernels only".into(),
            ));
        }
        delta -= kind.exp_sign() as f64 * s;
        if kind.exp_sign() < 0 {
            log_pow += 1;
        }
    }
    if delta <= 0.0 {
        return Err(Error::Divergent(format!(
            "product moment decay exponent {delta} <= 0"
        )));
    }
    let factors = factors.to_vec();
    let f = move |t: f64| -> f64 {
        let mut val = powi64(t, t_power) * (-delta * t).exp();
        for &(kind, s) in &factors {
            val *= scaled_kernel(kind, s * t);
        }
        val
    };
    let meta = IntegrandMeta::decaying(delta, log_pow);
    let q = integrate_decaying(&f, &meta, rel_tol)?;
    if !q.converged {
        return Err(Error::NoConvergence(format!(
            "product quadrature stalled at err {:.3e}",
            q.err_estimate
        )));
    }
    Ok(MomentValue {
        value: q.value,
        err: q.err_estimate,
        slow_tail: false,
        cache_hit: false,
    })
}

#[inline]
fn scaled_kernel(kind: KernelKind, x: f64) -> f64 {
    match kind {
        KernelKind::I0 => i0e(x),
        KernelKind::I1 => i1e(x),
        KernelKind::K0 => k0e(x),
        KernelKind::K1 => k1e(x),
        _ => unreachable!("oscillatory kernels never enter decaying products"),
    }
}

#[inline]
fn scaled_power_product(i_plain: u32, k_plain: u32, t: f64) -> f64 {
    let mut val = 1.0;
    if i_plain > 0 {
        val *= i0e(t).powi(i_plain as i32);
    }
    if k_plain > 0 {
        val *= k0e(t).powi(k_plain as i32);
    }
    val
}

#[inline]
fn powi64(t: f64, p: i64) -> f64 {
    match p {
        0 => 1.0,
        1 => t,
        _ => t.powi(p as i32),
    }
}

#[inline]
fn eval_laurent_f64(min_deg: i64, coeffs: &[f64], t: f64) -> f64 {
    if coeffs.is_empty() {
        return 0.0;
    }
    let mut acc = 0.0;
    for c in coeffs.iter().rev() {
        acc = acc * t + c;
    }
    acc * powi64(t, min_deg)
}

/// Heaviside's integral formula: ∫ K0(t) t^{k-1} dt = 2^{k-2} Γ(k/2)².
pub fn heaviside_moment(k: u32) -> Result<f64> {
    if k == 0 {
        return Err(Error::Domain("heaviside_moment needs k >= 1".into()));
    }
    let g = gamma_fn(k as f64 / 2.0)?;
    Ok(2f64.powi(k as i32 - 2) * g * g)
}

/// Which closed-form Weber–Schafheitlin family to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WsKind {
    I0K0,
    I1K0,
}

/// Modified Weber–Schafheitlin integral in hypergeometric closed form:
/// ∫ I0(√u t) K0(t) t^n dt = 2^{n-1} Γ((n+1)/2)² ₂F₁((n+1)/2,(n+1)/2;1;u)
/// ∫ I1(√u t) K0(t) t^n dt = 2^{n-1} √u Γ((n+2)/2)² ₂F₁((n+2)/2,(n+2)/2;2;u)
/// Returns (value, slow_convergence_warning).
pub fn weber_schafheitlin(kind: WsKind, n: u32, u: f64) -> Result<(f64, bool)> {
    if !(0.0..1.0).contains(&u) {
        return Err(Error::Domain(format!(
            "weber_schafheitlin needs 0 <= u < 1, got {u}"
        )));
    }
    let (aa, c, pref) = match kind {
        WsKind::I0K0 => {
            let a = (n as f64 + 1.0) / 2.0;
            let g = gamma_fn(a)?;
            (a, 1.0, 2f64.powi(n as i32 - 1) * g * g)
        }
        WsKind::I1K0 => {
            let a = (n as f64 + 2.0) / 2.0;
            let g = gamma_fn(a)?;
            (a, 2.0, 2f64.powi(n as i32 - 1) * u.sqrt() * g * g)
        }
    };
    let f = hyp2f1_equal_params(aa, c, u);
    Ok((pref * f, u > 0.95))
}

/// ₂F₁(a, a; c; u) by plain term-by-term summation with ratio-based
/// stopping, for 0 <= u < 1.
fn hyp2f1_equal_params(a: f64, c: f64, u: f64) -> f64 {
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    for k in 0..100_000 {
        let kf = k as f64;
        term *= (a + kf) * (a + kf) / ((c + kf) * (kf + 1.0)) * u;
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;

    fn moments() -> Moments {
        Moments::new(1e-12)
    }

    #[test]
    fn vacuum_one_is_one() {
        let m = moments();
        assert!((m.vacuum(1).unwrap() - 1.0).abs() < 1e-12);
        assert!((m.vacuum(2).unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn heaviside_values() {
        assert!((heaviside_moment(2).unwrap() - 1.0).abs() < 1e-14);
        assert!((heaviside_moment(1).unwrap() - std::f64::consts::FRAC_PI_2).abs() < 1e-14);
        assert!((heaviside_moment(4).unwrap() - 4.0).abs() < 4.0 * 1e-14);
    }

    #[test]
    fn divergent_ikm_rejected() {
        let m = moments();
        assert!(matches!(m.ikm(2, 2, 1), Err(Error::Divergent(_))));
    }

    #[test]
    fn ws_examples() {
        // ∫ I0(√u t) K0(t) t dt = 1/(1-u)
        let (v, _) = weber_schafheitlin(WsKind::I0K0, 1, 0.5).unwrap();
        assert!((v - 2.0).abs() < 1e-13, "{v}");
        // ∫ I1(√u t) K0(t) dt = -ln(1-u)/(2√u)
        let (v, _) = weber_schafheitlin(WsKind::I1K0, 0, 0.5).unwrap();
        let expect = std::f64::consts::LN_2 / 2f64.sqrt();
        assert!((v - expect).abs() < 1e-13, "{v}");
        // ₂F₁ at u→0 reduces to the prefactor: π/2 for n = 0.
        let (v, _) = weber_schafheitlin(WsKind::I0K0, 0, 0.0).unwrap();
        assert!((v - std::f64::consts::FRAC_PI_2).abs() < 1e-13);
    }

    #[test]
    fn u_equal_one_reduces_to_plain() {
        let m = moments();
        let iv = m
            .eval(&MomentSpec::two_scale(MomentFamily::Iv, 2, 3, 1, 1.0), 1e-12)
            .unwrap();
        let plain = m.eval(&MomentSpec::plain(2, 3, 1), 1e-12).unwrap();
        assert_eq!(iv.value, plain.value, "u = 1 rescaling is the identity");
    }
}
