//! Logarithmic Mahler measures of 1 + x₁ + … + x_{n-1} through the
//! J-integral representation, the n-step walk density p_n(x) and moments
//! W_n(s), Dedekind-eta q-expansions, and the L-values attached to them.

mod eta;
mod lvalue;

pub use eta::{eta_q_expansion, EtaForm, QSeries};
pub use lvalue::{l_value, LValue};

use crate::constants::{EULER_GAMMA, LOG2};
use crate::error::{Error, Result};
use crate::kernels::{gamma_fn, j0, j1, KernelKind};
use crate::quadrature::{integrate_oscillatory, integrate_oscillatory_from, IntegrandMeta, QuadResult};

/// m(1 + x₁ + … + x_{n-1}) = -γ + ln 2 - n ∫ J₁(t) J₀(t)^{n-1} ln t dt.
///
/// The J-integral is evaluated through its exact integration by parts
///   n ∫₀^∞ J₁ J₀^{n-1} ln t dt = ∫₀^1 (J₀ⁿ-1)/t dt + ∫₁^∞ J₀ⁿ/t dt,
/// which removes the log weight: for even n the log-times-monotone tail of
/// the literal form defeats every standard transform, while the reduced
/// tail is plain algebraic.  (The literal form is kept as a cross-check
/// for odd n in the test suite.)
pub fn mahler_linear(n: u32, accel_depth: usize, rel_tol: f64) -> Result<QuadResult> {
    if !(2..=6).contains(&n) {
        return Err(Error::Domain(format!("mahler_linear supports 2 <= n <= 6, got {n}")));
    }
    let p = n as i32;
    let head = crate::quadrature::tanh_sinh(
        &move |t: f64| (j0(t).powi(p) - 1.0) / t,
        0.0,
        1.0,
        (rel_tol * 1e-2).max(1e-15),
    );
    let f = move |t: f64| j0(t).powi(p) / t;
    let meta = IntegrandMeta::oscillatory(vec![(KernelKind::J0, 1.0)]);
    let mut q = integrate_oscillatory_from(&f, &meta, 1.0, accel_depth, rel_tol)?;
    q.value = -EULER_GAMMA + LOG2 - (q.value + head.0);
    q.err_estimate += head.1;
    Ok(q)
}

/// The literal log-weighted J-integral ∫ J₁ J₀^{n-1} ln t dt (cross-check
/// surface; accurate for odd n, where the integrand's tail alternates).
pub fn broadhurst_log_integral(n: u32, accel_depth: usize, rel_tol: f64) -> Result<QuadResult> {
    let p = (n - 1) as i32;
    let f = move |t: f64| j1(t) * j0(t).powi(p) * t.ln();
    let meta = IntegrandMeta::oscillatory(vec![(KernelKind::J1, 1.0)]);
    integrate_oscillatory(&f, &meta, accel_depth, rel_tol)
}

/// Kluyver's walk density p_n(x) = ∫ J0(xt) J0(t)^n x t dt for 0 < x < n.
pub fn kluyver_p(n: u32, x: f64, accel_depth: usize, rel_tol: f64) -> Result<QuadResult> {
    if n < 2 {
        return Err(Error::Domain("kluyver_p needs n >= 2".into()));
    }
    if !(x > 0.0 && x < n as f64) {
        return Err(Error::Domain(format!(
            "walk density support is 0 < x < {n}, got {x}"
        )));
    }
    let p = n as i32;
    let f = move |t: f64| j0(x * t) * j0(t).powi(p) * x * t;
    let meta = IntegrandMeta::oscillatory(vec![(KernelKind::J0, 1.0)]);
    integrate_oscillatory(&f, &meta, accel_depth, rel_tol)
}

/// Walk moment W_n(s) = -2^s Γ(1+s/2)/Γ(1-s/2) ∫ x^{-s} d/dx[J0(x)^n] dx
/// for 0 < s < 2 (d/dx J0^n = -n J1 J0^{n-1}).
pub fn ramble_w(n: u32, s: f64, accel_depth: usize, rel_tol: f64) -> Result<QuadResult> {
    if n == 0 {
        return Err(Error::Domain("ramble_w needs n >= 1".into()));
    }
    if !(s > 0.0 && s < 2.0) {
        return Err(Error::Domain(format!(
            "the Γ(1-s/2) representation needs 0 < s < 2, got {s}"
        )));
    }
    let p = (n - 1) as i32;
    let f = move |x: f64| x.powf(-s) * j1(x) * j0(x).powi(p);
    let meta = IntegrandMeta::oscillatory(vec![(KernelKind::J1, 1.0)]);
    let mut q = integrate_oscillatory(&f, &meta, accel_depth, rel_tol)?;
    let pref = n as f64 * 2f64.powf(s) * gamma_fn(1.0 + 0.5 * s)? / gamma_fn(1.0 - 0.5 * s)?;
    q.value *= pref;
    q.err_estimate *= pref.abs();
    Ok(q)
}

/// ∫ J1(x t) J0(t)^p dt — the log-weighted endpoint piece of the vacuum
/// Wronskian integral representations.
pub fn j1_j0pow_integral(p: u32, x: f64, accel_depth: usize, rel_tol: f64) -> Result<QuadResult> {
    let pi = p as i32;
    let f = move |t: f64| j1(x * t) * j0(t).powi(pi);
    let meta = IntegrandMeta::oscillatory(vec![(KernelKind::J0, 1.0)]);
    integrate_oscillatory(&f, &meta, accel_depth, rel_tol)
}

/// ∫ (1 - J0(x t))/t · J0(t)^p dt — the difference kernel of the same
/// representations (equals m_{p+1} - m_p at x = 1).
pub fn one_minus_j0_integral(p: u32, x: f64, accel_depth: usize, rel_tol: f64) -> Result<QuadResult> {
    let pi = p as i32;
    let f = move |t: f64| (1.0 - j0(x * t)) / t * j0(t).powi(pi);
    let meta = IntegrandMeta::oscillatory(vec![(KernelKind::J0, 1.0)]);
    integrate_oscillatory(&f, &meta, accel_depth, rel_tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_step_walk_density() {
        // p₂(1) = 2/(π√3), from the closed two-step density 2/(π√(4-x²)).
        let r = kluyver_p(2, 1.0, 12, 1e-9).unwrap();
        let expect = 2.0 / (std::f64::consts::PI * 3f64.sqrt());
        assert!((r.value - expect).abs() < 1e-9, "{}", r.value);
    }

    #[test]
    fn mahler_of_two_variables_vanishes() {
        // m(1 + x) = 0.
        let r = mahler_linear(2, 12, 1e-9).unwrap();
        assert!(r.value.abs() < 1e-8, "{}", r.value);
    }

    #[test]
    fn one_step_walk_has_unit_moment() {
        let r = ramble_w(1, 0.5, 12, 1e-9).unwrap();
        assert!((r.value - 1.0).abs() < 1e-8, "{}", r.value);
    }

    #[test]
    fn domain_checks() {
        assert!(mahler_linear(7, 12, 1e-8).is_err());
        assert!(kluyver_p(4, 5.0, 12, 1e-8).is_err());
        assert!(ramble_w(3, 2.0, 12, 1e-8).is_err());
    }
}
