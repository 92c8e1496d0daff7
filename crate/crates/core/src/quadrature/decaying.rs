//! Double-exponential rule for ∫₀^∞ f(t) dt with f = O(t^p e^{-δt}) at
//! infinity and at worst log-power behavior at 0+.
//!
//! Substitution t = e^{v - e^{-v}} / δ: as v → -∞ the node t collapses to 0
//! double-exponentially (so endpoint log powers are harmless), as v → +∞
//! the factor e^{-δt} = e^{-e^v·(…)} decays double-exponentially.  The
//! trapezoid rule over v then converges geometrically per level; levels
//! double the node count until two successive levels agree.

use super::{IntegrandMeta, QuadResult};
use crate::dd::Dd;
use crate::error::{Error, Result};

const V_LEFT: f64 = -4.5;
const V_RIGHT: f64 = 5.0;
const MAX_LEVEL: u32 = 10;

/// Integrate a decaying integrand; `rel_tol >= 1e-14`.
pub fn integrate_decaying(
    f: &(dyn Fn(f64) -> f64 + Sync),
    meta: &IntegrandMeta,
    rel_tol: f64,
) -> Result<QuadResult> {
    if meta.oscillatory {
        return Err(Error::Domain(
            "integrate_decaying requires a non-oscillatory integrand".into(),
        ));
    }
    let delta = meta.decay_exponent;
    if !(delta > 0.0) {
        return Err(Error::Divergent(format!(
            "decay exponent must be positive, got {delta}"
        )));
    }
    let rel_tol = rel_tol.max(1e-14);

    // Trapezoid over v with geometric refinement: level L adds the midpoints
    // of level L-1, so the running sum is reused.
    let node = |v: f64| -> (f64, f64) {
        let emv = (-v).exp();
        let t = (v - emv).exp() / delta;
        let w = t * (1.0 + emv);
        (t, w)
    };

    let mut h = 0.5;
    let mut sum = Dd::ZERO;
    let mut nodes = 0usize;
    {
        let n = ((V_RIGHT - V_LEFT) / h).round() as i64;
        for i in 0..=n {
            let v = V_LEFT + h * i as f64;
            let (t, w) = node(v);
            let fv = f(t);
            if fv != 0.0 && fv.is_finite() {
                sum = sum.add_f64(fv * w);
            }
            nodes += 1;
        }
    }
    let mut value = sum.to_f64() * h;
    let mut err = f64::INFINITY;
    let mut converged = false;

    for _level in 1..=MAX_LEVEL {
        // Add midpoints at half the step.
        let n = ((V_RIGHT - V_LEFT) / h).round() as i64;
        let mut mid = Dd::ZERO;
        for i in 0..n {
            let v = V_LEFT + h * (i as f64 + 0.5);
            let (t, w) = node(v);
            let fv = f(t);
            if fv != 0.0 && fv.is_finite() {
                mid = mid.add_f64(fv * w);
            }
            nodes += 1;
        }
        h *= 0.5;
        sum = sum + mid;
        let new_value = sum.to_f64() * h;
        err = (new_value - value).abs();
        value = new_value;
        if err <= rel_tol * value.abs().max(1.0) {
            converged = true;
            break;
        }
    }

    // Fold the analytic truncation remainder of the right cutoff into the
    // estimate: the omitted tail is below |f(t_max)|·max(t_max, 1/δ).
    let (t_max, _) = node(V_RIGHT);
    let tail = f(t_max).abs() * t_max.max(1.0 / delta);
    err = err.max(tail);
    if err > rel_tol * value.abs().max(1.0) {
        converged = false;
    }

    Ok(QuadResult {
        value,
        err_estimate: err,
        nodes_used: nodes,
        partitions_used: 1,
        converged,
    })
}

/// Double-exponential rule for integrands with *algebraic* decay
/// O(t^{-p}), p > 1, at infinity (log-power endpoint behavior at 0 is fine):
/// the exp-sinh substitution t = e^{2 sinh v} compresses both ends
/// double-exponentially.  Used for moments with equally many I and K
/// factors, where the exponential parts cancel exactly.
pub fn integrate_algebraic(
    f: &(dyn Fn(f64) -> f64 + Sync),
    decay_power: f64,
    rel_tol: f64,
) -> Result<QuadResult> {
    if !(decay_power > 1.0) {
        return Err(Error::Divergent(format!(
            "algebraic decay power must exceed 1, got {decay_power}"
        )));
    }
    let rel_tol = rel_tol.max(1e-14);
    const A_LEFT: f64 = -4.4;
    const A_RIGHT: f64 = 4.2;

    let node = |v: f64| -> (f64, f64) {
        let t = (2.0 * v.sinh()).exp();
        (t, 2.0 * t * v.cosh())
    };

    let mut h = 0.25;
    let mut sum = Dd::ZERO;
    let mut nodes = 0usize;
    {
        let n = ((A_RIGHT - A_LEFT) / h).round() as i64;
        for i in 0..=n {
            let (t, w) = node(A_LEFT + h * i as f64);
            let fv = f(t);
            if fv != 0.0 && fv.is_finite() {
                sum = sum.add_f64(fv * w);
            }
            nodes += 1;
        }
    }
    let mut value = sum.to_f64() * h;
    let mut err = f64::INFINITY;
    let mut converged = false;
    for _level in 1..=9 {
        let n = ((A_RIGHT - A_LEFT) / h).round() as i64;
        let mut mid = Dd::ZERO;
        for i in 0..n {
            let (t, w) = node(A_LEFT + h * (i as f64 + 0.5));
            let fv = f(t);
            if fv != 0.0 && fv.is_finite() {
                mid = mid.add_f64(fv * w);
            }
            nodes += 1;
        }
        h *= 0.5;
        sum = sum + mid;
        let new_value = sum.to_f64() * h;
        err = (new_value - value).abs();
        value = new_value;
        if err <= rel_tol * value.abs().max(1.0) {
            converged = true;
            break;
        }
    }
    // Right-cutoff remainder: |f| ~ C t^{-p} gives a tail below
    // |f(t_max)| t_max / (p - 1).
    let (t_max, _) = node(A_RIGHT);
    let tail = f(t_max).abs() * t_max / (decay_power - 1.0);
    err = err.max(tail);
    if err > rel_tol * value.abs().max(1.0) {
        converged = false;
    }
    Ok(QuadResult {
        value,
        err_estimate: err,
        nodes_used: nodes,
        partitions_used: 1,
        converged,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebraic_decay() {
        // ∫ t/(1+t²)² dt = 1/2
        let r = integrate_algebraic(&|t| t / (1.0 + t * t).powi(2), 3.0, 1e-13).unwrap();
        assert!(r.converged);
        assert!((r.value - 0.5).abs() < 1e-13, "{}", r.value);
    }

    #[test]
    fn plain_exponential() {
        let meta = IntegrandMeta::decaying(1.0, 0);
        let r = integrate_decaying(&|t| (-t).exp(), &meta, 1e-13).unwrap();
        assert!(r.converged);
        assert!((r.value - 1.0).abs() < 1e-13, "{}", r.value);
    }

    #[test]
    fn gamma_like_moment() {
        // ∫ t^5 e^{-3t} dt = 5!/3^6
        let meta = IntegrandMeta::decaying(3.0, 0);
        let r = integrate_decaying(&|t| t.powi(5) * (-3.0 * t).exp(), &meta, 1e-13).unwrap();
        let expect = 120.0 / 729.0;
        assert!((r.value / expect - 1.0).abs() < 1e-13);
    }

    #[test]
    fn log_singularity() {
        // ∫ ln(t)² e^{-t} dt = γ² + π²/6
        let meta = IntegrandMeta::decaying(1.0, 2);
        let r = integrate_decaying(&|t| t.ln().powi(2) * (-t).exp(), &meta, 1e-13).unwrap();
        let g = crate::constants::EULER_GAMMA;
        let expect = g * g + std::f64::consts::PI.powi(2) / 6.0;
        assert!((r.value / expect - 1.0).abs() < 1e-12, "{} vs {expect}", r.value);
    }

    #[test]
    fn rejects_divergent() {
        let meta = IntegrandMeta::decaying(0.0, 0);
        assert!(integrate_decaying(&|_| 1.0, &meta, 1e-10).is_err());
    }
}
