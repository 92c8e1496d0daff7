//! Quadrature on (0, ∞) for the two integrand classes that occur here:
//! exponentially decaying integrands with logarithmic endpoint behavior
//! (double-exponential transformation), and oscillatory Bessel-product
//! integrands (partition at kernel zeros, per-cell Gauss–Legendre, nonlinear
//! extrapolation of the partial sums).

mod accel;
mod decaying;
mod finite;
mod gauss;
mod oscillatory;

pub use accel::{accelerate, levin_u, wynn_epsilon};
pub use decaying::{integrate_algebraic, integrate_decaying};
pub use finite::tanh_sinh;
pub use oscillatory::{integrate_oscillatory, integrate_oscillatory_from};

use crate::kernels::KernelKind;
use serde::{Deserialize, Serialize};

/// Declared analytic structure of an integrand on (0, ∞).
#[derive(Clone, Debug, PartialEq)]
pub struct IntegrandMeta {
    /// δ such that the integrand is O(t^p e^{-δt}) at infinity (0 allowed
    /// only for oscillatory integrands).
    pub decay_exponent: f64,
    /// Power of log t at 0+.
    pub endpoint_log_power: u32,
    pub oscillatory: bool,
    /// Kernels whose scaled zeros partition the axis: pairs (kind, scale)
    /// with the kernel entering as J(scale·t).  Empty for decaying
    /// integrands.
    pub zero_source: Vec<(KernelKind, f64)>,
}

impl IntegrandMeta {
    pub fn decaying(decay_exponent: f64, endpoint_log_power: u32) -> Self {
        IntegrandMeta {
            decay_exponent,
            endpoint_log_power,
            oscillatory: false,
            zero_source: Vec::new(),
        }
    }

    pub fn oscillatory(zero_source: Vec<(KernelKind, f64)>) -> Self {
        IntegrandMeta {
            decay_exponent: 0.0,
            endpoint_log_power: 0,
            oscillatory: true,
            zero_source,
        }
    }
}

/// Value, heuristic error estimate and diagnostics from a quadrature run.
/// `converged` implies `err_estimate <= tol·max(1, |value|)` for the
/// tolerance the engine was asked for.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct QuadResult {
    pub value: f64,
    pub err_estimate: f64,
    pub nodes_used: usize,
    pub partitions_used: usize,
    pub converged: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn meta_constructors() {
        let m = IntegrandMeta::decaying(2.0, 3);
        assert!(!m.oscillatory);
        let o = IntegrandMeta::oscillatory(vec![(KernelKind::J0, 1.0)]);
        assert!(o.oscillatory);
    }
}

