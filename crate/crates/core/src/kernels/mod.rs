//! Special-function kernels: I0, I1, K0, K1, J0, J1 (plain and exponentially
//! scaled), the gamma function, and zeros of J0/J1.
//!
//! Accuracy contract: relative error <= 5e-15 for unscaled values up to
//! t = 700 and for scaled values at any t >= 0 (for the oscillatory J
//! kernels, relative to the envelope sqrt(2/(pi t))).  All evaluators are
//! pure; the zero tables memoize behind a lock.

mod gamma;
mod ik;
mod j;
mod zeros;

pub use gamma::gamma_fn;
pub(crate) use gamma::gamma_dd;
pub use ik::{i0, i0e, i1, i1e, k0, k0e, k1, k1e};
pub use j::{j0, j1};
pub use zeros::bessel_j_zero as bessel_j_zero_by_order;

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// The six kernels appearing in any implemented integrand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum KernelKind {
    I0,
    I1,
    K0,
    K1,
    J0,
    J1,
}

impl KernelKind {
    pub fn is_modified(self) -> bool {
        !matches!(self, KernelKind::J0 | KernelKind::J1)
    }

    /// +1 for I kernels (growing), -1 for K kernels (decaying), 0 for J.
    pub fn exp_sign(self) -> i32 {
        match self {
            KernelKind::I0 | KernelKind::I1 => 1,
            KernelKind::K0 | KernelKind::K1 => -1,
            KernelKind::J0 | KernelKind::J1 => 0,
        }
    }
}

/// Exponential scaling applied to a kernel value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Scaling {
    None,
    /// Value carries a factor e^{-t}; valid for I kernels.
    TimesExpMinusT,
    /// Value carries a factor e^{+t}; valid for K kernels.
    TimesExpPlusT,
}

/// A kernel value together with its scaling tag.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScaledValue {
    pub value: f64,
    pub scaling: Scaling,
}

impl ScaledValue {
    /// Recover the unscaled value; may overflow for I kernels at large t.
    pub fn unscale(self, t: f64) -> f64 {
        match self.scaling {
            Scaling::None => self.value,
            Scaling::TimesExpMinusT => self.value * t.exp(),
            Scaling::TimesExpPlusT => self.value * (-t).exp(),
        }
    }
}

/// Largest t at which unscaled I kernels stay finite in f64.
const I_OVERFLOW_T: f64 = 709.0;

/// Evaluate a kernel at t with the requested scaling.
pub fn eval_kernel(kind: KernelKind, t: f64, scaling: Scaling) -> Result<ScaledValue> {
    if t < 0.0 || !t.is_finite() {
        return Err(Error::Domain(format!("kernel argument must be >= 0, got {t}")));
    }
    if t == 0.0 && matches!(kind, KernelKind::K0 | KernelKind::K1) {
        return Err(Error::Domain("K kernels are singular at t = 0".into()));
    }
    match (kind, scaling) {
        (KernelKind::J0, Scaling::None) => Ok(ScaledValue { value: j0(t), scaling }),
        (KernelKind::J1, Scaling::None) => Ok(ScaledValue { value: j1(t), scaling }),
        (KernelKind::J0 | KernelKind::J1, _) => Err(Error::Domain(
            "exponential scaling applies only to I/K kernels".into(),
        )),
        (KernelKind::I0, Scaling::TimesExpMinusT) => Ok(ScaledValue { value: i0e(t), scaling }),
        (KernelKind::I1, Scaling::TimesExpMinusT) => Ok(ScaledValue { value: i1e(t), scaling }),
        (KernelKind::K0, Scaling::TimesExpPlusT) => Ok(ScaledValue { value: k0e(t), scaling }),
        (KernelKind::K1, Scaling::TimesExpPlusT) => Ok(ScaledValue { value: k1e(t), scaling }),
        (KernelKind::I0, Scaling::None) => {
            if t > I_OVERFLOW_T {
                return Err(Error::Overflow(format!("I0({t}) exceeds f64 range")));
            }
            Ok(ScaledValue { value: i0(t), scaling })
        }
        (KernelKind::I1, Scaling::None) => {
            if t > I_OVERFLOW_T {
                return Err(Error::Overflow(format!("I1({t}) exceeds f64 range")));
            }
            Ok(ScaledValue { value: i1(t), scaling })
        }
        (KernelKind::K0, Scaling::None) => Ok(ScaledValue { value: k0(t), scaling }),
        (KernelKind::K1, Scaling::None) => Ok(ScaledValue { value: k1(t), scaling }),
        (KernelKind::I0 | KernelKind::I1, Scaling::TimesExpPlusT)
        | (KernelKind::K0 | KernelKind::K1, Scaling::TimesExpMinusT) => Err(Error::Domain(
            "scaling direction does not match kernel kind".into(),
        )),
    }
}

/// m-th positive zero of J0 or J1 (absolute error <= 1e-12, increasing in m).
pub fn bessel_j_zero(kind: KernelKind, m: usize) -> Result<f64> {
    match kind {
        KernelKind::J0 => zeros::bessel_j_zero(0, m),
        KernelKind::J1 => zeros::bessel_j_zero(1, m),
        _ => Err(Error::Domain("zeros are tabulated for J0/J1 only".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scaling_validation() {
        assert!(eval_kernel(KernelKind::J0, 1.0, Scaling::TimesExpMinusT).is_err());
        assert!(eval_kernel(KernelKind::I0, 1.0, Scaling::TimesExpPlusT).is_err());
        assert!(eval_kernel(KernelKind::K0, 1.0, Scaling::TimesExpMinusT).is_err());
        assert!(eval_kernel(KernelKind::I0, -1.0, Scaling::None).is_err());
    }

    #[test]
    fn overflow_reported() {
        assert!(matches!(
            eval_kernel(KernelKind::I0, 800.0, Scaling::None),
            Err(Error::Overflow(_))
        ));
        // Scaled form stays representable.
        let v = eval_kernel(KernelKind::I0, 800.0, Scaling::TimesExpMinusT).unwrap();
        assert!(v.value.is_finite() && v.value > 0.0);
    }
}
