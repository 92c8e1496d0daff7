//! Shared high-precision mathematical constants.

use crate::dd::Dd;
use std::sync::OnceLock;

/// Euler–Mascheroni constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// ln 2.
pub const LOG2: f64 = std::f64::consts::LN_2;

pub(crate) fn euler_gamma_dd() -> Dd {
    static G: OnceLock<Dd> = OnceLock::new();
    *G.get_or_init(|| {
        Dd::from_decimal_str("0.5772156649015328606065120900824024310422")
    })
}

pub(crate) fn pi_dd() -> Dd {
    static P: OnceLock<Dd> = OnceLock::new();
    *P.get_or_init(|| {
        Dd::from_decimal_str("3.1415926535897932384626433832795028841972")
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_dd_rounds_to_f64_constant() {
        assert_eq!(euler_gamma_dd().hi, EULER_GAMMA);
    }

    #[test]
    fn pi_dd_matches() {
        assert_eq!(pi_dd().hi, std::f64::consts::PI);
    }
}
