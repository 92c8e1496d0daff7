//! Moment matrices, their determinants and closed forms, the determinant
//! recursions, and the Wronskian machinery built from two-scale moment rows.

mod matrix;
mod vacuum;
mod wronskian;

pub use matrix::{
    build_matrix, check_recursion, det_closed_m, det_closed_n, MatrixKind, MomentMatrix,
};
pub use vacuum::{
    bologna_table, omega3_check_identity, omega4_check_identity, omega4_endpoint, psi2_at_one,
    psi2_identity, psi3_identity, theorem_mahler_pair,
};
pub use wronskian::{
    factorization_at_one, wronskian, wronskian_closed_form, FactorizationKind, WronskianFamily,
    WronskianValue,
};

use crate::error::Result;
use crate::kernels::gamma_fn;

/// Γ(1/15)Γ(2/15)Γ(4/15)Γ(8/15) / (240 √5 π²), the constant appearing in
/// the closed forms of the five-kernel odd moments.
pub fn bologna_constant() -> Result<f64> {
    let p = gamma_fn(1.0 / 15.0)?
        * gamma_fn(2.0 / 15.0)?
        * gamma_fn(4.0 / 15.0)?
        * gamma_fn(8.0 / 15.0)?;
    let c = p / (240.0 * 5f64.sqrt() * std::f64::consts::PI.powi(2));
    debug_assert!((0.08..0.12).contains(&c), "sanity window violated: {c}");
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bologna_in_sanity_window() {
        let c = bologna_constant().unwrap();
        assert!(c > 0.08 && c < 0.12, "{c}");
    }
}
