//! Symmetric powers of the Bessel operator θ² - t² via the
//! Bronstein–Mulders–Weil recursion:
//!     L_{n+1,0} = θ⁰,  L_{n+1,1} = θ¹,
//!     L_{n+1,k+1} = θ L_{n+1,k} - k(n+1-k) t² L_{n+1,k-1},
//! whose final member L_{n+1} = L_{n+1,n+1} annihilates every product
//! I0^j K0^{n-j}.

use super::{DiffOperator, OpBasis, OpVar};
use crate::exact::{rat_i64, Poly, Rat};
use num::One;

/// The order-(n+1) annihilator of the n-th symmetric power, θ basis, exact
/// integer coefficients.
pub fn bmw_symmetric_power(n: u32) -> DiffOperator {
    assert!(n >= 1);
    let t2 = Poly::monomial(Rat::one(), 2);
    let mut prev = DiffOperator::new(OpVar::T, OpBasis::Theta, vec![Poly::one()]); // θ⁰
    let mut cur = DiffOperator::new(OpVar::T, OpBasis::Theta, vec![Poly::zero(), Poly::one()]); // θ¹
    for k in 1..=n {
        let next = cur.theta_compose_left().add(
            &prev.scale_poly(&t2.scale(&rat_i64(-((k * (n + 1 - k)) as i64)))),
        );
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_two_is_bessel_operator() {
        // n=1: θ² - t²
        let l2 = bmw_symmetric_power(1);
        assert_eq!(l2.coeff(2), Poly::one());
        assert_eq!(l2.coeff(1), Poly::zero());
        assert_eq!(l2.coeff(0), Poly::from_integers(&[0, 0, -1]));
    }

    #[test]
    fn order_three_hand_unrolled() {
        // n=2: θ³ - 4t²θ - 4t²
        let l3 = bmw_symmetric_power(2);
        assert_eq!(l3.coeff(3), Poly::one());
        assert_eq!(l3.coeff(2), Poly::zero());
        assert_eq!(l3.coeff(1), Poly::from_integers(&[0, 0, -4]));
        assert_eq!(l3.coeff(0), Poly::from_integers(&[0, 0, -4]));
    }

    #[test]
    fn order_five_displayed_form() {
        // n=4: θ⁵ - 20t²θ³ - 60t²θ² + 8t²(8t²-9)θ + 32t²(4t²-1); confirmed
        // against the independently published adjoint (see adjoint test).
        let l5 = bmw_symmetric_power(4);
        assert_eq!(l5.coeff(5), Poly::one());
        assert_eq!(l5.coeff(4), Poly::zero());
        assert_eq!(l5.coeff(3), Poly::from_integers(&[0, 0, -20]));
        assert_eq!(l5.coeff(2), Poly::from_integers(&[0, 0, -60]));
        assert_eq!(l5.coeff(1), Poly::from_integers(&[0, 0, -72, 0, 64]));
        assert_eq!(l5.coeff(0), Poly::from_integers(&[0, 0, -32, 0, 128]));
    }

    #[test]
    fn order_five_adjoint_published_form() {
        // L5* = -t⁵D⁵ - 15t⁴D⁴ + 5t³(4t²-13)D³ + 90t²(2t²-1)D²
        //       - t(64t⁴-392t²+31)D - (192t⁴-184t²+1)
        let l5s = bmw_symmetric_power(4).theta_to_plain().formal_adjoint();
        assert_eq!(l5s.coeff(5), Poly::from_integers(&[0, 0, 0, 0, 0, -1]));
        assert_eq!(l5s.coeff(4), Poly::from_integers(&[0, 0, 0, 0, -15]));
        assert_eq!(l5s.coeff(3), Poly::from_integers(&[0, 0, 0, -65, 0, 20]));
        assert_eq!(l5s.coeff(2), Poly::from_integers(&[0, 0, -90, 0, 180]));
        assert_eq!(l5s.coeff(1), Poly::from_integers(&[0, -31, 0, 392, 0, -64]));
        assert_eq!(l5s.coeff(0), Poly::from_integers(&[-1, 0, 184, 0, -192]));
    }
}
