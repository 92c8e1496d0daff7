//! Exact u-derivatives of rescaled kernels.
//!
//! With X0 = K0(√u t) or I0(√u t) and X1 its order-1 partner, the closure
//! rules are (σ = +1 for I, -1 for K, v = √u):
//!     D X0 = σ t X1 / (2v)
//!     D X1 = σ t X0 / (2v) - X1 / (2u)
//! so D^m X0 = A_m(t, v) X0 + B_m(t, v) X1 with A, B rational in (t, v).
//! The pairs (A_m, B_m) are built once per (σ, m) and memoized.

use crate::exact::{rat_frac, Laurent, Poly, RatFn};
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// Coefficients (A, B) of D^m X0 = A·X0 + B·X1.
#[derive(Clone)]
pub struct DerivedKernelExpr {
    pub a: Laurent,
    pub b: Laurent,
}

fn cache() -> &'static Mutex<HashMap<(i32, u32), DerivedKernelExpr>> {
    static C: OnceLock<Mutex<HashMap<(i32, u32), DerivedKernelExpr>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// D^m applied to the order-0 rescaled kernel of the given sign.
pub fn derived_kernel(sigma: i32, m: u32) -> DerivedKernelExpr {
    assert!(sigma == 1 || sigma == -1);
    if let Some(e) = cache().lock().unwrap().get(&(sigma, m)) {
        return e.clone();
    }
    let mut a = Laurent::term(RatFn::one(), 0);
    let mut b = Laurent::zero();
    for _ in 0..m {
        let next = d_u_combo(sigma, &a, &b);
        a = next.0;
        b = next.1;
    }
    let e = DerivedKernelExpr { a, b };
    cache().lock().unwrap().insert((sigma, m), e.clone());
    e
}

/// One u-derivative of A·X0 + B·X1 in the (A, B) representation.
pub fn d_u_combo(sigma: i32, a: &Laurent, b: &Laurent) -> (Laurent, Laurent) {
    // σ t / (2v)
    let sig_t_over_2v = |l: &Laurent| -> Laurent {
        l.shift(1)
            .scale(&RatFn::new(Poly::constant(rat_frac(sigma as i64, 2)), Poly::x()))
    };
    // 1/(2u) = 1/(2v²)
    let half_u_inv = RatFn::new(
        Poly::constant(rat_frac(1, 2)),
        Poly::monomial(num::One::one(), 2),
    );
    let du = |l: &Laurent| -> Laurent {
        // coefficients c(v): dc/du = c'(v) / (2v)
        l.map_coeffs(|c| {
            c.derivative()
                .mul(&RatFn::new(Poly::constant(rat_frac(1, 2)), Poly::x()))
        })
    };
    let new_a = du(a).add(&sig_t_over_2v(b));
    let new_b = du(b).add(&sig_t_over_2v(a)).sub(&b.scale(&half_u_inv));
    (new_a, new_b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_i64;

    #[test]
    fn first_derivative_k() {
        // D K0(√u t) = -t K1(√u t) / (2√u)
        let e = derived_kernel(-1, 1);
        assert!(e.a.is_zero());
        assert_eq!(
            e.b.coeff(1),
            RatFn::new(Poly::constant(rat_frac(-1, 2)), Poly::x())
        );
    }

    #[test]
    fn second_derivative_satisfies_bessel_ode() {
        // (u D² + D) X0 = (t²/4) X0 for both signs.
        for sigma in [1i32, -1] {
            let d1 = derived_kernel(sigma, 1);
            let d2 = derived_kernel(sigma, 2);
            let u = RatFn::from_poly(Poly::monomial(rat_i64(1), 2)); // v²
            let lhs_a = d2.a.scale(&u).add(&d1.a);
            let lhs_b = d2.b.scale(&u).add(&d1.b);
            let quarter_t2 = Laurent::term(RatFn::from_rat(rat_frac(1, 4)), 2);
            assert_eq!(lhs_a, quarter_t2, "sigma={sigma}");
            assert!(lhs_b.is_zero(), "sigma={sigma}");
        }
    }
}
