//! Symbolic elements c0(t,v)·X0(√u t) + c1(t,v)·X1(√u t) with bivariate
//! rational coefficients (v = √u), closed under d/dt, d/du, and
//! multiplication by polynomials in t — everything needed to apply
//! differential operators to rescaled Bessel kernels exactly.

use super::{DiffOperator, OpBasis, OpVar};
use crate::exact::{Laurent, Poly, Rat, RatFn};
use crate::moments::d_u_combo;
use num::{One, Zero};

/// Kernel family of the rescaled pair (X0, X1): K = (K0, K1), I = (I0, I1).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelFamily {
    I,
    K,
}

impl KernelFamily {
    pub fn sigma(self) -> i32 {
        match self {
            KernelFamily::I => 1,
            KernelFamily::K => -1,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BesselCombo {
    pub family: KernelFamily,
    pub c0: Laurent,
    pub c1: Laurent,
}

impl BesselCombo {
    /// The bare kernel X0(√u t).
    pub fn kernel(family: KernelFamily) -> BesselCombo {
        BesselCombo {
            family,
            c0: Laurent::term(RatFn::one(), 0),
            c1: Laurent::zero(),
        }
    }

    /// X0(√u t) / t.
    pub fn kernel_over_t(family: KernelFamily) -> BesselCombo {
        BesselCombo {
            family,
            c0: Laurent::term(RatFn::one(), -1),
            c1: Laurent::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c1.is_zero()
    }

    pub fn add(&self, o: &BesselCombo) -> BesselCombo {
        assert_eq!(self.family, o.family);
        BesselCombo {
            family: self.family,
            c0: self.c0.add(&o.c0),
            c1: self.c1.add(&o.c1),
        }
    }

    pub fn shift_t(&self, k: i64) -> BesselCombo {
        BesselCombo {
            family: self.family,
            c0: self.c0.shift(k),
            c1: self.c1.shift(k),
        }
    }

    pub fn scale(&self, r: &RatFn) -> BesselCombo {
        BesselCombo {
            family: self.family,
            c0: self.c0.scale(r),
            c1: self.c1.scale(r),
        }
    }

    pub fn mul_t_poly(&self, p: &Poly) -> BesselCombo {
        BesselCombo {
            family: self.family,
            c0: self.c0.mul_t_poly(p),
            c1: self.c1.mul_t_poly(p),
        }
    }

    /// d/dt via the closure rules
    ///   X0' = σ v X1,   X1' = σ v X0 - X1/t     (σ = ±1, v = √u).
    pub fn d_dt(&self) -> BesselCombo {
        let sigma = self.family.sigma();
        let v = RatFn::from_poly(Poly::monomial(Rat::one(), 1)).scale(&crate::exact::rat_i64(
            sigma as i64,
        ));
        let c0 = self.c0.d_dt().add(&self.c1.scale(&v));
        let c1 = self
            .c1
            .d_dt()
            .add(&self.c0.scale(&v))
            .sub(&self.c1.shift(-1));
        BesselCombo {
            family: self.family,
            c0,
            c1,
        }
    }

    /// d/du (u = v²).
    pub fn d_du(&self) -> BesselCombo {
        let (c0, c1) = d_u_combo(self.family.sigma(), &self.c0, &self.c1);
        BesselCombo {
            family: self.family,
            c0,
            c1,
        }
    }

    /// Numeric evaluation at (t, u) given kernel values (x0, x1).
    pub fn eval_f64(&self, t: f64, v: f64, x0: f64, x1: f64) -> f64 {
        let eval_side = |l: &Laurent| -> f64 {
            let (min, coeffs) = l.eval_coeffs_f64(v);
            if coeffs.is_empty() {
                return 0.0;
            }
            let mut acc = 0.0;
            for c in coeffs.iter().rev() {
                acc = acc * t + c;
            }
            acc * t.powi(min as i32)
        };
        eval_side(&self.c0) * x0 + eval_side(&self.c1) * x1
    }
}

/// Exact application of a differential operator to a combo.  The operator's
/// variable decides the derivation: t-operators use the d/dt closure (their
/// coefficients are polynomials in t), u-operators the d/du closure (their
/// coefficients, polynomials in u, become even polynomials in v).
pub fn apply_operator(op: &DiffOperator, seed: &BesselCombo) -> BesselCombo {
    assert_eq!(op.basis, OpBasis::Plain, "apply expects the plain basis");
    let order = match op.order() {
        None => return BesselCombo { family: seed.family, c0: Laurent::zero(), c1: Laurent::zero() },
        Some(o) => o,
    };
    let mut acc = BesselCombo {
        family: seed.family,
        c0: Laurent::zero(),
        c1: Laurent::zero(),
    };
    let mut derivative = seed.clone();
    for j in 0..=order {
        let lam = op.coeff(j);
        if !lam.is_zero() {
            let term = match op.variable {
                OpVar::T => derivative.mul_t_poly(&lam),
                OpVar::U => derivative.scale(&RatFn::from_poly(poly_u_to_v(&lam))),
            };
            acc = acc.add(&term);
        }
        if j < order {
            derivative = match op.variable {
                OpVar::T => derivative.d_dt(),
                OpVar::U => derivative.d_du(),
            };
        }
    }
    acc
}

/// Reinterpret a polynomial in u as the even polynomial in v with u = v².
pub fn poly_u_to_v(p: &Poly) -> Poly {
    let mut c = Vec::with_capacity(2 * p.coeffs().len());
    for a in p.coeffs() {
        c.push(a.clone());
        c.push(Rat::zero());
    }
    c.pop();
    Poly::from_coeffs(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat_frac, rat_i64};

    #[test]
    fn u_to_v_substitution() {
        // u² - 4u  ->  v⁴ - 4v²
        let p = Poly::from_integers(&[0, -4, 1]);
        assert_eq!(poly_u_to_v(&p), Poly::from_integers(&[0, 0, -4, 0, 1]));
    }

    #[test]
    fn d_du_of_k_kernel() {
        // D¹ K0(√u t) = -t K1(√u t)/(2√u)
        let k = BesselCombo::kernel(KernelFamily::K);
        let d = k.d_du();
        assert!(d.c0.is_zero());
        assert_eq!(
            d.c1.coeff(1),
            RatFn::new(Poly::constant(rat_frac(-1, 2)), Poly::x())
        );
    }

    #[test]
    fn identity_operator_keeps_seed() {
        let op = DiffOperator::new(OpVar::T, OpBasis::Plain, vec![Poly::one()]);
        let seed = BesselCombo::kernel_over_t(KernelFamily::K);
        let out = apply_operator(&op, &seed);
        assert_eq!(out, seed);
    }

    #[test]
    fn t_derivative_closure() {
        // d/dt [K0(vt)] = -v K1(vt)
        let k = BesselCombo::kernel(KernelFamily::K);
        let d = k.d_dt();
        assert!(d.c0.is_zero());
        assert_eq!(d.c1.coeff(0), RatFn::from_poly(Poly::monomial(rat_i64(-1), 1)));
    }
}
