//! Rational functions: reduced quotients of [`Poly`] with monic denominator.

use super::poly::{rat_to_f64, Poly, Rat};
use num::{One, Zero};

#[derive(Clone, PartialEq, Eq)]
pub struct RatFn {
    num: Poly,
    den: Poly,
}

impl RatFn {
    pub fn new(num: Poly, den: Poly) -> RatFn {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let mut r = RatFn { num, den };
        r.reduce();
        r
    }

    pub fn zero() -> RatFn {
        RatFn {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> RatFn {
        RatFn::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> RatFn {
        RatFn {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn from_rat(r: Rat) -> RatFn {
        RatFn::from_poly(Poly::constant(r))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if g.degree().unwrap_or(0) > 0 {
            self.num = self.num.div_exact(&g).expect("gcd divides");
            self.den = self.den.div_exact(&g).expect("gcd divides");
        }
        // Normalize to a monic denominator.
        let lead = self.den.leading();
        if !lead.is_one() {
            let inv = Rat::one() / lead;
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn add(&self, o: &RatFn) -> RatFn {
        RatFn::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn sub(&self, o: &RatFn) -> RatFn {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> RatFn {
        RatFn {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &RatFn) -> RatFn {
        RatFn::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn div(&self, o: &RatFn) -> RatFn {
        assert!(!o.is_zero(), "division by zero rational function");
        RatFn::new(self.num.mul(&o.den), self.den.mul(&o.num))
    }

    pub fn scale(&self, r: &Rat) -> RatFn {
        RatFn {
            num: self.num.scale(r),
            den: self.den.clone(),
        }
    }

    /// Derivative by the quotient rule.
    pub fn derivative(&self) -> RatFn {
        let num = self
            .num
            .derivative()
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.derivative()));
        RatFn::new(num, self.den.mul(&self.den))
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.num.eval_f64(x) / self.den.eval_f64(x)
    }

    pub fn eval_rat(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval_rat(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval_rat(x) / d)
        }
    }

    /// The underlying polynomial when the denominator is trivial.
    pub fn as_poly(&self) -> Option<&Poly> {
        (self.den.degree() == Some(0) && self.den.leading().is_one()).then_some(&self.num)
    }

    /// Reinterpret an even rational function of v as a function of u = v²:
    /// requires every power of v occurring in numerator and denominator to
    /// be even (after clearing a possible common odd shift).
    pub fn even_to_half_variable(&self) -> Option<RatFn> {
        fn compress(p: &Poly) -> Option<Poly> {
            let mut c = Vec::new();
            for (i, a) in p.coeffs().iter().enumerate() {
                if i % 2 == 1 {
                    if !a.is_zero() {
                        return None;
                    }
                } else {
                    c.push(a.clone());
                }
            }
            Some(Poly::from_coeffs(c))
        }
        Some(RatFn::new(compress(&self.num)?, compress(&self.den)?))
    }
}

impl std::fmt::Debug for RatFn {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({:?})/({:?})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::super::poly::rat_i64;
    use super::*;

    #[test]
    fn reduction() {
        // (x²-1)/(x+1) = x-1
        let r = RatFn::new(Poly::from_integers(&[-1, 0, 1]), Poly::from_integers(&[1, 1]));
        assert_eq!(r.as_poly().unwrap(), &Poly::from_integers(&[-1, 1]));
    }

    #[test]
    fn field_ops() {
        let a = RatFn::new(Poly::one(), Poly::from_integers(&[0, 1])); // 1/x
        let b = a.add(&a); // 2/x
        assert_eq!(b.mul(&RatFn::from_poly(Poly::x())).as_poly().unwrap(),
                   &Poly::constant(rat_i64(2)));
        let d = a.derivative(); // -1/x²
        assert_eq!(d.eval_f64(2.0), -0.25);
    }

    #[test]
    fn even_substitution() {
        // (v⁴ - 4v²) as a function of u = v² is u² - 4u
        let r = RatFn::from_poly(Poly::from_integers(&[0, 0, -4, 0, 1]));
        let u = r.even_to_half_variable().unwrap();
        assert_eq!(u.as_poly().unwrap(), &Poly::from_integers(&[0, -4, 1]));
        // odd powers refuse
        let odd = RatFn::from_poly(Poly::from_integers(&[0, 1]));
        assert!(odd.even_to_half_variable().is_none());
    }
}
