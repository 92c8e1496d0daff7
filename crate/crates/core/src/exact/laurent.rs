//! Laurent polynomials in t whose coefficients are rational functions of a
//! second variable (v = √u here).  This is exactly the coefficient algebra
//! in which Bessel kernels are closed under d/dt, d/du, multiplication by
//! polynomials in t, and division by t.

use super::poly::{Poly, Rat};
use super::ratfunc::RatFn;
use num::Zero;

/// Σ_i c[i] · t^{min_deg + i}, coefficients rational in v.
#[derive(Clone, PartialEq)]
pub struct Laurent {
    min_deg: i64,
    c: Vec<RatFn>,
}

impl Laurent {
    pub fn zero() -> Laurent {
        Laurent {
            min_deg: 0,
            c: Vec::new(),
        }
    }

    /// coeff · t^deg
    pub fn term(coeff: RatFn, deg: i64) -> Laurent {
        let mut l = Laurent {
            min_deg: deg,
            c: vec![coeff],
        };
        l.trim();
        l
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn trim(&mut self) {
        while self.c.last().map_or(false, |r| r.is_zero()) {
            self.c.pop();
        }
        while self.c.first().map_or(false, |r| r.is_zero()) {
            self.c.remove(0);
            self.min_deg += 1;
        }
        if self.c.is_empty() {
            self.min_deg = 0;
        }
    }

    pub fn coeff(&self, deg: i64) -> RatFn {
        if deg < self.min_deg {
            return RatFn::zero();
        }
        let i = (deg - self.min_deg) as usize;
        self.c.get(i).cloned().unwrap_or_else(RatFn::zero)
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        (0..self.c.len()).map(move |i| self.min_deg + i as i64)
    }

    pub fn min_degree(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.min_deg)
    }

    pub fn max_degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.min_deg + self.c.len() as i64 - 1)
    }

    pub fn add(&self, o: &Laurent) -> Laurent {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let lo = self.min_deg.min(o.min_deg);
        let hi = (self.min_deg + self.c.len() as i64).max(o.min_deg + o.c.len() as i64);
        let mut c = Vec::with_capacity((hi - lo) as usize);
        for d in lo..hi {
            c.push(self.coeff(d).add(&o.coeff(d)));
        }
        let mut l = Laurent { min_deg: lo, c };
        l.trim();
        l
    }

    pub fn sub(&self, o: &Laurent) -> Laurent {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Laurent {
        Laurent {
            min_deg: self.min_deg,
            c: self.c.iter().map(|r| r.neg()).collect(),
        }
    }

    /// Multiply by t^k.
    pub fn shift(&self, k: i64) -> Laurent {
        if self.is_zero() {
            return Laurent::zero();
        }
        Laurent {
            min_deg: self.min_deg + k,
            c: self.c.clone(),
        }
    }

    /// Multiply every coefficient by a rational function of v.
    pub fn scale(&self, r: &RatFn) -> Laurent {
        if r.is_zero() {
            return Laurent::zero();
        }
        let mut l = Laurent {
            min_deg: self.min_deg,
            c: self.c.iter().map(|a| a.mul(r)).collect(),
        };
        l.trim();
        l
    }

    /// Multiply by a polynomial in t with rational coefficients.
    pub fn mul_t_poly(&self, p: &Poly) -> Laurent {
        let mut acc = Laurent::zero();
        for (k, a) in p.coeffs().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            acc = acc.add(&self.shift(k as i64).scale(&RatFn::from_rat(a.clone())));
        }
        acc
    }

    /// d/dt, treating coefficients as t-constants.
    pub fn d_dt(&self) -> Laurent {
        let mut acc = Laurent::zero();
        for d in self.degrees() {
            if d == 0 {
                continue;
            }
            let c = self.coeff(d).scale(&Rat::from_integer(d.into()));
            acc = acc.add(&Laurent::term(c, d - 1));
        }
        acc
    }

    /// Map every coefficient (used for ∂/∂v and u-derivatives).
    pub fn map_coeffs(&self, f: impl Fn(&RatFn) -> RatFn) -> Laurent {
        let mut l = Laurent {
            min_deg: self.min_deg,
            c: self.c.iter().map(|a| f(a)).collect(),
        };
        l.trim();
        l
    }

    /// Evaluate to a plain f64 polynomial-in-t pair (min_deg, coefficients)
    /// at a fixed v.
    pub fn eval_coeffs_f64(&self, v: f64) -> (i64, Vec<f64>) {
        (
            self.min_deg,
            self.c.iter().map(|a| a.eval_f64(v)).collect(),
        )
    }
}

impl std::fmt::Debug for Laurent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .degrees()
            .filter(|&d| !self.coeff(d).is_zero())
            .map(|d| format!("[{:?}]·t^{}", self.coeff(d), d))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::super::poly::rat_i64;
    use super::*;

    #[test]
    fn shift_and_derivative() {
        // t^{-1}: d/dt -> -t^{-2}
        let l = Laurent::term(RatFn::one(), -1);
        let d = l.d_dt();
        assert_eq!(d.coeff(-2), RatFn::from_rat(rat_i64(-1)));
        assert!(d.coeff(-1).is_zero());
    }

    #[test]
    fn mul_poly() {
        // (t + 2)·t^{-1} = 1 + 2 t^{-1}
        let l = Laurent::term(RatFn::one(), -1);
        let p = Poly::from_integers(&[2, 1]);
        let r = l.mul_t_poly(&p);
        assert_eq!(r.coeff(0), RatFn::one());
        assert_eq!(r.coeff(-1), RatFn::from_rat(rat_i64(2)));
    }
}
