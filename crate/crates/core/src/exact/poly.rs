//! Dense univariate polynomials over arbitrary-precision rationals.

use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;

pub type Rat = BigRational;

pub fn rat_i64(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Polynomial with exact rational coefficients; `c[i]` multiplies x^i and
/// the trailing coefficient is kept nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    c: Vec<Rat>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { c: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(Rat::one())
    }

    pub fn x() -> Poly {
        Poly::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    pub fn constant(r: Rat) -> Poly {
        Poly::from_coeffs(vec![r])
    }

    pub fn from_coeffs(c: Vec<Rat>) -> Poly {
        let mut p = Poly { c };
        p.trim();
        p
    }

    pub fn from_integers(c: &[i64]) -> Poly {
        Poly::from_coeffs(c.iter().map(|&n| rat_i64(n)).collect())
    }

    /// c·x^k
    pub fn monomial(coeff: Rat, k: usize) -> Poly {
        let mut c = vec![Rat::zero(); k + 1];
        c[k] = coeff;
        Poly::from_coeffs(c)
    }

    fn trim(&mut self) {
        while self.c.last().map_or(false, |r| r.is_zero()) {
            self.c.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.c.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    pub fn leading(&self) -> Rat {
        self.c.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(self.coeff(i) + o.coeff(i));
        }
        Poly::from_coeffs(c)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            c: self.c.iter().map(|r| -r.clone()).collect(),
        }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Rat::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::from_coeffs(c)
    }

    pub fn scale(&self, r: &Rat) -> Poly {
        Poly::from_coeffs(self.c.iter().map(|a| a * r).collect())
    }

    pub fn derivative(&self) -> Poly {
        if self.c.len() <= 1 {
            return Poly::zero();
        }
        let mut c = Vec::with_capacity(self.c.len() - 1);
        for (i, a) in self.c.iter().enumerate().skip(1) {
            c.push(a * rat_i64(i as i64));
        }
        Poly::from_coeffs(c)
    }

    pub fn pow(&self, mut n: usize) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        acc
    }

    pub fn eval_rat(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for a in self.c.iter().rev() {
            acc = acc * x + rat_to_f64(a);
        }
        acc
    }

    /// Euclidean division: (quotient, remainder).
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.clone();
        let mut q = Poly::zero();
        let dd = d.degree().unwrap();
        let dl = d.leading();
        while !r.is_zero() && r.degree().unwrap() >= dd {
            let shift = r.degree().unwrap() - dd;
            let factor = r.leading() / dl.clone();
            let term = Poly::monomial(factor, shift);
            r = r.sub(&term.mul(d));
            q = q.add(&term);
        }
        (q, r)
    }

    /// Exact division; None if the remainder is nonzero.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, o: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let l = self.leading();
        self.scale(&(Rat::one() / l))
    }

    /// All-integer content-free rendering helper: scale so coefficients are
    /// coprime integers with positive leading coefficient.
    pub fn integer_normalized(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut den_lcm = BigInt::one();
        for a in &self.c {
            den_lcm = num::integer::lcm(den_lcm, a.denom().clone());
        }
        let scaled: Vec<BigInt> = self
            .c
            .iter()
            .map(|a| a.numer() * (&den_lcm / a.denom()))
            .collect();
        let mut g = BigInt::zero();
        for v in &scaled {
            g = num::integer::gcd(g, v.clone());
        }
        if g.is_zero() {
            g = BigInt::one();
        }
        if scaled.last().unwrap().is_negative() {
            g = -g;
        }
        Poly::from_coeffs(
            scaled
                .into_iter()
                .map(|v| Rat::from_integer(v / &g))
                .collect(),
        )
    }
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    use num::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        // Fall back through a quotient of truncated big integers.
        let n = r.numer();
        let d = r.denom();
        let nf = n.to_f64().unwrap_or(f64::MAX);
        let df = d.to_f64().unwrap_or(f64::MAX);
        nf / df
    })
}

/// Human-readable rendering with a named variable, highest power first.
pub fn poly_to_string(p: &Poly, var: &str) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for i in (0..p.coeffs().len()).rev() {
        let a = p.coeff(i);
        if a.is_zero() {
            continue;
        }
        let sign = if a.is_negative() { "-" } else { "+" };
        if out.is_empty() {
            if a.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        let mag = a.abs();
        let coeff_str = if mag.is_one() && i > 0 {
            String::new()
        } else if mag.denom().is_one() {
            format!("{}", mag.numer())
        } else {
            format!("{}/{}", mag.numer(), mag.denom())
        };
        match (coeff_str.is_empty(), i) {
            (true, 1) => out.push_str(var),
            (true, _) => out.push_str(&format!("{var}^{i}")),
            (false, 0) => out.push_str(&coeff_str),
            (false, 1) => out.push_str(&format!("{coeff_str}*{var}")),
            (false, _) => out.push_str(&format!("{coeff_str}*{var}^{i}")),
        }
    }
    out
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", poly_to_string(self, "x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let p = Poly::from_integers(&[1, 2, 1]); // (1+x)^2
        let q = Poly::from_integers(&[1, 1]);
        assert_eq!(q.mul(&q), p);
        assert_eq!(p.div_exact(&q).unwrap(), q);
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn gcd_monic() {
        let a = Poly::from_integers(&[-1, 0, 1]); // x²-1
        let b = Poly::from_integers(&[1, 1]); // x+1
        assert_eq!(a.gcd(&b), b);
    }

    #[test]
    fn derivative_and_eval() {
        let p = Poly::from_integers(&[0, 0, 3]); // 3x²
        assert_eq!(p.derivative(), Poly::from_integers(&[0, 6]));
        assert_eq!(p.eval_f64(2.0), 12.0);
        assert_eq!(p.eval_rat(&rat_i64(2)), rat_i64(12));
    }

    #[test]
    fn rendering() {
        let p = Poly::from_integers(&[-4, 0, 1]);
        assert_eq!(poly_to_string(&p, "u"), "u^2 - 4");
    }
}
