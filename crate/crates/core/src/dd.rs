//! Double-double ("pair") arithmetic built on error-free transformations.
//!
//! A [`Dd`] stores a value as an unevaluated sum `hi + lo` of two `f64`s with
//! `|lo| <= ulp(hi)/2`, giving roughly 32 significant decimal digits.  This is
//! the extended mode used by accumulation-sensitive code: determinant
//! elimination, extrapolation tables, cancellation-prone kernel series, and
//! the gamma function.

use std::cmp::Ordering;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Double-double number `hi + lo`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

/// Error-free sum: returns `(s, e)` with `s = fl(a + b)` and `a + b = s + e` exactly.
#[inline]
pub fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// Error-free sum assuming `|a| >= |b|`.
#[inline]
pub fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

/// Error-free product via fused multiply-add.
#[inline]
pub fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn new(hi: f64, lo: f64) -> Dd {
        let (s, e) = quick_two_sum(hi, lo);
        Dd { hi: s, lo: e }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }

    /// Exact product of two `f64`s as a `Dd`.
    #[inline]
    pub fn prod(a: f64, b: f64) -> Dd {
        let (p, e) = two_prod(a, b);
        Dd { hi: p, lo: e }
    }

    #[inline]
    pub fn add_f64(self, b: f64) -> Dd {
        let (s1, e1) = two_sum(self.hi, b);
        let (s, e) = quick_two_sum(s1, e1 + self.lo);
        Dd { hi: s, lo: e }
    }

    #[inline]
    pub fn mul_f64(self, b: f64) -> Dd {
        let (p, e) = two_prod(self.hi, b);
        let (s, e2) = quick_two_sum(p, e + self.lo * b);
        Dd { hi: s, lo: e2 }
    }

    #[inline]
    pub fn div_f64(self, b: f64) -> Dd {
        self / Dd::from_f64(b)
    }

    pub fn powi(self, n: i32) -> Dd {
        if n == 0 {
            return Dd::ONE;
        }
        let mut base = if n < 0 { Dd::ONE / self } else { self };
        let mut k = n.unsigned_abs();
        let mut acc = Dd::ONE;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            k >>= 1;
        }
        acc
    }

    pub fn sqrt(self) -> Dd {
        if self.hi == 0.0 {
            return Dd::ZERO;
        }
        // One Newton step on a double-precision seed doubles its accuracy.
        let y = self.hi.sqrt();
        let yd = Dd::from_f64(y);
        (yd + self / yd).mul_f64(0.5)
    }

    /// exp(self) with ~31 digit accuracy for |self| <= ~690.
    pub fn exp(self) -> Dd {
        let ln2 = dd_ln2();
        let k = (self.hi / std::f64::consts::LN_2).round();
        let r = self - ln2.mul_f64(k);
        // Taylor series; |r| <= ln2/2 so ~24 terms reach 1e-33.
        let mut term = Dd::ONE;
        let mut sum = Dd::ONE;
        for i in 1..=26 {
            term = term * r;
            term = term.div_f64(i as f64);
            sum = sum + term;
            if term.hi.abs() < 1e-35 * sum.hi.abs() {
                break;
            }
        }
        // Scale by 2^k exactly.
        let scale = Dd::from_f64(2f64.powi(k as i32));
        sum * scale
    }

    /// Natural log via one Newton correction of the double-precision log.
    pub fn ln(self) -> Dd {
        debug_assert!(self.hi > 0.0);
        let y0 = Dd::from_f64(self.hi.ln());
        // y <- y + x*exp(-y) - 1
        y0 + self * (-y0).exp() - Dd::ONE
    }

    /// Parse a decimal literal (digits, optional point and sign) to full
    /// double-double precision.  Used for mathematical constants.
    pub fn from_decimal_str(s: &str) -> Dd {
        let s = s.trim();
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let mut acc = Dd::ZERO;
        let mut frac_digits: i32 = 0;
        let mut seen_point = false;
        for ch in body.chars() {
            match ch {
                '.' => seen_point = true,
                '0'..='9' => {
                    acc = acc.mul_f64(10.0).add_f64((ch as u8 - b'0') as f64);
                    if seen_point {
                        frac_digits += 1;
                    }
                }
                _ => panic!("invalid decimal constant: {s}"),
            }
        }
        if frac_digits > 0 {
            acc = acc / Dd::from_f64(10.0).powi(frac_digits);
        }
        if neg {
            -acc
        } else {
            acc
        }
    }
}

fn dd_ln2() -> Dd {
    // ln 2 to 40 digits.
    Dd::from_decimal_str("0.6931471805599453094172321214581765680755")
}

impl Add for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, o: Dd) -> Dd {
        let (s1, e1) = two_sum(self.hi, o.hi);
        let (s2, e2) = two_sum(self.lo, o.lo);
        let (s, mut e) = quick_two_sum(s1, e1 + s2);
        e += e2;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, o: Dd) -> Dd {
        self + (-o)
    }
}

impl Neg for Dd {
    type Output = Dd;
    #[inline]
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Mul for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, o: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, o.hi);
        let e = e + (self.hi * o.lo + self.lo * o.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    #[inline]
    fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self - o.mul_f64(q1);
        let q2 = r.hi / o.hi;
        let r2 = r - o.mul_f64(q2);
        let q3 = r2.hi / o.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Dd::new(s, e + q3)
    }
}

impl PartialOrd for Dd {
    fn partial_cmp(&self, o: &Dd) -> Option<Ordering> {
        match self.hi.partial_cmp(&o.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&o.lo),
            other => other,
        }
    }
}

/// Compensated (Kahan) accumulator for plain `f64` sums.
#[derive(Clone, Copy, Debug, Default)]
pub struct Kahan {
    sum: f64,
    c: f64,
}

impl Kahan {
    #[inline]
    pub fn add(&mut self, x: f64) {
        let y = x - self.c;
        let t = self.sum + y;
        self.c = (t - self.sum) - y;
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_sum_exact() {
        let (s, e) = two_sum(1.0, 1e-20);
        assert_eq!(s, 1.0);
        assert_eq!(e, 1e-20);
    }

    #[test]
    fn mul_div_roundtrip() {
        let a = Dd::from_f64(std::f64::consts::PI);
        let b = Dd::from_f64(std::f64::consts::E);
        let c = a * b / b;
        assert!((c - a).abs().to_f64() < 1e-30);
    }

    #[test]
    fn exp_ln_roundtrip() {
        for &x in &[0.1, 1.0, 2.5, 10.0, 100.0, 650.0] {
            let d = Dd::from_f64(x);
            let r = d.exp().ln();
            assert!(
                (r - d).abs().to_f64() < 1e-28 * x.max(1.0),
                "x={x} r={:?}",
                r
            );
        }
    }

    #[test]
    fn decimal_parse() {
        let d = Dd::from_decimal_str("0.5");
        assert_eq!(d.hi, 0.5);
        assert_eq!(d.lo, 0.0);
        let t = Dd::from_decimal_str("0.1");
        assert!((t.to_f64() - 0.1).abs() < 1e-17);
        assert!(t.lo != 0.0, "0.1 needs a correction term");
    }

    #[test]
    fn sqrt_newton() {
        let two = Dd::from_f64(2.0);
        let r = two.sqrt();
        assert!((r * r - two).abs().to_f64() < 1e-30);
    }
}
