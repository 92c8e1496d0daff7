//! Exact symbolic operator calculus: differential operators with
//! arbitrary-precision rational polynomial coefficients, in the θ = x·d/dx
//! or plain d/dx derivative basis, over the variable t or u.

mod bmw;
mod combo;
mod vanhove;

pub use bmw::bmw_symmetric_power;
pub use combo::{BesselCombo, KernelFamily};
pub use vanhove::{derive_vanhove, mathfrak_poly, MathfrakKind, VanhovePair};

use crate::exact::{poly_to_string, rat_i64, Poly, Rat};
use num::{One, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OpVar {
    T,
    U,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OpBasis {
    /// Powers of θ = x d/dx.
    Theta,
    /// Powers of d/dx.
    Plain,
}

/// Σ_j coeffs[j](x) · D^j with D the basis derivation; the trailing
/// coefficient is nonzero and all arithmetic is exact.
#[derive(Clone, PartialEq)]
pub struct DiffOperator {
    pub variable: OpVar,
    pub basis: OpBasis,
    coeffs: Vec<Poly>,
}

impl DiffOperator {
    pub fn new(variable: OpVar, basis: OpBasis, mut coeffs: Vec<Poly>) -> DiffOperator {
        while coeffs.last().map_or(false, |p| p.is_zero()) {
            coeffs.pop();
        }
        DiffOperator {
            variable,
            basis,
            coeffs,
        }
    }

    /// Operator order (highest derivative); None for the zero operator.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, j: usize) -> Poly {
        self.coeffs.get(j).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    /// Left-compose with θ: returns θ∘self (θ basis only).
    /// θ∘(p θ^j) = x p' θ^j + p θ^{j+1}.
    pub fn theta_compose_left(&self) -> DiffOperator {
        assert_eq!(self.basis, OpBasis::Theta);
        let n = self.coeffs.len();
        let mut out = vec![Poly::zero(); n + 1];
        for (j, p) in self.coeffs.iter().enumerate() {
            out[j] = out[j].add(&Poly::x().mul(&p.derivative()));
            out[j + 1] = out[j + 1].add(p);
        }
        DiffOperator::new(self.variable, OpBasis::Theta, out)
    }

    pub fn add(&self, o: &DiffOperator) -> DiffOperator {
        assert_eq!(self.basis, o.basis);
        assert_eq!(self.variable, o.variable);
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for j in 0..n {
            out.push(self.coeff(j).add(&o.coeff(j)));
        }
        DiffOperator::new(self.variable, self.basis, out)
    }

    pub fn scale_poly(&self, p: &Poly) -> DiffOperator {
        DiffOperator::new(
            self.variable,
            self.basis,
            self.coeffs.iter().map(|c| c.mul(p)).collect(),
        )
    }

    /// θ-basis → plain basis via θ^j = Σ_i S(j,i) x^i ∂^i (Stirling numbers
    /// of the second kind).
    pub fn theta_to_plain(&self) -> DiffOperator {
        assert_eq!(self.basis, OpBasis::Theta);
        let order = self.coeffs.len();
        let s2 = stirling2(order);
        let mut out = vec![Poly::zero(); order];
        for (j, p) in self.coeffs.iter().enumerate() {
            for i in 0..=j {
                let s = &s2[j][i];
                if s.is_zero() {
                    continue;
                }
                out[i] = out[i].add(&p.mul(&Poly::monomial(s.clone(), i)));
            }
        }
        DiffOperator::new(self.variable, OpBasis::Plain, out)
    }

    /// Plain basis → θ basis; requires x^i to divide the coefficient of ∂^i
    /// (true for every operator born in the θ basis).
    pub fn plain_to_theta(&self) -> Option<DiffOperator> {
        assert_eq!(self.basis, OpBasis::Plain);
        let order = self.coeffs.len();
        let s1 = stirling1_signed(order);
        let mut out = vec![Poly::zero(); order];
        for (i, q) in self.coeffs.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let r = q.div_exact(&Poly::monomial(Rat::one(), i))?;
            for j in 0..=i {
                let s = &s1[i][j];
                if s.is_zero() {
                    continue;
                }
                out[j] = out[j].add(&r.scale(s));
            }
        }
        Some(DiffOperator::new(self.variable, OpBasis::Theta, out))
    }

    /// Formal adjoint Σ (-1)^k ∂^k ∘ (λ_k ·), expanded back to plain form:
    /// the coefficient of ∂^j becomes Σ_{k≥j} (-1)^k C(k,j) λ_k^{(k-j)}.
    pub fn formal_adjoint(&self) -> DiffOperator {
        assert_eq!(self.basis, OpBasis::Plain, "adjoint expects the plain basis");
        let order = self.coeffs.len();
        let mut out = vec![Poly::zero(); order];
        for (k, lam) in self.coeffs.iter().enumerate() {
            if lam.is_zero() {
                continue;
            }
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let mut deriv = lam.clone();
            // j = k down to 0 with successive derivatives of λ_k.
            for j in (0..=k).rev() {
                let c = binomial(k, j) * rat_i64(sign);
                out[j] = out[j].add(&deriv.scale(&c));
                if j > 0 {
                    deriv = deriv.derivative();
                }
            }
        }
        DiffOperator::new(self.variable, OpBasis::Plain, out)
    }

    /// Paper-style rendering: polynomial coefficients against powers of the
    /// derivation symbol (D for plain, Θ for theta).
    pub fn pretty(&self) -> String {
        let var = match self.variable {
            OpVar::T => "t",
            OpVar::U => "u",
        };
        let dsym = match self.basis {
            OpBasis::Theta => "Θ",
            OpBasis::Plain => "D",
        };
        let mut parts = Vec::new();
        for j in (0..self.coeffs.len()).rev() {
            let p = self.coeff(j);
            if p.is_zero() {
                continue;
            }
            let coeff = poly_to_string(&p, var);
            let wrapped = if coeff.contains(' ') {
                format!("({coeff})")
            } else {
                coeff
            };
            match j {
                0 => parts.push(wrapped),
                1 => parts.push(format!("{wrapped}*{dsym}")),
                _ => parts.push(format!("{wrapped}*{dsym}^{j}")),
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl std::fmt::Debug for DiffOperator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

fn binomial(n: usize, k: usize) -> Rat {
    let mut r = Rat::one();
    for i in 0..k {
        r = r * rat_i64((n - i) as i64) / rat_i64((i + 1) as i64);
    }
    r
}

/// Stirling numbers of the second kind S(n,k) for n,k < size.
fn stirling2(size: usize) -> Vec<Vec<Rat>> {
    let mut s = vec![vec![Rat::zero(); size]; size];
    s[0][0] = Rat::one();
    for n in 1..size {
        for k in 1..=n {
            let t = s[n - 1][k].clone() * rat_i64(k as i64) + s[n - 1][k - 1].clone();
            s[n][k] = t;
        }
    }
    s
}

/// Signed Stirling numbers of the first kind: x(x-1)…(x-n+1) = Σ s(n,k) x^k.
fn stirling1_signed(size: usize) -> Vec<Vec<Rat>> {
    let mut s = vec![vec![Rat::zero(); size]; size];
    s[0][0] = Rat::one();
    for n in 1..size {
        for k in 0..=n {
            let a = if k > 0 { s[n - 1][k - 1].clone() } else { Rat::zero() };
            let b = s[n - 1][k].clone() * rat_i64((n - 1) as i64);
            s[n][k] = a - b;
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_plain_roundtrip() {
        // θ² - t² in the θ basis
        let op = DiffOperator::new(
            OpVar::T,
            OpBasis::Theta,
            vec![Poly::from_integers(&[0, 0, -1]), Poly::zero(), Poly::one()],
        );
        let plain = op.theta_to_plain();
        // θ² = t∂ + t²∂²  =>  coefficients (-t², t, t²)
        assert_eq!(plain.coeff(0), Poly::from_integers(&[0, 0, -1]));
        assert_eq!(plain.coeff(1), Poly::x());
        assert_eq!(plain.coeff(2), Poly::from_integers(&[0, 0, 1]));
        let back = plain.plain_to_theta().unwrap();
        assert_eq!(back, op);
    }

    #[test]
    fn adjoint_is_involution() {
        let op = DiffOperator::new(
            OpVar::T,
            OpBasis::Plain,
            vec![
                Poly::from_integers(&[1, 0, 3]),
                Poly::from_integers(&[0, 2]),
                Poly::from_integers(&[5, 0, 0, 1]),
            ],
        );
        assert_eq!(op.formal_adjoint().formal_adjoint(), op);
    }

    #[test]
    fn adjoint_of_order_zero_is_identity() {
        let op = DiffOperator::new(OpVar::T, OpBasis::Plain, vec![Poly::from_integers(&[7, 1])]);
        assert_eq!(op.formal_adjoint(), op);
    }
}
