//! Exact q-expansions of the two eta products via the pentagonal-number
//! theorem and Jacobi's cube identity: every coefficient is an exact i64,
//! and the leading q-power bookkeeping makes a₁ the first coefficient.

use crate::error::{Error, Result};

/// The two newforms appearing in the determinant conjectures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EtaForm {
    /// [η(3z)η(5z)]³ + [η(z)η(15z)]³ — weight 3, level 15.
    F3_15,
    /// [η(z)η(2z)η(3z)η(6z)]² — weight 4, level 6.
    F4_6,
}

impl EtaForm {
    pub fn weight(self) -> u32 {
        match self {
            EtaForm::F3_15 => 3,
            EtaForm::F4_6 => 4,
        }
    }

    pub fn level(self) -> u32 {
        match self {
            EtaForm::F3_15 => 15,
            EtaForm::F4_6 => 6,
        }
    }
}

/// q-expansion coefficients a_1..a_N (exact integers).
#[derive(Clone, Debug)]
pub struct QSeries {
    coeffs: Vec<i64>,
}

impl QSeries {
    /// a_n for 1 <= n <= N.
    pub fn a(&self, n: usize) -> i64 {
        self.coeffs[n - 1]
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }
}

const N_CAP: usize = 4_000_000;

/// Sparse series Π_{n>=1} (1 - q^{m n}) by the pentagonal-number theorem:
/// exponents m·g(3g-1)/2, g ∈ ℤ, coefficients (-1)^g.
fn euler_sparse(m: usize, n_max: usize) -> Vec<(usize, i64)> {
    let mut v = vec![(0usize, 1i64)];
    let mut g: i64 = 1;
    loop {
        let mut hit = false;
        for gg in [g, -g] {
            let e = gg * (3 * gg - 1) / 2;
            let e = m * e as usize;
            if e <= n_max {
                v.push((e, if g % 2 == 0 { 1 } else { -1 }));
                hit = true;
            }
        }
        if !hit {
            break;
        }
        g += 1;
    }
    v.sort_unstable();
    v
}

/// Sparse series Π (1 - q^{m n})³ = Σ_{k>=0} (-1)^k (2k+1) q^{m·k(k+1)/2}.
fn jacobi_cube_sparse(m: usize, n_max: usize) -> Vec<(usize, i64)> {
    let mut v = Vec::new();
    let mut k: usize = 0;
    loop {
        let e = m * (k * (k + 1) / 2);
        if e > n_max {
            break;
        }
        let c = (2 * k + 1) as i64;
        v.push((e, if k % 2 == 0 { c } else { -c }));
        k += 1;
    }
    v
}

fn sparse_product_into(dense: &mut [i64], a: &[(usize, i64)], b: &[(usize, i64)], shift: usize) {
    let n = dense.len();
    for &(ea, ca) in a {
        let base = ea + shift;
        if base >= n {
            continue;
        }
        for &(eb, cb) in b {
            let e = base + eb;
            if e < n {
                dense[e] += ca * cb;
            } else {
                break;
            }
        }
    }
}

fn mul_dense_by_sparse(dense: &[i64], sparse: &[(usize, i64)]) -> Vec<i64> {
    let n = dense.len();
    let mut out = vec![0i64; n];
    for &(e, c) in sparse {
        if e >= n {
            break;
        }
        for i in 0..n - e {
            out[i + e] += c * dense[i];
        }
    }
    out
}

/// Exact q-coefficients a_1..a_N of the given eta product.
pub fn eta_q_expansion(form: EtaForm, n_terms: usize) -> Result<QSeries> {
    if n_terms == 0 || n_terms > N_CAP {
        return Err(Error::Domain(format!(
            "q-expansion length must lie in 1..={N_CAP}, got {n_terms}"
        )));
    }
    // Work with exponents of q up to n_terms inclusive; index = exponent.
    let n = n_terms + 1;
    let coeffs = match form {
        EtaForm::F3_15 => {
            // q·J(q³)J(q⁵) + q²·J(q)J(q¹⁵)
            let mut dense = vec![0i64; n];
            let j3 = jacobi_cube_sparse(3, n - 1);
            let j5 = jacobi_cube_sparse(5, n - 1);
            sparse_product_into(&mut dense, &j3, &j5, 1);
            let j1 = jacobi_cube_sparse(1, n - 1);
            let j15 = jacobi_cube_sparse(15, n - 1);
            sparse_product_into(&mut dense, &j1, &j15, 2);
            dense
        }
        EtaForm::F4_6 => {
            // q·[E(q)E(q²)E(q³)E(q⁶)]²
            let e1 = euler_sparse(1, n - 1);
            let e2 = euler_sparse(2, n - 1);
            let e3 = euler_sparse(3, n - 1);
            let e6 = euler_sparse(6, n - 1);
            let mut dense = vec![0i64; n];
            sparse_product_into(&mut dense, &e1, &e1, 1);
            for s in [&e2, &e2, &e3, &e3, &e6, &e6] {
                dense = mul_dense_by_sparse(&dense, s);
            }
            dense
        }
    };
    let out = QSeries {
        coeffs: coeffs[1..].to_vec(),
    };
    if out.a(1) != 1 {
        return Err(Error::Inconsistent(format!(
            "normalized newform must have a1 = 1, got {}",
            out.a(1)
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leading_coefficients() {
        let f = eta_q_expansion(EtaForm::F4_6, 12).unwrap();
        assert_eq!(f.a(1), 1);
        // Multiplicativity: a(6) = a(2)a(3) for the level-6 newform.
        assert_eq!(f.a(6), f.a(2) * f.a(3));
        let g = eta_q_expansion(EtaForm::F3_15, 12).unwrap();
        assert_eq!(g.a(1), 1);
        assert_eq!(g.a(6), g.a(2) * g.a(3));
    }

    #[test]
    fn pentagonal_series_is_sparse_and_signed() {
        // 1 - q - q² + q⁵ + q⁷ - q¹² - …
        let e = euler_sparse(1, 15);
        let mut dense = vec![0i64; 16];
        for (ee, c) in e {
            dense[ee] += c;
        }
        assert_eq!(&dense[..8], &[1, -1, -1, 0, 0, 1, 0, 1]);
        assert_eq!(dense[12], -1);
    }

    #[test]
    fn jacobi_cube_matches_triple_product() {
        // Direct cube of the pentagonal series agrees with the identity.
        let n = 60;
        let e = euler_sparse(1, n);
        let mut dense = vec![0i64; n + 1];
        sparse_product_into(&mut dense, &e, &[(0, 1)], 0);
        let mut cube = vec![0i64; n + 1];
        sparse_product_into(&mut cube, &e, &e, 0);
        let cube = mul_dense_by_sparse(&cube, &e);
        let jac = jacobi_cube_sparse(1, n);
        let mut jd = vec![0i64; n + 1];
        for (ee, c) in jac {
            jd[ee] += c;
        }
        assert_eq!(cube, jd);
    }
}
