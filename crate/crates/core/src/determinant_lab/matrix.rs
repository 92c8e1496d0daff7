//! The k×k moment matrices, their determinants (LU in pair arithmetic with
//! a cofactor cross-check), the closed-form products, and the recursions
//! that link consecutive sizes.

use crate::dd::Dd;
use crate::error::{Error, Result};
use crate::kernels::gamma_fn;
use crate::moments::{MomentSpec, Moments};
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixKind {
    /// (M_k)_{a,b} = IKM(a, 2k+1-a; 2b-1)
    M,
    /// (N_k)_{a,b} = IKM(a, 2k+2-a; 2b-1)
    N,
    /// Vacuum variant: rows (IKM(0,5;1), IKM(0,5;3)) and (IKM(2,3;1), IKM(2,3;3)).
    MCheck2,
    /// Vacuum variant: rows (IKM(0,6;1), IKM(0,6;3)) and (IKM(2,4;1), IKM(2,4;3)).
    NCheck2,
}

#[derive(Clone, Debug)]
pub struct MomentMatrix {
    pub kind: MatrixKind,
    pub k: usize,
    pub entries: Vec<Vec<f64>>,
    pub entry_errs: Vec<Vec<f64>>,
    pub entry_specs: Vec<Vec<MomentSpec>>,
}

pub fn build_matrix(
    moments: &Moments,
    kind: MatrixKind,
    k: usize,
    rel_tol: f64,
) -> Result<MomentMatrix> {
    let specs: Vec<Vec<MomentSpec>> = match kind {
        MatrixKind::M => {
            if !(1..=4).contains(&k) {
                return Err(Error::Domain("M_k supported for 1 <= k <= 4".into()));
            }
            (1..=k)
                .map(|a| {
                    (1..=k)
                        .map(|b| {
                            MomentSpec::plain(a as u32, (2 * k + 1 - a) as u32, (2 * b - 1) as u32)
                        })
                        .collect()
                })
                .collect()
        }
        MatrixKind::N => {
            if !(1..=4).contains(&k) {
                return Err(Error::Domain("N_k supported for 1 <= k <= 4".into()));
            }
            (1..=k)
                .map(|a| {
                    (1..=k)
                        .map(|b| {
                            MomentSpec::plain(a as u32, (2 * k + 2 - a) as u32, (2 * b - 1) as u32)
                        })
                        .collect()
                })
                .collect()
        }
        MatrixKind::MCheck2 => {
            if k != 2 {
                return Err(Error::Domain("the vacuum variant is 2x2 only".into()));
            }
            vec![
                vec![MomentSpec::plain(0, 5, 1), MomentSpec::plain(0, 5, 3)],
                vec![MomentSpec::plain(2, 3, 1), MomentSpec::plain(2, 3, 3)],
            ]
        }
        MatrixKind::NCheck2 => {
            if k != 2 {
                return Err(Error::Domain("the vacuum variant is 2x2 only".into()));
            }
            vec![
                vec![MomentSpec::plain(0, 6, 1), MomentSpec::plain(0, 6, 3)],
                vec![MomentSpec::plain(2, 4, 1), MomentSpec::plain(2, 4, 3)],
            ]
        }
    };
    // Entries are independent integrals; evaluate them in parallel and
    // reassemble in index order.
    let flat: Result<Vec<(f64, f64)>> = specs
        .par_iter()
        .flat_map(|row| row.par_iter())
        .map(|s| moments.eval(s, rel_tol).map(|m| (m.value, m.err)))
        .collect();
    let flat = flat?;
    let n = specs.len();
    let entries: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| flat[i * n + j].0).collect())
        .collect();
    let entry_errs: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| flat[i * n + j].1).collect())
        .collect();
    Ok(MomentMatrix {
        kind,
        k,
        entries,
        entry_errs,
        entry_specs: specs,
    })
}

impl MomentMatrix {
    pub fn det(&self) -> f64 {
        det_dd(&self.entries)
    }
}

/// Determinant via LU with partial pivoting, accumulated in pair
/// arithmetic.  Debug builds cross-check against cofactor expansion.
pub fn det_dd(m: &[Vec<f64>]) -> f64 {
    det_dd_inner(m)
}

fn det_dd_inner(m: &[Vec<f64>]) -> f64 {
    let v = lu_det_dd(m);
    debug_assert!(
        {
            let c = det_cofactor(m);
            (v - c).abs() <= 1e-12 * c.abs().max(1e-300) || (v - c).abs() < 1e-25
        },
        "LU/cofactor determinant mismatch"
    );
    v
}

fn lu_det_dd(m: &[Vec<f64>]) -> f64 {
    let n = m.len();
    let mut a: Vec<Vec<Dd>> = m
        .iter()
        .map(|row| row.iter().map(|&x| Dd::from_f64(x)).collect())
        .collect();
    let mut det = Dd::ONE;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| {
                a[i][col]
                    .abs()
                    .to_f64()
                    .partial_cmp(&a[j][col].abs().to_f64())
                    .unwrap()
            })
            .unwrap();
        if a[pivot][col].to_f64() == 0.0 {
            return 0.0;
        }
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        det = det * a[col][col];
        for r in col + 1..n {
            let f = a[r][col] / a[col][col];
            for c in col..n {
                let sub = f * a[col][c];
                a[r][c] = a[r][c] - sub;
            }
        }
    }
    det.to_f64()
}

/// Cofactor expansion in pair arithmetic (exponential cost; cross-check for
/// the small sizes used here).
pub fn det_cofactor(m: &[Vec<f64>]) -> f64 {
    fn go(m: &[Vec<Dd>]) -> Dd {
        let n = m.len();
        if n == 1 {
            return m[0][0];
        }
        let mut acc = Dd::ZERO;
        for j in 0..n {
            if m[0][j].to_f64() == 0.0 {
                continue;
            }
            let minor: Vec<Vec<Dd>> = (1..n)
                .map(|r| {
                    (0..n)
                        .filter(|&c| c != j)
                        .map(|c| m[r][c])
                        .collect()
                })
                .collect();
            let term = m[0][j] * go(&minor);
            acc = if j % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }
    let a: Vec<Vec<Dd>> = m
        .iter()
        .map(|row| row.iter().map(|&x| Dd::from_f64(x)).collect())
        .collect();
    go(&a).to_f64()
}

/// Closed form Π_{j=1..k} (2j)^{k-j} π^j / sqrt((2j+1)^{2j+1}).
pub fn det_closed_m(k: usize) -> Result<f64> {
    if k == 0 {
        return Err(Error::Domain("k >= 1".into()));
    }
    let mut acc = 1.0f64;
    for j in 1..=k {
        let tj = (2 * j) as f64;
        acc *= tj.powi((k - j) as i32) * std::f64::consts::PI.powi(j as i32)
            / (tj + 1.0).powf((2 * j + 1) as f64 / 2.0);
    }
    Ok(acc)
}

/// Closed form 2 π^{(k+1)²/2} / Γ((k+1)/2) · Π_{j=1..k+1} (2j-1)^{k+1-j} / (2j)^j.
pub fn det_closed_n(k: usize) -> Result<f64> {
    if k == 0 {
        return Err(Error::Domain("k >= 1".into()));
    }
    let kp = k + 1;
    let mut acc = 2.0 * std::f64::consts::PI.powf((kp * kp) as f64 / 2.0)
        / gamma_fn(kp as f64 / 2.0)?;
    for j in 1..=kp {
        acc *= ((2 * j - 1) as f64).powi((kp - j) as i32) / ((2 * j) as f64).powi(j as i32);
    }
    Ok(acc)
}

/// Residual of the determinant recursion at size k (numeric determinants on
/// both sides, no closed forms).  Returns (lhs, rhs).
pub fn check_recursion(
    moments: &Moments,
    kind: MatrixKind,
    k: usize,
    rel_tol: f64,
) -> Result<(f64, f64)> {
    if k < 2 {
        return Err(Error::Domain("recursions start at k = 2".into()));
    }
    match kind {
        MatrixKind::M => {
            let mk = build_matrix(moments, MatrixKind::M, k, rel_tol)?.det();
            let mk1 = build_matrix(moments, MatrixKind::M, k - 1, rel_tol)?.det();
            let nk1 = build_matrix(moments, MatrixKind::N, k - 1, rel_tol)?.det();
            let g = gamma_fn(k as f64 / 2.0)?;
            let mut rhs = k as f64 * g * g * nk1 * nk1 / (2.0 * (2 * k + 1) as f64);
            for j in 1..=k {
                let s = ((2 * j) * (2 * j)) as f64;
                rhs *= (s / (s - 1.0)).powf(k as f64 - 0.5);
            }
            Ok((mk1 * mk, rhs))
        }
        MatrixKind::N => {
            let nk = build_matrix(moments, MatrixKind::N, k, rel_tol)?.det();
            let nk1 = build_matrix(moments, MatrixKind::N, k - 1, rel_tol)?.det();
            let mk = build_matrix(moments, MatrixKind::M, k, rel_tol)?.det();
            let mut fact = 1.0;
            for j in 1..k {
                fact *= j as f64;
            }
            let mut rhs = (2 * k + 1) as f64 / (k + 1) as f64 * mk * mk / fact;
            for j in 2..=k + 1 {
                let s = ((2 * j - 1) * (2 * j - 1)) as f64;
                rhs *= (s / (s - 1.0)).powi(k as i32);
            }
            Ok((nk1 * nk, rhs))
        }
        _ => Err(Error::Domain("recursions are defined for the M/N families".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms_small() {
        // det M_1 = π/(3√3), det N_1 = π²/16
        let m1 = det_closed_m(1).unwrap();
        assert!((m1 - std::f64::consts::PI / (3.0 * 3f64.sqrt())).abs() < 1e-15);
        let n1 = det_closed_n(1).unwrap();
        assert!((n1 - std::f64::consts::PI.powi(2) / 16.0).abs() < 1e-15);
        // det M_2 = 2π³/√(3³5⁵)
        let m2 = det_closed_m(2).unwrap();
        let expect = 2.0 * std::f64::consts::PI.powi(3) / (27.0f64 * 3125.0).sqrt();
        assert!((m2 / expect - 1.0).abs() < 1e-14);
        // det N_2 = π⁴/(2⁶3²)
        let n2 = det_closed_n(2).unwrap();
        let expect = std::f64::consts::PI.powi(4) / 576.0;
        assert!((n2 / expect - 1.0).abs() < 1e-14);
    }

    #[test]
    fn det_helpers_agree() {
        let m = vec![
            vec![2.0, -1.0, 0.5],
            vec![1.0, 3.0, -2.0],
            vec![0.25, 1.0, 1.0],
        ];
        let lu = lu_det_dd(&m);
        let cf = det_cofactor(&m);
        assert!((lu - cf).abs() < 1e-14 * cf.abs());
    }
}
