//! Wronskian determinants assembled from the algebraic row forms: iterated
//! Bessel differential equations replace u-derivatives of rows by values of
//! the derivative-kernel moments, so every matrix entry is a single
//! integral.  Numeric u-differentiation of a determinant never occurs.

use super::matrix::{build_matrix, det_dd, MatrixKind};
use crate::error::{Error, Result};
use crate::kernels::gamma_fn;
use crate::moments::{MomentFamily, MomentSpec, Moments};
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WronskianFamily {
    /// Ω_{2k-1}(u), built from the (2k+1)-kernel μ rows; u ∈ (0,4).
    Omega,
    /// ω_{2k}(u), built from the (2k+2)-kernel ν rows; u ∈ (0,1).
    SmallOmega,
    /// Vacuum analog of Ω₃ with the five-kernel vacuum column.
    OmegaCheck,
    /// Vacuum analog of ω₄ with the six-kernel vacuum column.
    SmallOmegaCheck,
}

#[derive(Clone, Copy, Debug)]
pub struct WronskianValue {
    pub family: WronskianFamily,
    pub k: usize,
    pub u: f64,
    pub value: f64,
    pub err: f64,
    /// Σ|permutation terms| / |det|: how much cancellation the determinant
    /// absorbed; > 1e6 indicates the entries' accuracy is being eaten.
    pub cancellation: f64,
}

/// One matrix entry as a weighted sum of moment specs.
type Entry = Vec<(f64, MomentSpec)>;

fn mu_entry(k: u32, j: u32, ell: u32, u: f64, acute: bool) -> Entry {
    let n = 2 * ell - 1;
    let (fam_i, fam_k) = if acute {
        (MomentFamily::Ip, MomentFamily::Kp)
    } else {
        (MomentFamily::Iv, MomentFamily::Kv)
    };
    if j == 1 {
        let w = 1.0 / (2.0 * k as f64 + 1.0);
        vec![
            (w, MomentSpec::two_scale(fam_i, 1, 2 * k, n, u)),
            (w * 2.0 * k as f64, MomentSpec::two_scale(fam_k, 1, 2 * k, n, u)),
        ]
    } else if j <= k {
        vec![(1.0, MomentSpec::two_scale(fam_i, j, 2 * k + 1 - j, n, u))]
    } else {
        vec![(
            1.0,
            MomentSpec::two_scale(fam_k, j - k + 1, 3 * k - j, n, u),
        )]
    }
}

fn nu_entry(k: u32, j: u32, ell: u32, u: f64, acute: bool) -> Entry {
    let n = 2 * ell - 1;
    let (fam_i, fam_k) = if acute {
        (MomentFamily::Ip, MomentFamily::Kp)
    } else {
        (MomentFamily::Iv, MomentFamily::Kv)
    };
    if j == 1 {
        let w = 1.0 / (2.0 * (k as f64 + 1.0));
        vec![
            (w, MomentSpec::two_scale(fam_i, 1, 2 * k + 1, n, u)),
            (
                w * (2.0 * k as f64 + 1.0),
                MomentSpec::two_scale(fam_k, 1, 2 * k + 1, n, u),
            ),
        ]
    } else if j <= k + 1 {
        vec![(1.0, MomentSpec::two_scale(fam_i, j, 2 * k + 2 - j, n, u))]
    } else {
        vec![(1.0, MomentSpec::two_scale(fam_k, j - k, 3 * k + 2 - j, n, u))]
    }
}

fn vacuum_entry(b: u32, ell: u32, u: f64, acute: bool) -> Entry {
    let fam = if acute { MomentFamily::Kp } else { MomentFamily::Kv };
    vec![(1.0, MomentSpec::two_scale(fam, 0, b, 2 * ell - 1, u))]
}

fn eval_entry(moments: &Moments, e: &Entry, rel_tol: f64) -> Result<(f64, f64)> {
    let mut v = 0.0;
    let mut err = 0.0;
    for (w, s) in e {
        let m = moments.eval(s, rel_tol)?;
        v += w * m.value;
        err += w.abs() * m.err;
    }
    Ok((v, err))
}

/// Assemble and evaluate a Wronskian value at u; entry tolerances should be
/// a few orders tighter than the final check tolerance to absorb the
/// determinant's cancellation.
pub fn wronskian(
    moments: &Moments,
    family: WronskianFamily,
    k: usize,
    u: f64,
    rel_tol: f64,
) -> Result<WronskianValue> {
    let grid: Vec<Vec<Entry>> = layout(family, k, u)?;
    let n = grid.len();
    let flat: Result<Vec<(f64, f64)>> = grid
        .par_iter()
        .flat_map(|row| row.par_iter())
        .map(|e| eval_entry(moments, e, rel_tol))
        .collect();
    let flat = flat?;
    let rows: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| flat[i * n + j].0).collect())
        .collect();
    let det = det_dd(&rows);
    let perm_scale = permanent_abs(&rows);
    let cancellation = perm_scale / det.abs().max(1e-300);
    let entry_err: f64 = flat.iter().map(|e| e.1).fold(0.0, f64::max);
    // First-order determinant error: cancellation-scaled entry noise.
    let err = entry_err * perm_scale / flat
        .iter()
        .map(|e| e.0.abs().max(1e-300))
        .fold(f64::INFINITY, f64::min);
    let exponent = match family {
        WronskianFamily::Omega | WronskianFamily::OmegaCheck => (k - 1) * (2 * k - 1),
        WronskianFamily::SmallOmega | WronskianFamily::SmallOmegaCheck => (2 * k - 1) * k,
    };
    let prefactor = (2.0 * u.sqrt()).powi(exponent as i32);
    Ok(WronskianValue {
        family,
        k,
        u,
        value: det / prefactor,
        err: err / prefactor,
        cancellation,
    })
}

fn layout(family: WronskianFamily, k: usize, u: f64) -> Result<Vec<Vec<Entry>>> {
    let ku = k as u32;
    match family {
        WronskianFamily::Omega => {
            if !(2..=3).contains(&k) {
                return Err(Error::Domain("Omega rows supported for k = 2, 3".into()));
            }
            if !(0.0..4.0).contains(&u) || u <= 0.0 {
                return Err(Error::Domain(format!("Omega family needs u in (0,4), got {u}")));
            }
            let size = 2 * k - 1;
            let mut rows = Vec::with_capacity(size);
            for r in 0..size {
                let ell = (r / 2 + 1) as u32;
                let acute = r % 2 == 1;
                rows.push(
                    (1..=size as u32)
                        .map(|j| mu_entry(ku, j, ell, u, acute))
                        .collect(),
                );
            }
            Ok(rows)
        }
        WronskianFamily::SmallOmega => {
            if !(2..=3).contains(&k) {
                return Err(Error::Domain("omega rows supported for k = 2, 3".into()));
            }
            if !(0.0..1.0).contains(&u) || u <= 0.0 {
                return Err(Error::Domain(format!("omega family needs u in (0,1), got {u}")));
            }
            let size = 2 * k;
            let mut rows = Vec::with_capacity(size);
            for r in 0..size {
                let ell = (r / 2 + 1) as u32;
                let acute = r % 2 == 1;
                rows.push(
                    (1..=size as u32)
                        .map(|j| nu_entry(ku, j, ell, u, acute))
                        .collect(),
                );
            }
            Ok(rows)
        }
        WronskianFamily::OmegaCheck => {
            if k != 2 {
                return Err(Error::Domain("the vacuum analog is fixed at k = 2".into()));
            }
            if !(0.0..4.0).contains(&u) || u <= 0.0 {
                return Err(Error::Domain(format!("u must lie in (0,4), got {u}")));
            }
            let mut rows = Vec::with_capacity(3);
            for (ell, acute) in [(1u32, false), (1, true), (2, false)] {
                let mut row = vec![vacuum_entry(5, ell, u, acute)];
                for j in 2..=3u32 {
                    row.push(mu_entry(2, j, ell, u, acute));
                }
                rows.push(row);
            }
            Ok(rows)
        }
        WronskianFamily::SmallOmegaCheck => {
            if k != 2 {
                return Err(Error::Domain("the vacuum analog is fixed at k = 2".into()));
            }
            if !(0.0..1.0).contains(&u) || u <= 0.0 {
                return Err(Error::Domain(format!("u must lie in (0,1), got {u}")));
            }
            let mut rows = Vec::with_capacity(4);
            for (ell, acute) in [(1u32, false), (1, true), (2, false), (2, true)] {
                let mut row = vec![vacuum_entry(6, ell, u, acute)];
                for j in 2..=4u32 {
                    row.push(nu_entry(2, j, ell, u, acute));
                }
                rows.push(row);
            }
            Ok(rows)
        }
    }
}

/// Σ over permutations of |∏ entries| (the fully positive companion of the
/// determinant) — the cancellation yardstick.
fn permanent_abs(m: &[Vec<f64>]) -> f64 {
    fn go(m: &[Vec<f64>], used: &mut [bool], row: usize) -> f64 {
        if row == m.len() {
            return 1.0;
        }
        let mut acc = 0.0;
        for c in 0..m.len() {
            if !used[c] && m[row][c] != 0.0 {
                used[c] = true;
                acc += m[row][c].abs() * go(m, used, row + 1);
                used[c] = false;
            }
        }
        acc
    }
    let mut used = vec![false; m.len()];
    go(m, &mut used, 0)
}

/// The closed forms with the determinant factors supplied from the product
/// formulas; valid on each family's u interval.
pub fn wronskian_closed_form(family: WronskianFamily, k: usize, u: f64) -> Result<f64> {
    match family {
        WronskianFamily::Omega => {
            let sign = if ((k - 1) * (k - 2) / 2) % 2 == 0 { 1.0 } else { -1.0 };
            let g = gamma_fn(k as f64 / 2.0)?;
            let dn = super::matrix::det_closed_n(k - 1)?;
            let mut v = sign * k as f64 * g * g * dn * dn
                / ((2 * k + 1) as f64
                    * u.powf(k as f64 * (2 * k - 1) as f64 / 2.0)
                    * 2f64.powi(((k - 1) * (2 * k - 1) + 1) as i32));
            for j in 1..=k {
                let s = ((2 * j) * (2 * j)) as f64;
                v *= (s / (s - u)).powf(k as f64 - 0.5);
            }
            Ok(v)
        }
        WronskianFamily::SmallOmega => {
            let sign = if (k * (k - 1) / 2) % 2 == 0 { 1.0 } else { -1.0 };
            let dm = super::matrix::det_closed_m(k)?;
            let mut v = sign * (2 * k + 1) as f64 * dm * dm
                / (2f64.powi(((2 * k - 1) * k + 1) as i32)
                    * u.powi((k * k) as i32)
                    * (k + 1) as f64);
            for j in 1..=k + 1 {
                let s = ((2 * j - 1) * (2 * j - 1)) as f64;
                v *= (s / (s - u)).powi(k as i32);
            }
            Ok(v)
        }
        _ => Err(Error::Domain(
            "closed forms cover the Omega/omega families".into(),
        )),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorizationKind {
    /// Ω_{2k-1}(1) = ±det M_{k-1} det M_k / 2^{(k-1)(2k-1)}
    OmegaM,
    /// Ω̌₃(1) = IKM(1,2;1) det M̌₂ / 2³
    OmegaCheck,
}

/// Evaluate both sides of a factorization at u = 1; returns (lhs, rhs).
pub fn factorization_at_one(
    moments: &Moments,
    kind: FactorizationKind,
    k: usize,
    rel_tol: f64,
) -> Result<(f64, f64)> {
    match kind {
        FactorizationKind::OmegaM => {
            let lhs = wronskian(moments, WronskianFamily::Omega, k, 1.0, rel_tol)?.value;
            let sign = if ((k - 1) * (k - 2) / 2) % 2 == 0 { 1.0 } else { -1.0 };
            let dm_k = build_matrix(moments, MatrixKind::M, k, rel_tol)?.det();
            let dm_k1 = build_matrix(moments, MatrixKind::M, k - 1, rel_tol)?.det();
            let rhs = sign * dm_k1 * dm_k / 2f64.powi(((k - 1) * (2 * k - 1)) as i32);
            Ok((lhs, rhs))
        }
        FactorizationKind::OmegaCheck => {
            let lhs = wronskian(moments, WronskianFamily::OmegaCheck, 2, 1.0, rel_tol)?.value;
            let ikm121 = moments.eval(&MomentSpec::plain(1, 2, 1), rel_tol)?.value;
            let dm = build_matrix(moments, MatrixKind::MCheck2, 2, rel_tol)?.det();
            Ok((lhs, ikm121 * dm / 8.0))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_reduces_to_displayed_omega3() {
        // Ω₃(u) = π⁴ / (2²·5·[u²(4-u)(16-u)]^{3/2})
        let u = 0.37;
        let v = wronskian_closed_form(WronskianFamily::Omega, 2, u).unwrap();
        let expect = std::f64::consts::PI.powi(4)
            / (20.0 * (u * u * (4.0 - u) * (16.0 - u)).powf(1.5));
        assert!((v / expect - 1.0).abs() < 1e-13, "{v} vs {expect}");
    }

    #[test]
    fn closed_form_reduces_to_displayed_omega4() {
        // ω₄(u) = -π⁶ / (2⁵·[u²(1-u)(9-u)(25-u)]²)
        let u = 0.37;
        let v = wronskian_closed_form(WronskianFamily::SmallOmega, 2, u).unwrap();
        let expect = -std::f64::consts::PI.powi(6)
            / (32.0 * (u * u * (1.0 - u) * (9.0 - u) * (25.0 - u)).powi(2));
        assert!((v / expect - 1.0).abs() < 1e-13, "{v} vs {expect}");
    }

    #[test]
    fn sign_factor_for_k3() {
        // (k-1)(k-2)/2 = 1 for k = 3: Ω₅ closed form is negative at u = 0.5.
        let v = wronskian_closed_form(WronskianFamily::Omega, 3, 0.5).unwrap();
        assert!(v < 0.0);
    }
}
