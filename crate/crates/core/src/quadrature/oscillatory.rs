//! Partition-extrapolation rule for oscillatory Bessel-product integrands:
//! ∫₀^∞ is split at the (scaled) zeros of a declared kernel, each cell is
//! integrated by a fixed-order Gauss–Legendre rule, the head cell (0, z₁) by
//! tanh-sinh (it may carry a log factor), and the sequence of partial sums
//! is extrapolated.  Both the Levin u-transform (with one and two averaging
//! passes for mixed monotone/alternating tails) and the epsilon algorithm
//! are formed; the candidate with the most stable table wins.

use super::accel::{levin_u_dd, wynn_epsilon_dd};
use super::finite::tanh_sinh;
use super::gauss::{gl_integrate, GL_ORDER};
use super::{IntegrandMeta, QuadResult};
use crate::dd::Dd;
use crate::error::{Error, Result};
use crate::kernels::{bessel_j_zero, KernelKind};
use rayon::prelude::*;

const START_CELLS: usize = 64;
const MAX_CELLS: usize = 1024;

pub fn integrate_oscillatory(
    f: &(dyn Fn(f64) -> f64 + Sync),
    meta: &IntegrandMeta,
    accel_depth: usize,
    rel_tol: f64,
) -> Result<QuadResult> {
    integrate_oscillatory_from(f, meta, 0.0, accel_depth, rel_tol)
}

/// Same rule on (start, ∞); the head cell runs from `start` to the first
/// partition point beyond it.
pub fn integrate_oscillatory_from(
    f: &(dyn Fn(f64) -> f64 + Sync),
    meta: &IntegrandMeta,
    start: f64,
    accel_depth: usize,
    rel_tol: f64,
) -> Result<QuadResult> {
    if !meta.oscillatory {
        return Err(Error::Domain(
            "integrate_oscillatory requires an oscillatory integrand".into(),
        ));
    }
    if meta.zero_source.is_empty() {
        return Err(Error::Domain("oscillatory integrand needs a zero source".into()));
    }
    let depth = accel_depth.max(4);

    let mut boundaries = zero_boundaries_from(&meta.zero_source, start, START_CELLS + 1)?;
    let head_tol = (rel_tol * 1e-2).max(1e-15);
    let (head, head_err) = tanh_sinh(f, start, boundaries[0], head_tol);
    let mut nodes = 512usize; // tanh-sinh head estimate

    let mut cells: Vec<f64> = Vec::new();
    let mut prev: Option<f64> = None;

    loop {
        let want = boundaries.len() - 1;
        if cells.len() < want {
            let new: Vec<f64> = (cells.len()..want)
                .into_par_iter()
                .map(|m| gl_integrate(f, boundaries[m], boundaries[m + 1]))
                .collect();
            nodes += new.len() * GL_ORDER;
            cells.extend(new);
        }

        // Partial sums, accumulated pairwise-exactly in index order.
        let mut sums = Vec::with_capacity(cells.len());
        let mut acc = Dd::from_f64(head);
        for &c in &cells {
            acc = acc.add_f64(c);
            sums.push(acc);
        }

        let (v, e) = extrapolate(&sums, &cells, head, depth);
        let noise =
            1e-16 * cells.iter().fold(head.abs(), |a, &c| a + c.abs()) + head_err;
        // Table stability alone can flatter itself; agreement across a cell
        // doubling is the honest backstop.
        let mut err = e.max(noise);
        if let Some(pv) = prev {
            err = err.max((v - pv).abs());
        }
        let good = prev.is_some() && err <= rel_tol * v.abs().max(1.0);
        if good || cells.len() >= MAX_CELLS {
            return Ok(QuadResult {
                value: v,
                err_estimate: err,
                nodes_used: nodes,
                partitions_used: cells.len() + 1,
                converged: good || err <= rel_tol * v.abs().max(1.0),
            });
        }
        prev = Some(v);
        boundaries = zero_boundaries_from(&meta.zero_source, start, 2 * cells.len() + 1)?;
    }
}

/// Portfolio extrapolation of partial sums; returns (value, stability).
/// `cells` are the exact increments behind `sums` (cells[m] produced
/// sums[m]); passing them through keeps the transforms' difference
/// operators exact.
fn extrapolate(sums: &[Dd], cells: &[f64], head: f64, depth: usize) -> (f64, f64) {
    let window = sums.len().min(72);
    let start = sums.len() - window;
    let tail: Vec<Dd> = sums[start..].to_vec();
    let mut terms: Vec<f64> = Vec::with_capacity(window);
    for m in start..sums.len() {
        terms.push(if m == 0 { head + cells[0] } else { cells[m] });
    }
    // The first window entry acts as its own "term": its ω weight is
    // meaningless but harmless (only interior increments drive the model).
    terms[0] = if start == 0 { tail[0].to_f64() } else { cells[start] };

    let mut best = (sums.last().unwrap().to_f64(), f64::INFINITY);
    let mut consider = |r: Result<(f64, f64)>| {
        if let Ok((v, e)) = r {
            if e < best.1 && v.is_finite() {
                best = (v, e);
            }
        }
    };
    // Depth ladder: deep windows suit alternating tails, while for smooth
    // (ratio-one) tails the window basis degenerates like (k/n)^k and only
    // shallow depths carry information.  The spread estimates rank the
    // candidates; disagreement across cell doublings corrects optimists.
    let mut depths = vec![3, 4, 6, 8];
    if !depths.contains(&depth) {
        depths.push(depth);
    }
    // One or two averaging passes fold ratio -1 components into smooth ones;
    // the averaged increments stay exact: Δ((s_m+s_{m+1})/2) = (c_m+c_{m+1})/2.
    let avg1: Vec<Dd> = tail
        .windows(2)
        .map(|w| (w[0] + w[1]).mul_f64(0.5))
        .collect();
    let t1: Vec<f64> = (0..avg1.len())
        .map(|i| {
            if i == 0 {
                avg1[0].to_f64()
            } else {
                0.5 * (terms[i] + terms[i + 1])
            }
        })
        .collect();
    let avg2: Vec<Dd> = avg1
        .windows(2)
        .map(|w| (w[0] + w[1]).mul_f64(0.5))
        .collect();
    let t2: Vec<f64> = (0..avg2.len())
        .map(|i| {
            if i == 0 {
                avg2[0].to_f64()
            } else {
                0.5 * (t1[i] + t1[i + 1])
            }
        })
        .collect();
    for &d in &depths {
        consider(levin_u_dd(&tail, &terms, d));
        if avg1.len() >= d + 2 {
            consider(levin_u_dd(&avg1, &t1, d));
        }
        if avg2.len() >= d + 2 {
            consider(levin_u_dd(&avg2, &t2, d));
        }
    }
    consider(wynn_epsilon_dd(&tail));
    best
}

/// First `n` merged partition points beyond `start` from the declared zero
/// streams.
fn zero_boundaries_from(
    sources: &[(KernelKind, f64)],
    start: f64,
    n: usize,
) -> Result<Vec<f64>> {
    for &(kind, scale) in sources {
        if !matches!(kind, KernelKind::J0 | KernelKind::J1) {
            return Err(Error::Domain(format!("{kind:?} is not an oscillatory kernel")));
        }
        if !(scale > 0.0) {
            return Err(Error::Domain("zero-source scale must be positive".into()));
        }
    }
    let mut idx = vec![1usize; sources.len()];
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        // Smallest next zero across the streams.
        let mut smallest = f64::INFINITY;
        let mut which = 0;
        for (s, &(kind, scale)) in sources.iter().enumerate() {
            let z = bessel_j_zero(kind, idx[s])? / scale;
            if z < smallest {
                smallest = z;
                which = s;
            }
        }
        idx[which] += 1;
        if smallest <= start {
            continue;
        }
        // Merge boundaries that nearly coincide.
        if out.last().map_or(true, |&l| smallest > l * (1.0 + 1e-9)) {
            out.push(smallest);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernels::{j0, j1};

    fn meta(src: Vec<(KernelKind, f64)>) -> IntegrandMeta {
        IntegrandMeta::oscillatory(src)
    }

    #[test]
    fn integral_of_j1_is_one() {
        let m = meta(vec![(KernelKind::J1, 1.0)]);
        let r = integrate_oscillatory(&|t| j1(t), &m, 12, 1e-10).unwrap();
        assert!(r.converged, "err={}", r.err_estimate);
        assert!((r.value - 1.0).abs() < 1e-10, "{}", r.value);
    }

    #[test]
    fn integral_of_j0_j1_is_half() {
        // antiderivative -J0²/2
        let m = meta(vec![(KernelKind::J1, 1.0)]);
        let r = integrate_oscillatory(&|t| j0(t) * j1(t), &m, 12, 1e-10).unwrap();
        assert!(r.converged);
        assert!((r.value - 0.5).abs() < 1e-10, "{}", r.value);
    }

    #[test]
    fn rejects_missing_source() {
        let m = meta(vec![]);
        assert!(integrate_oscillatory(&|t| j1(t), &m, 8, 1e-8).is_err());
    }
}
