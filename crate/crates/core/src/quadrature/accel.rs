//! Nonlinear sequence acceleration: the Levin u-transform (the workhorse for
//! alternating and smoothly monotone tails) and the Wynn epsilon algorithm
//! (which also annihilates mixed-frequency oscillatory components).
//!
//! Both transforms build high-order weighted differences, so the engine path
//! feeds them pair-arithmetic partial sums plus the exact term values;
//! differencing plain f64 partial sums would erase the terms' low bits and
//! cap every transform at the raw sequence accuracy.

use crate::dd::Dd;
use crate::error::{Error, Result};

/// Levin u-transform of depth `k` on the window `sums[n..=n+k]`.
///
/// Remainder model: s_m - s ≈ (β+m) a_m · poly(1/(β+m)), β = 1, where a_m
/// is the m-th term.  Exact on geometric sequences for k >= 2.
fn levin_u_window(sums: &[Dd], terms: &[f64], n: usize, k: usize) -> Option<f64> {
    let beta = 1.0;
    let mut num = Dd::ZERO;
    let mut den = Dd::ZERO;
    let mut binom = 1.0f64;
    for j in 0..=k {
        let m = n + j;
        let w = (beta + m as f64) * terms[m];
        if w == 0.0 {
            return None;
        }
        let c = ((beta + m as f64) / (beta + (n + k) as f64)).powi(k as i32 - 1);
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let coup = Dd::prod(sign * binom, c) / Dd::from_f64(w);
        num = num + coup * sums[m];
        den = den + coup;
        binom *= (k - j) as f64 / (j + 1) as f64;
    }
    if den.to_f64() == 0.0 || !den.is_finite() {
        return None;
    }
    let v = (num / den).to_f64();
    v.is_finite().then_some(v)
}

/// Engine-path Levin u: `sums` are running sums in pair arithmetic, `terms`
/// the exact increments (terms[0] = sums[0]).  Returns (value, stability).
pub(crate) fn levin_u_dd(sums: &[Dd], terms: &[f64], depth: usize) -> Result<(f64, f64)> {
    if sums.len() != terms.len() {
        return Err(Error::Domain("sums/terms length mismatch".into()));
    }
    if sums.len() < depth + 2 {
        return Err(Error::Domain(format!(
            "need at least depth+2 = {} partial sums, got {}",
            depth + 2,
            sums.len()
        )));
    }
    let last = sums.last().unwrap().to_f64();
    let scale = sums
        .iter()
        .fold(0.0f64, |m, x| m.max(x.to_f64().abs()))
        .max(1e-300);
    if terms.iter().skip(1).all(|&t| t.abs() <= 1e-15 * scale) {
        return Ok((last, 0.0));
    }
    let k = depth.min(sums.len() - 2);
    let n = sums.len() - 1 - k;
    let mut candidates = Vec::new();
    for (dn, dk) in [(0i64, 0i64), (1, -1), (2, -2), (-1, 0)] {
        let nn = n as i64 + dn;
        let kk = k as i64 + dk;
        if nn >= 0 && kk >= 2 && (nn + kk) < sums.len() as i64 {
            if let Some(v) = levin_u_window(sums, terms, nn as usize, kk as usize) {
                candidates.push(v);
            }
        }
    }
    match candidates.first() {
        None => {
            let est = terms.last().unwrap().abs();
            Ok((last, est))
        }
        Some(&v) => {
            let spread = candidates
                .iter()
                .map(|c| (c - v).abs())
                .fold(0.0f64, f64::max);
            Ok((v, spread.max(v.abs() * 1e-15)))
        }
    }
}

/// Levin u-transform on plain partial sums; accuracy is limited by the f64
/// representation of the increments.
pub fn levin_u(s: &[f64], depth: usize) -> Result<(f64, f64)> {
    let sums: Vec<Dd> = s.iter().map(|&x| Dd::from_f64(x)).collect();
    let mut terms = Vec::with_capacity(s.len());
    for (i, &x) in s.iter().enumerate() {
        terms.push(if i == 0 { x } else { x - s[i - 1] });
    }
    levin_u_dd(&sums, &terms, depth)
}

/// Wynn epsilon algorithm on pair-arithmetic partial sums.
pub(crate) fn wynn_epsilon_dd(s: &[Dd]) -> Result<(f64, f64)> {
    if s.len() < 3 {
        return Err(Error::Domain("epsilon table needs >= 3 entries".into()));
    }
    let n = s.len();
    let mut prev_odd: Vec<Dd> = vec![Dd::ZERO; n + 1]; // ε_{-1}
    let mut cur: Vec<Dd> = s.to_vec(); // ε_0
    let scale = s
        .iter()
        .fold(0.0f64, |m, x| m.max(x.to_f64().abs()))
        .max(1e-300);
    let tiny = 1e-45 * scale;

    let mut best = *cur.last().unwrap();
    let mut best_est = f64::INFINITY;
    let mut last_even: Vec<Dd> = cur.clone();

    for col in 1..n {
        let mut next: Vec<Dd> = Vec::with_capacity(n - col);
        for i in 0..(n - col) {
            let diff = cur[i + 1] - cur[i];
            if diff.abs().to_f64() < tiny {
                next.clear();
                break;
            }
            next.push(prev_odd[i + 1] + Dd::ONE / diff);
        }
        if next.is_empty() {
            break;
        }
        if col % 2 == 0 {
            let m = next.len();
            let v = next[m - 1];
            let mut est = (v - last_even[last_even.len() - 1]).abs().to_f64();
            if m >= 2 {
                est = est.max((next[m - 1] - next[m - 2]).abs().to_f64());
            }
            if est < best_est {
                best_est = est;
                best = v;
            }
            last_even = next.clone();
        }
        prev_odd = std::mem::replace(&mut cur, next);
    }
    if best_est.is_infinite() {
        let est = (s[n - 1] - s[n - 2]).abs().to_f64();
        return Ok((s[n - 1].to_f64(), est));
    }
    Ok((best.to_f64(), best_est.max(best.to_f64().abs() * 1e-16)))
}

/// Wynn epsilon on plain partial sums.
pub fn wynn_epsilon(s: &[f64]) -> Result<(f64, f64)> {
    let sums: Vec<Dd> = s.iter().map(|&x| Dd::from_f64(x)).collect();
    wynn_epsilon_dd(&sums)
}

/// Extrapolated limit of a (generalized) alternating or geometric-tail
/// sequence of partial sums; a constant sequence returns the constant.
pub fn accelerate(partial_sums: &[f64], depth: usize) -> Result<f64> {
    levin_u(partial_sums, depth).map(|(v, _)| v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_is_exact() {
        // Σ (1/2)^k -> 2
        let mut s = Vec::new();
        let mut acc = 0.0;
        for k in 0..12 {
            acc += 0.5f64.powi(k);
            s.push(acc);
        }
        let v = accelerate(&s, 6).unwrap();
        assert!((v - 2.0).abs() < 1e-12, "{v}");
    }

    #[test]
    fn constant_sequence() {
        let s = vec![3.5; 8];
        assert_eq!(accelerate(&s, 4).unwrap(), 3.5);
    }

    #[test]
    fn alternating_harmonic() {
        // Σ (-1)^k/(k+1) = ln 2, depth 10 from 13 partial sums.
        let mut s = Vec::new();
        let mut acc = 0.0;
        for k in 0..13u32 {
            acc += if k % 2 == 0 { 1.0 } else { -1.0 } / (k as f64 + 1.0);
            s.push(acc);
        }
        let v = accelerate(&s, 10).unwrap();
        assert!((v - std::f64::consts::LN_2).abs() < 1e-10, "{v}");
    }

    #[test]
    fn monotone_algebraic_tail() {
        // s_m = 1/2 - 1/(π(m+60)): the u-transform model fits this exactly.
        // Shallow depth is required: on smooth tails the window basis
        // degenerates like (k/n)^k, so depth 12 at offset 60 is noise.
        let terms: Vec<f64> = (0..72)
            .map(|m| {
                let g = (m + 60) as f64;
                if m == 0 {
                    0.5 - 1.0 / (std::f64::consts::PI * g)
                } else {
                    1.0 / (std::f64::consts::PI * (g - 1.0)) - 1.0 / (std::f64::consts::PI * g)
                }
            })
            .collect();
        let mut sums = Vec::new();
        let mut acc = Dd::ZERO;
        for &t in &terms {
            acc = acc.add_f64(t);
            sums.push(acc);
        }
        let (v, est) = levin_u_dd(&sums, &terms, 3).unwrap();
        assert!((v - 0.5).abs() < 1e-9, "{v}");
        assert!(est >= 0.1 * (v - 0.5).abs(), "estimate must not flatter: {est}");
    }

    #[test]
    fn epsilon_two_frequencies() {
        // Partial sums of Σ [0.8^k cos(2.2k) + 0.9^k cos(0.7k)] — two
        // complex-geometric pairs; the epsilon algorithm nails it.
        let mut s = Vec::new();
        let mut acc = 0.0;
        for k in 0..40 {
            let kf = k as f64;
            acc += 0.8f64.powi(k) * (2.2 * kf).cos() + 0.9f64.powi(k) * (0.7 * kf).cos();
            s.push(acc);
        }
        let (v, est) = wynn_epsilon(&s).unwrap();
        let mut reference = 0.0;
        for k in 0..4000 {
            let kf = k as f64;
            reference += 0.8f64.powi(k) * (2.2 * kf).cos() + 0.9f64.powi(k) * (0.7 * kf).cos();
        }
        assert!((v - reference).abs() < 1e-9, "v={v} ref={reference} est={est}");
    }

    #[test]
    fn too_short_errors() {
        assert!(accelerate(&[1.0, 2.0], 5).is_err());
    }
}
