//! Identities tying the vacuum Wronskians to walk densities, Mahler
//! measures, and the five/six-kernel closed forms.  Every function returns
//! the two sides of one identity; report assembly happens upstream.

use super::matrix::{build_matrix, MatrixKind};
use super::wronskian::{wronskian, WronskianFamily};
use super::bologna_constant;
use crate::error::Result;
use crate::mahler_lvalues::{j1_j0pow_integral, kluyver_p, mahler_linear, one_minus_j0_integral};
use crate::moments::{MomentFamily, MomentSpec, Moments};
use std::f64::consts::PI;

/// Ψ₂(u) = sqrt(u²(4-u)(16-u)) · det[[μ¹₂₂, μ¹₂₃],[D¹μ¹₂₂, D¹μ¹₂₃]]
/// against -(π⁴/24)·p₄(√u)/√u.
pub fn psi2_identity(
    moments: &Moments,
    u: f64,
    accel_depth: usize,
    tol_dec: f64,
    tol_osc: f64,
) -> Result<(f64, f64)> {
    let lhs = psi2_value(moments, u, tol_dec)?;
    let x = u.sqrt();
    let p4 = kluyver_p(4, x, accel_depth, tol_osc)?.value;
    let rhs = -PI.powi(4) / 24.0 * p4 / x;
    Ok((lhs, rhs))
}

/// The same determinant at u = 1 against -(π√5/(2√3))·IKM(2,3;1).
pub fn psi2_at_one(moments: &Moments, tol_dec: f64) -> Result<(f64, f64)> {
    let lhs = psi2_value(moments, 1.0, tol_dec)?;
    let rhs = -PI * 5f64.sqrt() / (2.0 * 3f64.sqrt()) * moments.ikm(2, 3, 1)?;
    Ok((lhs, rhs))
}

fn psi2_value(moments: &Moments, u: f64, tol: f64) -> Result<f64> {
    let m22 = MomentSpec::two_scale(MomentFamily::Iv, 2, 3, 1, u);
    let m23 = MomentSpec::two_scale(MomentFamily::Kv, 2, 3, 1, u);
    let a = moments.u_derivative(&m22, 0, tol)?.value;
    let b = moments.u_derivative(&m23, 0, tol)?.value;
    let da = moments.u_derivative(&m22, 1, tol)?.value;
    let db = moments.u_derivative(&m23, 1, tol)?.value;
    Ok((u * u * (4.0 - u) * (16.0 - u)).sqrt() * (a * db - b * da))
}

/// ψ₃(u) = u²(1-u)(9-u)(25-u) · det(D^i ν¹₂j)_{i=0..2, j=2..4} against
/// (π⁶/80)·p₅(√u)/√u.
pub fn psi3_identity(
    moments: &Moments,
    u: f64,
    accel_depth: usize,
    tol_dec: f64,
    tol_osc: f64,
) -> Result<(f64, f64)> {
    let specs = [
        MomentSpec::two_scale(MomentFamily::Iv, 2, 4, 1, u),
        MomentSpec::two_scale(MomentFamily::Iv, 3, 3, 1, u),
        MomentSpec::two_scale(MomentFamily::Kv, 2, 4, 1, u),
    ];
    let mut m = [[0.0f64; 3]; 3];
    for (j, s) in specs.iter().enumerate() {
        for (i, row) in m.iter_mut().enumerate() {
            row[j] = moments.u_derivative(s, i as u32, tol_dec)?.value;
        }
    }
    let det = super::matrix::det_dd(&m.iter().map(|r| r.to_vec()).collect::<Vec<_>>());
    let lhs = u * u * (1.0 - u) * (9.0 - u) * (25.0 - u) * det;
    let x = u.sqrt();
    let p5 = kluyver_p(5, x, accel_depth, tol_osc)?.value;
    let rhs = PI.powi(6) / 80.0 * p5 / x;
    Ok((lhs, rhs))
}

/// [u²(4-u)(16-u)]^{3/2}·Ω̌₃(u) against
/// π²V₄ - (π⁴√u ln u/8)∫J₁(√u t)J₀⁴ dt + (π⁴/4)∫(1-J₀(√u t))/t·J₀⁴ dt.
pub fn omega3_check_identity(
    moments: &Moments,
    u: f64,
    accel_depth: usize,
    tol_dec: f64,
    tol_osc: f64,
) -> Result<(f64, f64)> {
    let w = wronskian(moments, WronskianFamily::OmegaCheck, 2, u, tol_dec)?;
    let lhs = (u * u * (4.0 - u) * (16.0 - u)).powf(1.5) * w.value;
    let x = u.sqrt();
    let v4 = moments.vacuum(4)?;
    let j1int = j1_j0pow_integral(4, x, accel_depth, tol_osc)?.value;
    let dint = one_minus_j0_integral(4, x, accel_depth, tol_osc)?.value;
    let rhs = PI.powi(2) * v4 - PI.powi(4) * x * u.ln() / 8.0 * j1int + PI.powi(4) / 4.0 * dint;
    Ok((lhs, rhs))
}

/// [u²(1-u)(9-u)(25-u)]²·ω̌₄(u) against
/// č₄ + (3π⁶√u ln u/32)∫J₁(√u t)J₀⁵ dt - (3π⁶/16)∫(1-J₀(√u t))/t·J₀⁵ dt,
/// č₄ = -(3π⁶/16)·m₅.
pub fn omega4_check_identity(
    moments: &Moments,
    u: f64,
    accel_depth: usize,
    tol_dec: f64,
    tol_osc: f64,
) -> Result<(f64, f64)> {
    let w = wronskian(moments, WronskianFamily::SmallOmegaCheck, 2, u, tol_dec)?;
    let lhs = (u * u * (1.0 - u) * (9.0 - u) * (25.0 - u)).powi(2) * w.value;
    let x = u.sqrt();
    let m5 = mahler_linear(5, accel_depth, tol_osc)?.value;
    let c4 = -3.0 * PI.powi(6) / 16.0 * m5;
    let j1int = j1_j0pow_integral(5, x, accel_depth, tol_osc)?.value;
    let dint = one_minus_j0_integral(5, x, accel_depth, tol_osc)?.value;
    let rhs = c4 + 3.0 * PI.powi(6) * x * u.ln() / 32.0 * j1int - 3.0 * PI.powi(6) / 16.0 * dint;
    Ok((lhs, rhs))
}

/// The six closed forms of the five-kernel odd moments in terms of the
/// gamma-product constant C; returns (label, lhs, rhs) triples.
pub fn bologna_table(moments: &Moments, tol: f64) -> Result<Vec<(String, f64, f64)>> {
    let c = bologna_constant()?;
    let s15 = 15f64.sqrt();
    let mut out = Vec::with_capacity(6);
    let cases: [(u32, f64, f64); 3] = [
        (1, c, c),
        (
            3,
            (2.0f64 / 15.0).powi(2) * (13.0 * c - 1.0 / (10.0 * c)),
            (2.0f64 / 15.0).powi(2) * (13.0 * c + 1.0 / (10.0 * c)),
        ),
        (
            5,
            (4.0f64 / 15.0).powi(3) * (43.0 * c - 19.0 / (40.0 * c)),
            (4.0f64 / 15.0).powi(3) * (43.0 * c + 19.0 / (40.0 * c)),
        ),
    ];
    for (n, rhs_i, rhs_k) in cases {
        let lhs_i = moments.eval(&MomentSpec::plain(1, 4, n), tol)?.value / PI.powi(2);
        out.push((format!("IKM(1,4;{n})/pi^2"), lhs_i, rhs_i));
        let lhs_k = 2.0 * moments.eval(&MomentSpec::plain(2, 3, n), tol)?.value / (s15 * PI);
        out.push((format!("2*IKM(2,3;{n})/(sqrt15*pi)"), lhs_k, rhs_k));
    }
    Ok(out)
}

/// Neville extrapolation of (1-u)²·ω₄(u) to u → 1⁻ against
/// -IKM(1,3;1)·det N₂ / 2⁷.  Two spec-named points alone cannot beat the
/// curvature of the limit function, so two more refine the polynomial.
pub fn omega4_endpoint(moments: &Moments, tol: f64) -> Result<(f64, f64)> {
    let us = [0.95, 0.98, 0.99, 0.995];
    let mut h: Vec<f64> = Vec::new();
    let mut y: Vec<f64> = Vec::new();
    for &u in &us {
        let w = wronskian(moments, WronskianFamily::SmallOmega, 2, u, tol)?;
        h.push(1.0 - u);
        y.push((1.0 - u) * (1.0 - u) * w.value);
    }
    // Neville tableau evaluated at h = 0.
    let n = h.len();
    let mut tab = y.clone();
    for level in 1..n {
        for i in 0..n - level {
            tab[i] = (h[i + level] * tab[i] - h[i] * tab[i + 1]) / (h[i + level] - h[i]);
        }
    }
    let lhs = tab[0];
    let n2 = build_matrix(moments, MatrixKind::N, 2, tol)?.det();
    let rhs = -moments.ikm(1, 3, 1)? * n2 / 128.0;
    Ok((lhs, rhs))
}

/// Theorem-class determinant/Mahler relations: returns
/// (det M̌₂, (2π³/(15√15))·m₅) and (det Ň₂, (π⁴/96)·m₆).
pub fn theorem_mahler_pair(
    moments: &Moments,
    accel_depth: usize,
    tol_dec: f64,
    tol_osc: f64,
) -> Result<[(f64, f64); 2]> {
    let dm = build_matrix(moments, MatrixKind::MCheck2, 2, tol_dec)?.det();
    let dn = build_matrix(moments, MatrixKind::NCheck2, 2, tol_dec)?.det();
    let m5 = mahler_linear(5, accel_depth, tol_osc)?.value;
    let m6 = mahler_linear(6, accel_depth, tol_osc)?.value;
    Ok([
        (dm, 2.0 * PI.powi(3) / (15.0 * 15f64.sqrt()) * m5),
        (dn, PI.powi(4) / 96.0 * m6),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn psi2_special_value_at_one() {
        let m = Moments::new(1e-12);
        let (lhs, rhs) = psi2_at_one(&m, 1e-12).unwrap();
        assert!((lhs / rhs - 1.0).abs() < 1e-9, "{lhs} vs {rhs}");
    }
}
