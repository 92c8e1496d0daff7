//! Modified Bessel functions I0, I1, K0, K1, plain and exponentially scaled.
//!
//! Branch layout:
//! - I0/I1: ascending power series for t <= 20 (positive terms, compensated
//!   summation), asymptotic expansion beyond; the optimal-truncation error
//!   of the expansion falls below 1e-16 at the seam.
//! - K0/K1: ascending series for t <= 2, accumulated in pair arithmetic to
//!   absorb the log-term cancellation; for t > 2 a Chebyshev expansion of
//!   sqrt(2t/pi) e^t K(t) in y = 4/t - 1.  A plain series/asymptotic pair
//!   cannot reach 5e-15 anywhere in 2 < t < 18, hence the interpolated
//!   middle range.  The coefficients are checked against the defining
//!   integral representation by the test suite.

use crate::constants::euler_gamma_dd;
use crate::dd::{Dd, Kahan};

const SERIES_ASYMPT_SEAM_I: f64 = 20.0;
const SERIES_CHEB_SEAM_K: f64 = 2.0;

/// I0(t) * e^{-t}.
pub fn i0e(t: f64) -> f64 {
    debug_assert!(t >= 0.0);
    if t <= SERIES_ASYMPT_SEAM_I {
        i0_series(t) * (-t).exp()
    } else {
        asympt_i(0, t)
    }
}

/// I1(t) * e^{-t}.
pub fn i1e(t: f64) -> f64 {
    debug_assert!(t >= 0.0);
    if t <= SERIES_ASYMPT_SEAM_I {
        i1_series(t) * (-t).exp()
    } else {
        asympt_i(1, t)
    }
}

/// K0(t) * e^{t}.
pub fn k0e(t: f64) -> f64 {
    debug_assert!(t > 0.0);
    if t <= SERIES_CHEB_SEAM_K {
        k_series(0, t) * t.exp()
    } else {
        cheb_eval(&K0E_CHEB, t) / (t * 2.0 / std::f64::consts::PI).sqrt()
    }
}

/// K1(t) * e^{t}.
pub fn k1e(t: f64) -> f64 {
    debug_assert!(t > 0.0);
    if t <= SERIES_CHEB_SEAM_K {
        k_series(1, t) * t.exp()
    } else {
        cheb_eval(&K1E_CHEB, t) / (t * 2.0 / std::f64::consts::PI).sqrt()
    }
}

pub fn i0(t: f64) -> f64 {
    if t <= SERIES_ASYMPT_SEAM_I {
        i0_series(t)
    } else {
        i0e(t) * t.exp()
    }
}

pub fn i1(t: f64) -> f64 {
    if t <= SERIES_ASYMPT_SEAM_I {
        i1_series(t)
    } else {
        i1e(t) * t.exp()
    }
}

pub fn k0(t: f64) -> f64 {
    if t <= SERIES_CHEB_SEAM_K {
        k_series(0, t)
    } else {
        k0e(t) * (-t).exp()
    }
}

pub fn k1(t: f64) -> f64 {
    if t <= SERIES_CHEB_SEAM_K {
        k_series(1, t)
    } else {
        k1e(t) * (-t).exp()
    }
}

/// Ascending series Σ (t²/4)^k / (k!)², all terms positive.
fn i0_series(t: f64) -> f64 {
    let x = t * t * 0.25;
    let mut term = 1.0;
    let mut sum = Kahan::default();
    sum.add(1.0);
    for k in 1..200u64 {
        term *= x / ((k * k) as f64);
        sum.add(term);
        if term < 1e-18 * sum.value() {
            break;
        }
    }
    sum.value()
}

fn i1_series(t: f64) -> f64 {
    let x = t * t * 0.25;
    let mut term = 1.0;
    let mut sum = Kahan::default();
    sum.add(1.0);
    for k in 1..200u64 {
        term *= x / ((k * (k + 1)) as f64);
        sum.add(term);
        if term < 1e-18 * sum.value() {
            break;
        }
    }
    sum.value() * 0.5 * t
}

/// Scaled asymptotic expansion of I_ν for t > ~20:
/// I_ν(t) e^{-t} ~ (2πt)^{-1/2} Σ_k (-1)^k a_k(ν) t^{-k},
/// a_k(ν) = Π_{j=1..k} (4ν² - (2j-1)²) / (8j).
fn asympt_i(nu: u32, t: f64) -> f64 {
    let nu2 = (4 * nu * nu) as f64;
    let mut term = 1.0f64;
    let mut sum = Kahan::default();
    sum.add(1.0);
    let mut prev = 1.0f64;
    for k in 1..60 {
        let kk = k as f64;
        term *= -(nu2 - (2.0 * kk - 1.0).powi(2)) / (8.0 * kk * t);
        if term.abs() > prev {
            break; // divergent tail reached
        }
        sum.add(term);
        prev = term.abs();
        if prev < 1e-18 {
            break;
        }
    }
    sum.value() / (2.0 * std::f64::consts::PI * t).sqrt()
}

/// Ascending series for K0/K1 with the log term, in pair arithmetic.
///
/// K0(t) = -(ln(t/2)+γ) I0(t) + Σ_{k≥1} H_k x^k/(k!)²,   x = t²/4
/// K1(t) = (ln(t/2)+γ) I1(t) + 1/t - (t/4) Σ_{k≥0} (H_k + H_{k+1}) x^k/(k!(k+1)!)
fn k_series(nu: u32, t: f64) -> f64 {
    let x = Dd::prod(t, t).mul_f64(0.25);
    let logt2 = Dd::from_f64((0.5 * t).ln());
    let gl = logt2 + euler_gamma_dd();
    if nu == 0 {
        let mut term = Dd::ONE;
        let mut i0 = Dd::ONE;
        let mut hsum = Dd::ZERO;
        let mut h = Dd::ZERO;
        for k in 1..60u32 {
            let kf = k as f64;
            term = term * x;
            term = term.div_f64(kf * kf);
            h = h.add_f64(1.0 / kf);
            i0 = i0 + term;
            hsum = hsum + term * h;
            if term.hi < 1e-34 * i0.hi {
                break;
            }
        }
        (hsum - gl * i0).to_f64()
    } else {
        // k=0 terms: Σ x^k/(k!(k+1)!) starts at 1, H_0 + H_1 = 1.
        let mut term = Dd::ONE;
        let mut i1s = Dd::ONE;
        let mut hs = Dd::ONE;
        let mut h2 = Dd::from_f64(1.0);
        for k in 1..60u32 {
            let kf = k as f64;
            term = term * x;
            term = term.div_f64(kf * (kf + 1.0));
            h2 = h2.add_f64(1.0 / kf + 1.0 / (kf + 1.0));
            i1s = i1s + term;
            hs = hs + term * h2;
            if term.hi < 1e-34 * i1s.hi {
                break;
            }
        }
        let i1v = i1s.mul_f64(0.5 * t);
        (gl * i1v + Dd::ONE.div_f64(t) - hs.mul_f64(0.25 * t)).to_f64()
    }
}

/// Chebyshev coefficients of sqrt(2t/π) e^t K0(t) over y = 4/t - 1, t ∈ [2, ∞).
const K0E_CHEB: [f64; 26] = [
    1.9470801528600735614,
    -0.025091954503380809303,
    0.0012525861146772193004,
    -0.00010252457224451741590,
    0.000011130340992367561545,
    -1.4615294507429677033e-6,
    2.2075978855319633155e-7,
    -3.7185329351429390207e-8,
    6.8410893662933769909e-9,
    -1.3544365764715988642e-9,
    2.8543500586874655884e-10,
    -6.3491578109233727996e-11,
    1.4808331444582782408e-11,
    -3.6021279493778237835e-12,
    9.0986014938749799567e-13,
    -2.3777733246760546782e-13,
    6.4093195280428185646e-14,
    -1.7772984923934981830e-14,
    5.0586491347305698614e-15,
    -1.4749641154455083119e-15,
    4.3979843802055255905e-16,
    -1.3390347046986471937e-16,
    4.1572911551159880588e-17,
    -1.3145791186184579352e-17,
    4.2291342715805038797e-18,
    -1.3828705421726237373e-18,
];

/// Chebyshev coefficients of sqrt(2t/π) e^t K1(t) over the same variable.
const K1E_CHEB: [f64; 26] = [
    2.1707456331034522408,
    0.082919144915586496242,
    -0.0022802079498951452471,
    0.00015575944821741804550,
    -0.000015448624702449027451,
    1.9200971856838043251e-6,
    -2.7941602977436567974e-7,
    4.5807223859670149311e-8,
    -8.2547241410983378116e-9,
    1.6077770889213073168e-9,
    -3.3434193667657288495e-10,
    7.3551513648048494187e-11,
    -1.6994684532881865176e-11,
    4.1008391435614419790e-12,
    -1.0286119996309397657e-12,
    2.6716523546317710857e-13,
    -7.1623744716049709125e-14,
    1.9764832698093293056e-14,
    -5.6010196328357905933e-15,
    1.6266497804027023957e-15,
    -4.8328245012991986051e-16,
    1.4665864849973658449e-16,
    -4.5395345666330931031e-17,
    1.4314456324007265505e-17,
    -4.5932175427333755206e-18,
    1.4983196424996573038e-18,
];

/// Clenshaw recurrence in y = 4/t - 1, carried in pair arithmetic (plain f64
/// Clenshaw loses a few ulps near y = ±1, most of the 5e-15 budget).
fn cheb_eval(coeffs: &[f64], t: f64) -> f64 {
    let y = 4.0 / t - 1.0;
    let two_y = 2.0 * y;
    let mut b1 = Dd::ZERO;
    let mut b2 = Dd::ZERO;
    for &ck in coeffs.iter().skip(1).rev() {
        let b0 = b1.mul_f64(two_y) - b2 + Dd::from_f64(ck);
        b2 = b1;
        b1 = b0;
    }
    (b1.mul_f64(y) - b2).add_f64(0.5 * coeffs[0]).to_f64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i0_at_zero_is_one() {
        assert_eq!(i0(0.0), 1.0);
        assert_eq!(i1(0.0), 0.0);
    }

    #[test]
    fn k0_small_t_log_behavior() {
        // K0(t) + ln(t/2) + γ = O(t² log t)
        let t = 1e-6;
        let expected = -(t / 2.0f64).ln() - crate::constants::EULER_GAMMA;
        assert!((k0(t) - expected).abs() < 1e-11);
    }

    #[test]
    fn k_seam_agreement() {
        // Series and Chebyshev branches evaluated at the same point.
        let t = SERIES_CHEB_SEAM_K;
        let series0 = k_series(0, t) * t.exp();
        let cheb0 = cheb_eval(&K0E_CHEB, t) / (t * 2.0 / std::f64::consts::PI).sqrt();
        assert!((series0 / cheb0 - 1.0).abs() < 1e-14, "{series0} vs {cheb0}");
        let series1 = k_series(1, t) * t.exp();
        let cheb1 = cheb_eval(&K1E_CHEB, t) / (t * 2.0 / std::f64::consts::PI).sqrt();
        assert!((series1 / cheb1 - 1.0).abs() < 1e-14, "{series1} vs {cheb1}");
    }

    #[test]
    fn i_seam_agreement() {
        let t = SERIES_ASYMPT_SEAM_I;
        let series = i0_series(t) * (-t).exp();
        let asympt = asympt_i(0, t);
        assert!((series / asympt - 1.0).abs() < 1e-14);
        let series = i1_series(t) * (-t).exp();
        let asympt = asympt_i(1, t);
        assert!((series / asympt - 1.0).abs() < 1e-14);
    }
}
