//! Positive zeros of J0 and J1: McMahon asymptotic first guess refined by
//! Newton steps, memoized per kind behind a lock so concurrent readers see a
//! single initialization.

use super::j::{j0, j1};
use crate::error::{Error, Result};
use std::sync::Mutex;

static J0_ZEROS: Mutex<Vec<f64>> = Mutex::new(Vec::new());
static J1_ZEROS: Mutex<Vec<f64>> = Mutex::new(Vec::new());

/// m-th positive zero (m >= 1) of J0 or J1.
pub fn bessel_j_zero(order: u32, m: usize) -> Result<f64> {
    if m == 0 {
        return Err(Error::Domain("zero index m starts at 1".into()));
    }
    let table = match order {
        0 => &J0_ZEROS,
        1 => &J1_ZEROS,
        _ => return Err(Error::Domain(format!("no zero table for order {order}"))),
    };
    let mut guard = table.lock().unwrap();
    while guard.len() < m {
        let next = compute_zero(order, guard.len() + 1);
        guard.push(next);
    }
    Ok(guard[m - 1])
}

fn compute_zero(order: u32, m: usize) -> f64 {
    let mu = (4 * order * order) as f64;
    let beta = (m as f64 + 0.5 * order as f64 - 0.25) * std::f64::consts::PI;
    // McMahon expansion.
    let b8 = 8.0 * beta;
    let mut x = beta - (mu - 1.0) / b8
        - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8.powi(3));
    // Newton: J0' = -J1, J1' = J0 - J1/x.
    for _ in 0..4 {
        let (f, df) = if order == 0 {
            (j0(x), -j1(x))
        } else {
            (j1(x), j0(x) - j1(x) / x)
        };
        let step = f / df;
        x -= step;
        if step.abs() < 1e-15 * x {
            break;
        }
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_zeros() {
        assert!((bessel_j_zero(0, 1).unwrap() - 2.404825557695773).abs() < 1e-12);
        assert!((bessel_j_zero(1, 1).unwrap() - 3.831705970207512).abs() < 1e-12);
        assert!((bessel_j_zero(0, 2).unwrap() - 5.520078110286311).abs() < 1e-12);
    }

    #[test]
    fn strictly_increasing() {
        let mut prev = 0.0;
        for m in 1..=50 {
            let z = bessel_j_zero(0, m).unwrap();
            assert!(z > prev);
            prev = z;
        }
    }
}
