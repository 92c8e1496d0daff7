//! Fraction-free (Bareiss) elimination for overdetermined linear systems
//! with polynomial entries, solved over the rational-function field.

use super::poly::Poly;
use super::ratfunc::RatFn;
use crate::error::{Error, Result};

/// Solve A·x = b where the rows may outnumber the unknowns; every row must
/// be consistent or an error is returned.  Entries are polynomials (clear
/// denominators first); the solution comes back as rational functions.
pub fn solve_overdetermined(a: Vec<Vec<Poly>>, b: Vec<Poly>) -> Result<Vec<RatFn>> {
    let rows = a.len();
    if rows == 0 {
        return Err(Error::Inconsistent("empty system".into()));
    }
    let cols = a[0].len();
    if b.len() != rows {
        return Err(Error::Inconsistent("rhs length mismatch".into()));
    }
    // Augmented matrix.
    let mut m: Vec<Vec<Poly>> = a
        .into_iter()
        .zip(b)
        .map(|(mut row, rhs)| {
            row.push(rhs);
            row
        })
        .collect();

    // Bareiss forward elimination with row pivoting; the previous pivot
    // divides exactly at every step, keeping entries polynomial.
    let mut prev_pivot = Poly::one();
    let mut pivot_row = 0usize;
    let mut pivot_cols: Vec<usize> = Vec::new();
    for col in 0..cols {
        // Choose the lowest-degree nonzero pivot to slow coefficient growth.
        let mut best: Option<usize> = None;
        for (r, row) in m.iter().enumerate().skip(pivot_row) {
            if !row[col].is_zero() {
                let deg = row[col].degree().unwrap_or(0);
                if best.map_or(true, |b| deg < m[b][col].degree().unwrap_or(0)) {
                    best = Some(r);
                }
            }
        }
        let Some(p) = best else { continue };
        m.swap(pivot_row, p);
        // Condense every row below the pivot, including those whose entry in
        // this column is already zero: the uniform scaling keeps the Bareiss
        // exact-division invariant intact.
        for r in (pivot_row + 1)..rows {
            for c in 0..=cols {
                if c == col {
                    continue;
                }
                let val = m[pivot_row][col]
                    .mul(&m[r][c])
                    .sub(&m[r][col].mul(&m[pivot_row][c]));
                m[r][c] = val.div_exact(&prev_pivot).ok_or_else(|| {
                    Error::Inconsistent("fraction-free elimination lost exactness".into())
                })?;
            }
            m[r][col] = Poly::zero();
        }
        prev_pivot = m[pivot_row][col].clone();
        pivot_cols.push(col);
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }

    // Rows below the pivot block must be identically zero (consistency).
    for row in m.iter().skip(pivot_row) {
        if row.iter().any(|e| !e.is_zero()) {
            return Err(Error::Inconsistent(
                "overdetermined polynomial system has no solution".into(),
            ));
        }
    }
    if pivot_cols.len() != cols {
        return Err(Error::Inconsistent(
            "polynomial system is rank-deficient (solution not unique)".into(),
        ));
    }

    // Back-substitute over the rational-function field.
    let mut x = vec![RatFn::zero(); cols];
    for (i, &col) in pivot_cols.iter().enumerate().rev() {
        let row = &m[i];
        let mut rhs = RatFn::from_poly(row[cols].clone());
        for c in (col + 1)..cols {
            if !row[c].is_zero() {
                rhs = rhs.sub(&RatFn::from_poly(row[c].clone()).mul(&x[c]));
            }
        }
        x[col] = rhs.div(&RatFn::from_poly(row[col].clone()));
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::rat_i64;

    #[test]
    fn simple_polynomial_system() {
        // [x, 1; 1, 0]·(a, b) = (x²+x+1, x)  =>  a = x, b = x + 1
        let a = vec![
            vec![Poly::x(), Poly::one()],
            vec![Poly::one(), Poly::zero()],
        ];
        let b = vec![Poly::from_integers(&[1, 1, 1]), Poly::x()];
        let x = solve_overdetermined(a, b).unwrap();
        assert_eq!(x[0].as_poly().unwrap(), &Poly::x());
        assert_eq!(x[1].as_poly().unwrap(), &Poly::from_integers(&[1, 1]));
    }

    #[test]
    fn consistent_redundant_row() {
        let a = vec![
            vec![Poly::one(), Poly::zero()],
            vec![Poly::zero(), Poly::one()],
            vec![Poly::one(), Poly::one()],
        ];
        let b = vec![
            Poly::constant(rat_i64(2)),
            Poly::constant(rat_i64(3)),
            Poly::constant(rat_i64(5)),
        ];
        let x = solve_overdetermined(a, b).unwrap();
        assert_eq!(x[0].as_poly().unwrap(), &Poly::constant(rat_i64(2)));
    }

    #[test]
    fn inconsistent_detected() {
        let a = vec![vec![Poly::one()], vec![Poly::one()]];
        let b = vec![Poly::one(), Poly::constant(rat_i64(2))];
        assert!(solve_overdetermined(a, b).is_err());
    }
}
