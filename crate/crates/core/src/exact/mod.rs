//! Exact symbolic substrate: arbitrary-precision rational polynomials,
//! rational functions, Laurent polynomials in t over rational functions of
//! v = √u, and fraction-free linear solving.  No floating point enters any
//! symbolic path.

mod laurent;
mod poly;
mod ratfunc;
mod solve;

pub use laurent::Laurent;
pub use poly::{poly_to_string, rat_frac, rat_i64, rat_to_f64, Poly, Rat};
pub use ratfunc::RatFn;
pub use solve::solve_overdetermined;
