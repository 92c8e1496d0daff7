//! High-precision evaluation of single- and two-scale Bessel moments, exact
//! reconstruction of the holonomic operators annihilating them, and numeric
//! verification of the determinant, Wronskian, Mahler-measure and L-value
//! identities they satisfy.

pub mod constants;
pub mod dd;
pub mod error;
pub mod kernels;
pub mod mahler_lvalues;
pub mod moments;
pub mod determinant_lab;
pub mod operators;
pub mod exact;
pub mod quadrature;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
