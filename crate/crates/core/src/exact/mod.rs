//! Exact linear algebra over the rationals, plus a floating-point Jacobi
//! eigensolver used as an independent oracle.

pub mod charpoly;
pub mod det;
pub mod form;
pub mod jacobi;
pub mod matrix;
pub mod rational;

pub use charpoly::{characteristic_polynomial, Polynomial};
pub use det::{charpoly_eval, determinant};
pub use form::{restrict_traceless, traceless_seeds, WeightedForm};
pub use jacobi::jacobi_eigenvalues;
pub use matrix::{DimVector, SymMatrix};
pub use rational::{format_rational, int, parse_rational, rat, Rational, Surd};

use crate::error::Result;

/// All eigenvalues of `m`, ascending, by cyclic Jacobi rotations.
pub fn eigen_numeric(m: &SymMatrix, tol: f64) -> Result<Vec<f64>> {
    jacobi_eigenvalues(m.to_f64_rows(), tol)
}
