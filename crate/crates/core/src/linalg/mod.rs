//! Exact linear algebra over ℚ and cyclotomic fields.

mod field;
mod matrix;
mod scalar;

pub use field::{cyclotomic_polynomial, Field};
pub use matrix::{solve_sylvester_family, CoordinateSolver, Matrix, RowReducer};
pub use scalar::{format_rational, parse_rational, Rational, Scalar};
