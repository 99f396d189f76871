//! Exact arithmetic substrate.
//!
//! Everything in the crate is computed over the rationals (or, for the
//! character-sum oracle, over small prime fields). This module provides the
//! coefficient type, univariate polynomials in `a`, bivariate polynomials in
//! `a` and `c`, Laurent carriers for Hilbert series and characters, matrices
//! over `Q[a]`, and an exact sparse kernel routine.

mod laurent;
mod linalg;
mod matrix;
mod poly;

pub use laurent::{LaurentInT, LaurentTZ};
pub use linalg::{kernel, rank, solve_affine, AffineSolution, SparseMatrix};
pub use matrix::{char_poly_in_c, PolyMatrix};
pub use poly::{BivarPoly, PolyA};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational number, always kept in lowest terms with positive denominator.
pub type Rational = BigRational;

/// The rational `n / d`.
///
/// Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}
