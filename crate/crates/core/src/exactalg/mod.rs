//! Exact arithmetic substrate: arbitrary-precision rationals and sparse
//! univariate polynomials in the similarity variable η.
//!
//! Every value is immutable and kept in canonical form, so structural
//! equality is mathematical equality.

mod polynomial;
mod rational;

pub use polynomial::{poly_arith, PolyOp, RationalPolynomial, Term};
pub use rational::{rat_arith, ParseRationalError, RatOp, Rational};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactAlgError {
    #[error("division by zero")]
    DivisionByZero,
}
