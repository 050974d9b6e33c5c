//! Exact rational arithmetic, multivariate polynomials, polynomial matrices,
//! and exterior-algebra objects with polynomial coefficients.

mod exterior;
mod matrix;
mod monomial;
mod parse;
mod polynomial;

use thiserror::Error;

pub use exterior::{lie_bracket, ExteriorKind, FormKind, Graded, PolyForm, PolyMultivector, VectorField, VectorKind};
pub(crate) use exterior::sort_with_sign;
pub use matrix::{jacobian, PolyMatrix, RatMatrix};
pub use monomial::Monomial;
pub use parse::{parse_polynomial, parse_rational, parse_with_prefix};
pub use polynomial::{poly_arith, ArithOp, Polynomial};

/// Reduced fraction with positive denominator; zero is `0/1`.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("ambient mismatch: {0} vs {1} variables")]
    AmbientMismatch(usize, usize),
    #[error("variable z{index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("exterior degree {degree} exceeds ambient dimension {nvars}")]
    DegreeOverflow { degree: usize, nvars: usize },
    #[error("cannot contract a degree-0 form")]
    DegreeZeroContraction,
    #[error("slice matrix does not have full column rank")]
    RankDeficient,
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}
