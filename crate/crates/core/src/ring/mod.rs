//! Exact Laurent polynomial and truncated power series arithmetic.

mod laurent;
mod matrix;
mod series;

pub use laurent::{symmetric_normalize, unit_equivalent, CoeffRing, LaurentPoly};
pub use matrix::PolyMatrix;
pub use series::{substitute_exp, PowerSeries};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("not a knot polynomial: {0}")]
    NotAKnotPolynomial(String),
    #[error("coefficients are not integral")]
    NotIntegral,
}
