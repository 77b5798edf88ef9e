//! Error type shared by all geometry modules.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum GeomError {
    #[error("invalid triangle: sides ({a}, {b}, {c}) violate the triangle inequality for k = {k}")]
    InvalidTriangle { a: f64, b: f64, c: f64, k: f64 },

    #[error("side {side} exceeds pi/sqrt(k) = {limit} for k = {k}")]
    SideTooLong { side: f64, limit: f64, k: f64 },

    #[error("perimeter {perimeter} exceeds the model-plane bound {limit}")]
    PerimeterTooLong { perimeter: f64, limit: f64 },

    #[error("{what} out of range: {value}")]
    OutOfRange { what: &'static str, value: f64 },

    #[error("point does not belong to this space kind")]
    MismatchedSpace,

    #[error("operation requires distinct points")]
    CoincidentPoints,

    #[error("geodesic step {step} exceeds the minimality bound {bound}")]
    StepTooLarge { step: f64, bound: f64 },

    #[error("direction set is empty")]
    EmptySet,

    #[error("no admissible direction at either endpoint (gap {gap}, epsilon {epsilon})")]
    NoAdmissibleDirection { gap: f64, epsilon: f64 },

    #[error("curve family did not converge: {0}")]
    NonConvergent(String),

    #[error("subset membership violated by {defect} at tolerance {tol}")]
    MembershipEscape { defect: f64, tol: f64 },

    #[error("unsupported configuration: {0}")]
    Unsupported(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, GeomError>;
