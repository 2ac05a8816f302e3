use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("singular evaluation: {0}")]
    Singular(String),

    #[error("required working precision {required} bits exceeds ceiling {ceiling} bits")]
    PrecisionCeiling { required: u32, ceiling: u32 },

    #[error("point is classified {found}, expected {expected}")]
    RegimeMismatch { expected: String, found: String },

    #[error("no sign change of |phi|-1 bracketed on ray at angle {angle}")]
    NoBracket { angle: f64 },

    #[error("ray at angle {angle} crosses the curve {crossings} times")]
    MultipleCrossings { angle: f64, crossings: usize },

    #[error("quadrature did not converge after {doublings} doublings (last change {last_change:e})")]
    NonConvergence { doublings: u32, last_change: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
