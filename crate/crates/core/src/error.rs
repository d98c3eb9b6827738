use thiserror::Error;

use crate::geometry::Rational;

/// Errors produced by the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    /// The convex hull of the input has zero area (empty, a point or a segment).
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("scale factor must be positive, got {0}")]
    NonpositiveScale(Box<Rational>),

    #[error("direction ({0}, {1}) is not primitive")]
    NonPrimitiveDirection(String, String),

    #[error("box {requested} is smaller than the certified search bound {required}")]
    BoxTooSmall { requested: u64, required: u64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The Minkowski construction of Q_k disagrees with the closed-form vertex list.
    #[error("vertex mismatch for Q_{k}: computed {computed}, expected {expected}")]
    VertexMismatch { k: u64, computed: String, expected: String },

    #[error("width mismatch for Q_{k}: computed {computed}, expected {expected}")]
    WidthMismatch { k: u64, computed: Box<Rational>, expected: Box<Rational> },

    #[error("seshadri chain broken at k = {k}: {reason}")]
    ChainBroken { k: u64, reason: String },

    #[error("volume-gap relation violated by {0} polygon(s)")]
    GapViolation(usize),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for failures of internal cross-checks (as opposed to bad input).
    pub fn is_verification_failure(&self) -> bool {
        matches!(
            self,
            Error::VertexMismatch { .. }
                | Error::WidthMismatch { .. }
                | Error::ChainBroken { .. }
                | Error::GapViolation(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
