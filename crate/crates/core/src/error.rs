//! Error types shared across the crate.

use thiserror::Error;

/// Parse-time error codes for the stream file format. Each maps to a distinct
/// failure class so callers can react programmatically.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseCode {
    Syntax,
    SideViolation,
    Containment,
    WeightMismatch,
    Horizon,
}

impl std::fmt::Display for ParseCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ParseCode::Syntax => "syntax",
            ParseCode::SideViolation => "side-violation",
            ParseCode::Containment => "containment",
            ParseCode::WeightMismatch => "weight-mismatch",
            ParseCode::Horizon => "horizon",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    /// The metric's denominator is zero (or another degeneracy applies); this
    /// is deliberately distinct from the value 0.
    #[error("undefined: {0}")]
    Undefined(String),

    #[error("unknown node `{0}`")]
    UnknownNode(String),

    #[error("operation requires a {expected} stream, got {actual}")]
    KindMismatch {
        expected: &'static str,
        actual: &'static str,
    },

    #[error("reversed interval [{begin},{end}]")]
    ReversedInterval { begin: String, end: String },

    #[error("stream horizon has zero length")]
    EmptyHorizon,

    #[error("stream is unweighted; treat weights as 1 or attach weights explicitly")]
    Unweighted,

    #[error("invalid stream: {0}")]
    InvalidStream(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error ({code}) at line {line}: {message}")]
    Parse {
        line: usize,
        code: ParseCode,
        message: String,
    },
}

impl Error {
    pub fn is_undefined(&self) -> bool {
        matches!(self, Error::Undefined(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
