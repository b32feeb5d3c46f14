use std::fmt;

use thiserror::Error;

/// Which endpoint system of an interval problem failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Endpoint {
    Lower,
    Upper,
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::Lower => f.write_str("lower"),
            Endpoint::Upper => f.write_str("upper"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("value {value} is outside the domain of {semiring}")]
    Domain { value: String, semiring: String },

    #[error("semiring {0} is not idempotent")]
    NotIdempotent(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("semiring mismatch: {left} vs {right}")]
    SpecMismatch { left: String, right: String },

    #[error("no fixpoint after {iterations} iterations{}", endpoint.map(|e| format!(" ({e} endpoint system)")).unwrap_or_default())]
    NonConvergent {
        iterations: usize,
        endpoint: Option<Endpoint>,
    },

    #[error("graph contains a negative-weight cycle (no fixpoint after {iterations} iterations)")]
    NegativeCycle { iterations: usize },

    #[error("terms cancel exactly at the evaluation point")]
    CancellationAtPoint,

    #[error("limit is ambiguous: mixed-sign coefficients with tied maximal terms")]
    AmbiguousLimit,

    #[error("exact reduction is unsupported in dimension {0}")]
    UnsupportedDimension(usize),

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    /// Stable machine-readable name of the error kind.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Domain { .. } => "DomainError",
            Error::NotIdempotent(_) => "NotIdempotent",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::SpecMismatch { .. } => "SpecMismatch",
            Error::NonConvergent { .. } => "NonConvergent",
            Error::NegativeCycle { .. } => "NegativeCycle",
            Error::CancellationAtPoint => "CancellationAtPoint",
            Error::AmbiguousLimit => "AmbiguousLimit",
            Error::UnsupportedDimension(_) => "UnsupportedDimension",
            Error::DimensionMismatch(..) => "DimensionMismatch",
            Error::DegenerateInput(_) => "DegenerateInput",
            Error::GridMismatch(_) => "GridMismatch",
            Error::InvalidInput(_) => "InvalidInput",
            Error::Parse { .. } => "ParseError",
        }
    }

    /// Errors caused by malformed input rather than by the mathematics.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::Parse { .. } | Error::InvalidInput(_))
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
