use thiserror::Error;

/// Errors produced by evaluation and analysis routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Argument outside a function's domain.
    #[error("domain: {0}")]
    Domain(String),
    /// Result exceeds the representable range.
    #[error("overflow: {0}")]
    Overflow(String),
    /// A series failed to certify its tolerance within the term cap.
    #[error("series did not converge within {terms} terms (tail bound {tail_bound:.3e})")]
    NoConvergence { terms: usize, tail_bound: f64 },
    /// An iterative solver stopped before reaching the requested tolerance.
    #[error("tolerance not reached: {0}")]
    ToleranceNotReached(String),
    /// The requested extremum is unbounded on the given domain.
    #[error("unbounded: {0}")]
    Unbounded(String),
    /// Malformed request: bad id, missing parameter, empty grid.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    /// Stable machine-readable tag for this error, used by CLI output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::Overflow(_) => "overflow",
            Error::NoConvergence { .. } => "no_convergence",
            Error::ToleranceNotReached(_) => "tolerance_not_reached",
            Error::Unbounded(_) => "unbounded",
            Error::InvalidParameter(_) => "invalid_parameter",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
