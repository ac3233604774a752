use thiserror::Error;

/// Errors raised across the library.
///
/// The CLI maps [`Error::is_validation`] failures to exit status 2 and
/// everything else (numeric degeneracy, budget exhaustion) to exit status 1.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid measure: {0}")]
    InvalidMeasure(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("not a valid measure transform: {0}")]
    NotAMeasureTransform(String),
    #[error("representation failure: {0}")]
    Representation(String),
    #[error("numeric degeneracy: {0}")]
    Degenerate(String),
    #[error("degenerate rate fit: {0}")]
    DegenerateFit(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("quadrature budget exhausted after {intervals} intervals (partial value {partial}, error estimate {error})")]
    QuadratureBudget {
        partial: f64,
        error: f64,
        intervals: usize,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Input validation failures, as opposed to numerical trouble.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::InvalidMeasure(_)
                | Error::InvalidArgument(_)
                | Error::Hypothesis(_)
                | Error::Precondition(_)
                | Error::Unsupported(_)
                | Error::Json(_)
                | Error::Io(_)
        )
    }

    /// Short machine-readable tag used in CLI error JSON.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidMeasure(_) => "invalid_measure",
            Error::InvalidArgument(_) => "invalid_argument",
            Error::Hypothesis(_) => "hypothesis",
            Error::Precondition(_) => "precondition",
            Error::NotAMeasureTransform(_) => "not_a_measure_transform",
            Error::Representation(_) => "representation",
            Error::Degenerate(_) => "degenerate",
            Error::DegenerateFit(_) => "degenerate_fit",
            Error::Unsupported(_) => "unsupported",
            Error::QuadratureBudget { .. } => "quadrature_budget",
            Error::Io(_) => "io",
            Error::Json(_) => "json",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
