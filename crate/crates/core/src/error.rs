use thiserror::Error;

pub type Result<T> = std::result::Result<T, XftError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum XftError {
    #[error("invalid size: {0}")]
    InvalidSize(String),

    #[error("size mismatch: expected {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("non-finite sample at index {index}")]
    NonFinite { index: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("no convergence after {iterations} iterations (worst residual {worst_residual:e})")]
    ConvergenceFailure {
        iterations: usize,
        worst_residual: f64,
    },

    /// The dense oracles are limited in size; the fast path has no such limit.
    #[error("n = {n} exceeds the dense-oracle limit {limit}; use the fast transform")]
    Capability { n: usize, limit: usize },

    #[error("|z| = {modulus} lies outside the closed unit disk")]
    OutOfDisk { modulus: f64 },

    #[error("|1 - z^2| = {distance:e} is below the singularity threshold (z too close to +-1)")]
    SingularParameter { distance: f64 },

    #[error("scaling a = 2i(1-z^2)/(pi z) is undefined at z = 0")]
    AbsentScaling,

    #[error("abscissae are complex (interior z); operation needs real frequencies")]
    UnsupportedInteriorZ,

    #[error("unknown signal '{0}'")]
    UnknownSignal(String),

    #[error("signal '{signal}' is missing parameter '{param}'")]
    MissingParam { signal: String, param: String },

    #[error("no closed-form reference for {0}")]
    NoClosedForm(String),
}

impl XftError {
    /// Short category label used by the CLI diagnostics.
    pub fn category(&self) -> &'static str {
        match self {
            XftError::InvalidSize(_) | XftError::SizeMismatch { .. } => "invalid-size",
            XftError::NonFinite { .. } => "non-finite",
            XftError::InvalidParameter(_) => "invalid-parameter",
            XftError::ConvergenceFailure { .. } => "convergence-failure",
            XftError::Capability { .. } => "capability",
            XftError::OutOfDisk { .. } => "out-of-disk",
            XftError::SingularParameter { .. } => "singular-parameter",
            XftError::AbsentScaling => "absent-scaling",
            XftError::UnsupportedInteriorZ => "unsupported-interior-z",
            XftError::UnknownSignal(_) | XftError::MissingParam { .. } => "signal",
            XftError::NoClosedForm(_) => "no-closed-form",
        }
    }
}
