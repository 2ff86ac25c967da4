use thiserror::Error;

/// Errors raised across the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count {0} outside the supported range 1..=24")]
    VariableCount(usize),
    #[error("point {point:#x} out of range for {n} variables")]
    PointOutOfRange { point: u64, n: usize },
    #[error("variable count mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("affine constraints are inconsistent (empty solution set)")]
    Inconsistent,
    #[error("constant affine form where a degree-1 form is required")]
    DegenerateForm,
    #[error("affine subspace has dimension zero")]
    ZeroDimension,
    #[error("degree {degree} out of range for {n} variables")]
    DegreeOutOfRange { degree: usize, n: usize },
    #[error("function is not balanced")]
    NotBalanced,
    #[error("function is not symmetric")]
    NotSymmetric,
    #[error("function is not rotation symmetric")]
    NotRotationSymmetric,
    #[error("computation needs {required} work units, budget is {budget}")]
    CostLimit { required: u64, budget: u64 },
    #[error("value pattern mismatch: {0}")]
    PatternMismatch(String),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("orbit assignment is incomplete: {0}")]
    IncompleteAssignment(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
