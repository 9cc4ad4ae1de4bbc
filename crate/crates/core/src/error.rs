use thiserror::Error;

/// Errors raised across the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },

    #[error("ring mismatch: expected {expected}, found {found}")]
    RingMismatch { expected: &'static str, found: &'static str },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: u32, right: u32 },

    #[error("polynomial is not homogeneous: found terms of degree {first} and {second}")]
    Inhomogeneous { first: u32, second: u32 },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("singular matrix")]
    SingularMatrix,

    #[error("matrix shape {rows}x{cols} does not fit {expected} variables")]
    BadMatrixShape { rows: usize, cols: usize, expected: usize },

    #[error("degree {degree} exceeds truncation bound {bound}")]
    BeyondTruncation { degree: u32, bound: u32 },

    #[error("zero generator in ideal presentation")]
    ZeroGenerator,

    #[error("linear forms are linearly dependent")]
    DependentForms,

    #[error("dual generator kernel has dimension {dim} in degree {degree} (expected 1)")]
    KernelDimension { dim: usize, degree: u32 },

    #[error("genericity not achieved after {attempts} attempts: {reason}")]
    GenericityNotAchieved { attempts: u32, reason: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("empty linear system: {0}")]
    EmptyLinearSystem(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
