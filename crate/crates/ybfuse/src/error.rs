use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("pole at evaluation point {0}")]
    PoleAtEvaluationPoint(String),

    #[error("invalid sites ({i}, {j}) for an operator on {n} tensor factors")]
    InvalidSites { i: usize, j: usize, n: usize },

    #[error("subspace is not invariant: column {col} of the operator image leaves the span")]
    SubspaceNotInvariant { col: usize },

    #[error("basis matrix is rank deficient ({rank} < {cols})")]
    DegenerateBasis { rank: usize, cols: usize },

    #[error("deformation parameter must be a rational other than 0, 1, -1 (got {0})")]
    InvalidDeformationParameter(String),

    #[error("unitarity violated: R(t) R_21(t*) is not a scalar matrix")]
    UnitarityViolated,

    #[error("invalid contents: {0}")]
    InvalidContents(String),

    #[error("singular contents: {0}")]
    SingularContents(String),

    #[error("genuine singularity at step {step}: {detail}")]
    GenuineSingularity { step: usize, detail: String },

    #[error("rank {rank} does not match the tableau-count oracle {expected}")]
    SchurWeylMismatch { rank: usize, expected: usize },

    #[error("transposition at position {0} is not admissible for these contents")]
    NotAdmissible(usize),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("invalid kernel specification: {0}")]
    InvalidKernel(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
