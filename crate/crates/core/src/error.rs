use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Dynkin type: {0}")]
    InvalidType(String),
    #[error("invalid height function: {0}")]
    InvalidHeight(String),
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("dimension vector {0} is not a positive root")]
    NotARoot(String),
    #[error("representation does not fit the quiver: {0}")]
    QuiverMismatch(String),
    #[error("Krull-Schmidt system has no non-negative integer solution: {0}")]
    InconsistentDecomposition(String),
    #[error("kernel/cokernel bookkeeping violated: {0}")]
    KernelMismatch(String),
    #[error("generic copresentation search failed: {0}")]
    GenericSearch(String),
    #[error("Laurent division is not exact")]
    InexactDivision,
    #[error("not a cluster variable: {0}")]
    NotAClusterVariable(String),
    #[error("point count interpolation failed: {0}")]
    Interpolation(String),
    #[error("point count exceeds the enumeration budget: {0}")]
    TooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;
