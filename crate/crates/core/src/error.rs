use thiserror::Error;

#[derive(Debug, Error)]
pub enum AtlasError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid Cartan type: {0}")]
    InvalidType(String),
    #[error("invalid orbit label: {0}")]
    InvalidLabel(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("not supported for this type: {0}")]
    Unsupported(String),
    #[error("invalid subsystem basis: {0}")]
    DependentSubsystem(String),
    #[error("weight is not dominant: {0:?}")]
    NotDominant(Vec<i64>),
    #[error("branching bookkeeping failed: {0}")]
    Bookkeeping(String),
    #[error("no representative found for diagram {marks:?} after {attempts} attempts")]
    RepresentativeNotFound { marks: Vec<i64>, attempts: usize },
    #[error("sl2 triple could not be completed: {0}")]
    TripleCompletion(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("data error: {0}")]
    Data(String),
}

pub type Result<T> = std::result::Result<T, AtlasError>;
