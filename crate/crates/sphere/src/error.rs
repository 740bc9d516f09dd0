use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element {0} is not invertible")]
    NotInvertible(String),
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("unsupported ring {0}")]
    UnsupportedRing(String),
    #[error("generators {0} are linearly dependent")]
    DependentGenerators(String),
    #[error("infeasible strategy: {0}")]
    InfeasibleStrategy(String),
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("not an inverse loop: {0}")]
    NotInverseLoop(String),
    #[error("parameter {0} is not central")]
    NonCentralParameter(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("involution is not an anti-automorphism of order 2: {0}")]
    InvolutionNotAntiAutomorphism(String),
    #[error("invalid parameter at stage {stage}: {reason}")]
    InvalidStageParameter { stage: usize, reason: String },
    #[error("sphere of level {0} is empty")]
    EmptySphere(String),
    #[error("table has {size} elements, above the cap of {cap}")]
    TableTooLarge { size: usize, cap: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
