use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty sorou")]
    EmptySorou,

    #[error("invalid root: order must be positive, got {0}")]
    InvalidRoot(i64),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("parity undefined: relative order {0} is not squarefree")]
    ParityUndefined(u64),

    #[error("relative order {0} is not squarefree")]
    NotSquarefree(u64),

    #[error("no top prime: relative order is 1")]
    NoTopPrime,

    #[error("cannot split root {root} at prime {prime}: prime squared divides its order")]
    SplitRoot { root: String, prime: u64 },

    #[error("subset explosion: weight {weight} exceeds the guard of {limit}")]
    SubsetExplosion { weight: usize, limit: usize },

    #[error("sorou is not vanishing")]
    NotVanishing,

    #[error("sorou is not minimal vanishing")]
    NotMinimal,

    #[error("unrealizable assembly: {0}")]
    Unrealizable(String),

    #[error("type {0} has no minimal realization")]
    NoMinimalRealization(String),

    #[error("incomplete database: complete through weight {have}, need {need}")]
    IncompleteDatabase { have: u32, need: u32 },

    #[error("database error at line {line}: {message}")]
    Database { line: usize, message: String },

    #[error("cache error at line {line}: {message}")]
    Cache { line: usize, message: String },

    #[error("fixture mismatch: {0}")]
    FixtureMismatch(String),

    #[error("missing statistics for type {0}")]
    MissingStatistics(String),

    #[error("coefficient overflow while converting cyclotomic polynomial {0}")]
    CoefficientOverflow(u64),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
