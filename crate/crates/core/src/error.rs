use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: duplicate edge ({u}, {v})")]
    DuplicateEdge { line: usize, u: usize, v: usize },

    #[error("line {line}: self-loop on vertex {v}")]
    SelfLoop { line: usize, v: usize },

    #[error("weight {weight} outside [1, {max}]")]
    WeightOutOfRange { weight: u64, max: u64 },

    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },

    #[error("vertex {v} out of range (n = {n})")]
    InvalidVertex { v: usize, n: usize },

    #[error("no edge between {u} and {v}")]
    NoSuchEdge { u: usize, v: usize },

    #[error("update on ({u}, {v}) is not an increase: {current} -> {requested}")]
    NotAnIncrease {
        u: usize,
        v: usize,
        current: u64,
        requested: u64,
    },

    #[error("n * W = {0} exceeds the supported distance range")]
    DistanceOverflow(u128),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("level mismatch: expected {expected}, found {found}")]
    LevelMismatch { expected: usize, found: usize },

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("infeasible instance: {0}")]
    Infeasible(String),

    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
