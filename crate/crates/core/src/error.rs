use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Coarse classification used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// The input was malformed or violated a precondition.
    Input,
    /// A configured size or time budget would be exceeded.
    Budget,
    /// An internal consistency check failed.
    Internal,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid cayley table: {0}")]
    InvalidTable(String),

    #[error("operation is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),

    #[error("group order {order} exceeds the configured limit {limit}")]
    OrderLimit { order: u128, limit: usize },

    #[error("inconsistent presentation: {0}")]
    InconsistentPresentation(String),

    #[error("group is not nilpotent: elements of {prime}-power order do not form a subgroup")]
    NotNilpotent { prime: u64 },

    #[error("invalid group spec: {0}")]
    InvalidSpec(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("{what} is {value}, above the limit {limit}")]
    LimitExceeded { what: &'static str, value: u128, limit: u128 },

    #[error("formula requires n not a prime power, got {0}")]
    PrimePowerRejected(u64),

    #[error("no dominating vertex in the component containing vertex {0}; input is not a p-group power graph")]
    NoDominatingVertex(usize),

    #[error("no engine can solve this instance: {0}")]
    NoFeasibleEngine(String),

    #[error("engine returned an invalid witness")]
    InvalidWitness,

    #[error("literal {literal} needs {needed} units but only {available} exist; b is too small")]
    InsufficientUnits { literal: String, needed: usize, available: u128 },

    #[error("embedding mismatch: {0}")]
    EmbeddingMismatch(String),

    #[error("not a candidate: {0}")]
    NotCandidate(String),

    #[error("least common parent is ambiguous between classes {0} and {1}")]
    Ambiguous(usize, usize),

    #[error("io error: {0}")]
    Io(String),

    #[error("internal check failed: {0}")]
    Internal(String),
}

impl Error {
    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }

    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::OrderLimit { .. } | Error::LimitExceeded { .. } => ErrorKind::Budget,
            Error::InvalidWitness | Error::EmbeddingMismatch(_) | Error::Internal(_) => ErrorKind::Internal,
            _ => ErrorKind::Input,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
