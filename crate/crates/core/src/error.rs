use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Matrix dimensions do not agree with each other or with a subsystem shape.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// The subsystem factorization is not the one an operation requires.
    #[error("shape error: {0}")]
    Shape(String),

    /// A parameter lies outside the domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An input violated a numerical precondition (e.g. Hermiticity).
    #[error("contract violation: {0}")]
    Contract(String),

    /// Input state failed validation on load.
    #[error("invalid state: {0}")]
    Validation(String),

    /// A computed quantity fell outside what round-off can explain.
    #[error("numerics error: {0}")]
    Numerics(String),

    #[error("bracket error: predicate is {value} at both ends of [{lo}, {hi}]")]
    Bracket { lo: f64, hi: f64, value: bool },

    #[error("predicate is not monotone on [{lo}, {hi}]: {detail}")]
    NotMonotone { lo: f64, hi: f64, detail: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Numerics(_) => 3,
            _ => 2,
        }
    }
}
