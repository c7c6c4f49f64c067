use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{dividend} is not divisible by {divisor}")]
    DivisibilityViolation { dividend: String, divisor: String },

    #[error("division by zero")]
    ZeroDivisor,

    #[error("series has zero constant term and no reciprocal")]
    NonUnitSeries,

    #[error("inner series of a composition must have zero constant term")]
    NonZeroInnerConstant,

    #[error("series is not revertible: {0}")]
    NotRevertible(&'static str),

    #[error("coefficient a({index}) = {value} is not an integer")]
    NonIntegerCoefficient { index: usize, value: String },

    #[error("invalid reversive symbol: {0}")]
    InvalidSymbol(String),

    #[error("invalid tile set: {0}")]
    InvalidTileSet(String),

    #[error("{0}")]
    DomainError(String),

    #[error("n = {requested} exceeds the exhaustive cap {cap}")]
    CapExceeded { requested: usize, cap: usize },

    #[error("parse error: {0}")]
    ParseError(String),

    #[error("unknown sequence name `{0}`")]
    UnknownName(String),

    #[error("method `{method}` is unavailable for {target}")]
    MethodUnavailable { method: String, target: String },

    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

impl Error {
    /// Process exit status for the command-line front end: 3 for an
    /// exceeded exhaustive cap, 2 for everything else. Status 1 is reserved
    /// for verification mismatches, which are not errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CapExceeded { .. } => 3,
            _ => 2,
        }
    }
}
