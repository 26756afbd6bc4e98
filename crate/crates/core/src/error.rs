use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("base graph is disconnected")]
    DisconnectedBase,
    #[error("gcd of fundamental cycle voltages is {0}, expected 1 (covering would be disconnected)")]
    GcdNotOne(u64),
    #[error("invalid covering degree n = {0}, expected n >= 1")]
    InvalidN(u64),
    #[error("multigraph is disconnected")]
    Disconnected,
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("no rational function within degree bounds fits the series")]
    NoFit,
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("numeric instability: {0}")]
    NumericInstability(String),
    #[error("covering has {vertices} vertices, above the cap of {cap}")]
    TooLarge { vertices: usize, cap: usize },
    #[error("denominator degree bound {bound} exceeds the cap {cap}")]
    DegreeCapExceeded { bound: usize, cap: usize },
    #[error("rational function has a pole at x = 0")]
    PoleAtZero,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("i/o error: {0}")]
    Io(String),
    #[error("unknown example '{0}'")]
    UnknownExample(String),
    #[error("example '{name}' takes {expected} parameters, got {got}")]
    BadArity {
        name: String,
        expected: usize,
        got: usize,
    },
    #[error("malformed json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
