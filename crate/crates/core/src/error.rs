use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A ratio was requested whose denominator evaluates to zero.
    #[error("zero denominator: {0}")]
    ZeroDenominator(String),

    /// A logarithm or similar was requested of a non-positive value.
    #[error("non-positive value: {0}")]
    NonPositive(String),

    /// The derivative formula has a pole at the requested point.
    #[error("singular point: {0}")]
    SingularPoint(String),

    #[error("{what}: size {got} exceeds the enumeration limit {limit}")]
    SizeLimit {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    #[error("duplicate coordinate {0}")]
    DuplicateCoordinate(String),

    #[error("regions too close: {0}")]
    Geometry(String),

    #[error("no positive root")]
    NoPositiveRoot,

    #[error("tolerance {tol:e} not reached (best residual {residual:e})")]
    ToleranceNotMet { tol: f64, residual: f64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
