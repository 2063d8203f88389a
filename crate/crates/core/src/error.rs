use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("zero raised to a negative power")]
    ZeroToNegativePower,
    #[error("expected an integral polynomial, got {0}")]
    NonIntegral(String),
    #[error("series constant term {0} is not invertible")]
    NotInvertible(String),
    #[error("series reversion needs zero constant term and unit linear coefficient")]
    ReversionPrecondition,
    #[error("continued fraction coefficient {index} is zero")]
    ZeroCoefficient { index: usize },
    #[error("continued fraction coefficient {index} ({value}) is not a unit")]
    NonUnitCoefficient { index: usize, value: String },
    #[error("{what} exceeds the cap of {cap}")]
    CapExceeded { what: String, cap: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid number: {0}")]
    InvalidNumber(String),
    #[error("the two evaluation routes disagree: {0}")]
    RouteMismatch(String),
    #[error("unknown identity: {0}")]
    UnknownIdentity(String),
    #[error("parse error at byte {offset}: {message}")]
    Parse {
        offset: usize,
        message: String,
        expected: Vec<String>,
    },
    #[error("parameters out of schedule for {id}: {reason}")]
    OutOfSchedule { id: String, reason: String },
}
