use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),

    #[error("malformed wire value: {0}")]
    Wire(String),

    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("series must have constant term 1")]
    ConstantTermNotOne,

    #[error("series must have zero constant term")]
    ConstantTermNotZero,

    #[error("series constant term is not invertible")]
    ConstantTermNotInvertible,

    #[error("linear coefficient is not invertible")]
    LinearTermNotInvertible,

    #[error("unknown identity check {0:?}")]
    UnknownCheck(String),

    #[error("unknown family {0:?}")]
    UnknownFamily(String),

    #[error("{0}")]
    NotApplicable(String),

    #[error("csv: {0}")]
    Csv(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
