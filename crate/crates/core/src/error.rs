use thiserror::Error;

use crate::coeffring::Symbol;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("no value assigned to symbol {0}")]
    MissingAssignment(Symbol),

    #[error("series of order {order} needs {expected} coefficients, got {found}")]
    LengthMismatch {
        order: usize,
        expected: usize,
        found: usize,
    },

    #[error("zero divisor: divisor vanishes up to the truncation order")]
    ZeroDivisor,

    #[error("valuation mismatch: dividend valuation {dividend} is below divisor valuation {divisor}")]
    ValuationMismatch { dividend: usize, divisor: usize },

    #[error("non-constant unit: leading divisor coefficient must be a nonzero rational")]
    NonConstantUnit,

    #[error("composition requires zero constant term")]
    NonzeroConstantTerm,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown family {0:?}")]
    UnknownFamily(String),

    #[error("index {index} out of range for table of order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("insufficient precision: product reached order {reached}, {needed} required")]
    InsufficientOrder { reached: usize, needed: usize },

    #[error("parse error: {0}")]
    Parse(String),
}
