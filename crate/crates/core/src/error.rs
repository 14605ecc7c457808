use num_bigint::BigInt;
use thiserror::Error;

use crate::scalar::ScalarKind;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation is undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial must have degree at least 1")]
    ConstantPolynomial,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("component kinds differ: {0} vs {1}")]
    KindMismatch(ScalarKind, ScalarKind),
    #[error("element lies in the null cone (a component is zero)")]
    NullCone,
    #[error("components over {0} have no Cartesian view")]
    NoCartesianView(ScalarKind),
    #[error("{value} does not lie in {field}")]
    FieldMismatch { value: String, field: String },
    #[error("{0} is not integral")]
    NotIntegral(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("element is a unit")]
    UnitInput,
    #[error("degenerate ideal (e{0}) has no norm")]
    DegenerateIdeal(u8),
    #[error("ideal has a zero component and infinite index")]
    InfiniteIndex,
    #[error("expansion did not terminate ({0})")]
    NonTermination(String),
    #[error("{0} has no expansion in this base")]
    NotRepresentable(String),
    #[error("digit {digit} is outside the digit set 0..{size}")]
    DigitOutOfRange { digit: u64, size: u64 },
    #[error("root iteration did not converge after {0} steps")]
    NonConvergence(usize),
    #[error("duplicate root {0}")]
    DuplicateRoot(String),
    #[error("root set is not closed under complex conjugation")]
    NotConjugateClosed,
    #[error("{0} is not a prime number")]
    NotPrime(BigInt),
    #[error("table lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Whether this error stems from malformed input rather than mathematics.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::Parse { .. } | Error::InvalidArgument(_))
    }
}
