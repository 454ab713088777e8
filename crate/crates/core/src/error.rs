//! Crate-wide error type.
//!
//! Every fallible operation returns [`Error`]. The [`Error::kind`] string is
//! stable and machine-readable; the `Display` form is for humans.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("extension degree must be at least 1")]
    DegreeZero,
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different field contexts")]
    MixedContexts,
    #[error("incompatible fields: {0}")]
    IncompatibleFields(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("problem size exceeds the supported limit: {0}")]
    TooLarge(String),
    #[error("wild cover: the characteristic divides the cover degree")]
    WildCover,
    #[error("imprimitive cover: gcd of the cover degree and all multiplicities exceeds 1")]
    Imprimitive,
    #[error("no supported smooth model: {0}")]
    UnsupportedModel(String),
    #[error("roots are not rational over the requested field: {0}")]
    RootsNotRational(String),
    #[error("power-sum recurrence produced a non-integer coefficient at index {0}")]
    NonIntegerCoefficient(usize),
    #[error("numerical root finding failed to converge")]
    NumericalFailure,
    #[error("element set is not closed under composition")]
    NotClosed,
    #[error("substitution does not act on monomials by scalars")]
    NotMonomialStable,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable identifier for this error variant, e.g. for JSON `error.kind`.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "NotPrime",
            Error::NotPrimePower(_) => "NotPrimePower",
            Error::DegreeZero => "DegreeZero",
            Error::DivisionByZero => "DivisionByZero",
            Error::MixedContexts => "MixedContexts",
            Error::IncompatibleFields(_) => "IncompatibleFields",
            Error::OutOfRange(_) => "OutOfRange",
            Error::TooLarge(_) => "TooLarge",
            Error::WildCover => "WildCover",
            Error::Imprimitive => "Imprimitive",
            Error::UnsupportedModel(_) => "UnsupportedModel",
            Error::RootsNotRational(_) => "RootsNotRational",
            Error::NonIntegerCoefficient(_) => "NonIntegerCoefficient",
            Error::NumericalFailure => "NumericalFailure",
            Error::NotClosed => "NotClosed",
            Error::NotMonomialStable => "NotMonomialStable",
            Error::SingularMatrix => "SingularMatrix",
            Error::InvalidCurve(_) => "InvalidCurve",
            Error::Parse(_) => "Parse",
        }
    }
}
