use std::fmt;

use crate::poly::LaurentPoly;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by the library.
///
/// Domain errors come from bad inputs (genus, parity, malformed data);
/// internal errors mean a certified identity failed to hold.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("not invertible as polynomial: {0}")]
    NotInvertible(LaurentPoly),
    #[error("Laurent part not expandable: numerator has negative exponents")]
    LaurentNotExpandable,
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("inexact division, remainder {remainder}")]
    InexactDivision { remainder: LaurentPoly },
    #[error("invalid denominator factor (1 - u^{a}*v^{b})^{k}: exponents and power must be positive")]
    BadDenominator { a: i64, b: i64, k: i64 },
    #[error("invalid Harder-Narasimhan type: {0}")]
    InvalidHnType(String),
    #[error("genus out of supported range: g = {genus}, need g >= {min}")]
    GenusOutOfRange { genus: i64, min: i64 },
    #[error("rank must be positive, got {0}")]
    BadRank(i64),
    #[error("gcd({rank}, {degree}) != 1: semistable != stable; use rank-2 pipeline or report series only")]
    NotCoprime { rank: i64, degree: i64 },
    #[error("degree must be even, got {0}")]
    OddDegree(i64),
    #[error("empty point set")]
    EmptyInput,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("root system not negation-closed")]
    RootSystemNotClosed,
    #[error("exactness budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("stratum {label} has non-positive codimension {codim}")]
    NonPositiveCodim { label: String, codim: i64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("identity check failed: {what}; residual {residual}")]
    Mismatch { what: String, residual: LaurentPoly },
}

impl Error {
    /// True for failures of internal identities, as opposed to bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Invariant(_) | Error::Mismatch { .. })
    }

    pub(crate) fn invariant(msg: impl fmt::Display) -> Self {
        Error::Invariant(msg.to_string())
    }
}
