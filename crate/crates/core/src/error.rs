use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow")]
    Overflow,
    #[error("point {0} is listed more than once")]
    DuplicateLabel(u32),
    #[error("center {0} must not belong to the exchanged set")]
    CenterInSet(u32),
    #[error("exchanged set has odd size {0}")]
    OddSet(usize),
    #[error("sigma needs three distinct points")]
    SigmaPoints,
    #[error("Noether equalities fail: sum = {sum}, sum of squares = {sum_sq}, degree = {degree}")]
    Noether { degree: i64, sum: i64, sum_sq: i64 },
    #[error("degree must be positive")]
    NonPositiveDegree,
    #[error("multiplicities must be positive")]
    NonPositiveMultiplicity,
    #[error("class is not a proper homaloidal type")]
    NotProper,
    #[error("the identity type has no predecessor")]
    DegreeOne,
    #[error("no admissible step index s")]
    NoAdmissibleIndex,
    #[error("step index {0} is not admissible")]
    InadmissibleIndex(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("determinant is {0}, expected {1}")]
    Determinant(i64, &'static str),
    #[error("matrix has a negative entry")]
    NegativeEntry,
    #[error("matrix is not ordered")]
    NotOrdered,
    #[error("continued fraction tuple must have even positive length")]
    OddWord,
    #[error("exponents must be positive")]
    ZeroExponent,
    #[error("trace {0} is too small, need |trace| >= 3")]
    SmallTrace(i64),
    #[error("search budget exceeded")]
    BudgetExceeded,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

pub(crate) fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}
