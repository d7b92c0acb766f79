use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field of order {p}^{f} exceeds the supported size")]
    TooLarge { p: u64, f: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("the zero element has no multiplicative order")]
    ZeroElement,
    #[error("{what} exceeds cap {cap}")]
    CapExceeded { what: &'static str, cap: u64 },
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("group is not transitive")]
    NotTransitive,
    #[error("not a subgroup of the ambient group")]
    NotSubgroup,
    #[error("not a normal subgroup")]
    NotNormal,
    #[error("index {index} exceeds cap {cap}")]
    IndexTooLarge { index: u64, cap: u64 },
    #[error("degree {degree} exceeds cap {cap}")]
    DegreeTooLarge { degree: u64, cap: u64 },
    #[error("constraint violated: {0}")]
    ConstraintViolated(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
