use thiserror::Error;

/// Errors raised by the exact layer. Verification mismatches are reported
/// through [`crate::CheckReport`], not through this type.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("usage: {0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("element has a nonzero radical part and is not rational")]
    RadicalPart,
    #[error("polynomial is not divisible by x{i} - x{j}")]
    NotDivisible { i: usize, j: usize },
    #[error("polynomial is not symmetric in the requested variables")]
    NonSymmetric,
    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeCap { degree: u32, cap: u32 },
    #[error("pole: {0}")]
    Pole(String),
    #[error("internal invariant broken: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Usage(msg.into()))
}
