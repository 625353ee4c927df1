use thiserror::Error;

use crate::blade::Signature;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("generator index out of range for {sig}: mask {mask:#b}")]
    IndexOutOfRange { sig: Signature, mask: u64 },

    #[error("algebra mismatch: {left} vs {right}")]
    AlgebraMismatch { left: String, right: String },

    #[error("Cl({p},{q}) has {n} generators; at most {max} are supported")]
    TooManyGenerators { p: u32, q: u32, n: u32, max: u32 },

    #[error("no commuting set of {wanted} square-one blades in {sig} (found {found})")]
    IdempotentSearchFailed {
        sig: Signature,
        wanted: usize,
        found: usize,
    },

    #[error("division ring of {sig} has unexpected real dimension {dim}")]
    UnexpectedRingDimension { sig: Signature, dim: usize },

    #[error("element is not even")]
    NotEven,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("certificate failed: {0}")]
    CertificateFailed(String),

    #[error("unsupported format: {0}")]
    UnsupportedFormat(String),
}
