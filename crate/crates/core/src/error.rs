use thiserror::Error;

use crate::report::PropertyReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input text or table (out-of-range cell, ragged rows, bad token).
    #[error("format error: {0}")]
    Format(String),

    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("not a quandle: {0}")]
    NotAQuandle(PropertyReport),

    #[error("not a biquandle: {0}")]
    NotABiquandle(PropertyReport),

    #[error("not a biquandle structure: {0}")]
    InvalidStructure(PropertyReport),

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("group is not abelian")]
    NotAbelian,

    #[error("map is not a group automorphism")]
    NotAnAutomorphism,

    #[error("target must be medial")]
    NonMedialTarget,

    #[error("partition is not a congruence: {0}")]
    NotACongruence(PropertyReport),

    #[error("map is not a homomorphism")]
    NotAHomomorphism,

    #[error("gauss code error at token {index}: {message}")]
    GaussCode { index: usize, message: String },

    #[error("unknown fixture `{name}`; available: {available}")]
    UnknownFixture { name: String, available: String },

    /// A theorem-backed assertion failed. Never expected on valid input.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn format(msg: impl Into<String>) -> Self {
        Error::Format(msg.into())
    }
}
