use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid root system {family}{rank}: {reason}")]
    InvalidType {
        family: String,
        rank: usize,
        reason: String,
    },

    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("index {index} out of range (have {len})")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("lambda is not dominant: <lambda, coroot of simple root alpha_{simple}> = {pairing} < 0")]
    NotDominant { simple: usize, pairing: String },

    #[error("lambda must be sorted in non-increasing order (position {position})")]
    Unsorted { position: usize },

    #[error("coweight is not positive: <alpha_{simple}, xi> = {value}")]
    NotPositiveCoweight { simple: usize, value: String },

    #[error(
        "Weyl group of type {label} has order {order}, which exceeds the cap {cap}{hint}"
    )]
    GroupTooLarge {
        label: String,
        order: u128,
        cap: u128,
        hint: String,
    },

    #[error("n = {n} exceeds the Cayley graph cap {cap}")]
    CayleyTooLarge { n: usize, cap: usize },

    #[error("decomposition data for {label} failed check: {check}")]
    DecompositionCheck { label: String, check: String },

    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("internal consistency error: {0}")]
    Inconsistent(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown format `{0}`")]
    UnknownFormat(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}
