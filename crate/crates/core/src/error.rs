use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("split ({d1}, {d2}) is inconsistent with dimension {dim}")]
    SplitMismatch { dim: usize, d1: usize, d2: usize },

    #[error("operation requires split {expected:?}, got {found:?}")]
    WrongSplit {
        expected: (usize, usize),
        found: (usize, usize),
    },

    #[error("matrix is not Hermitian (max deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("matrix is not unitary (max deviation {deviation:e})")]
    NotUnitary { deviation: f64 },

    #[error("matrix is not positive semidefinite (min eigenvalue {min_eigenvalue:e})")]
    NotPsd { min_eigenvalue: f64 },

    #[error("trace is {trace}, expected 1")]
    TraceNotOne { trace: f64 },

    #[error("vector is not normalized (norm {norm})")]
    NotNormalized { norm: f64 },

    #[error("operator is not a rank-1 projector (deviation {deviation:e})")]
    NotProjector { deviation: f64 },

    #[error("state is not maximally entangled (Schmidt coefficients {coefficients:?})")]
    NotMaximallyEntangled { coefficients: Vec<f64> },

    #[error("parameter {name} = {value} out of range: {expected}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error("index ({k}, {l}) out of range for dimension {d}")]
    IndexOutOfRange { k: usize, l: usize, d: usize },

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("states coincide; the witness direction is undefined")]
    ZeroDistance,

    #[error("filtered state has zero trace")]
    ZeroFilteredTrace,

    #[error("unknown {kind} '{name}'; valid names: {valid}")]
    UnknownName {
        kind: &'static str,
        name: String,
        valid: String,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency check failed: {0}")]
    Assertion(String),
}

pub type Result<T> = std::result::Result<T, Error>;
