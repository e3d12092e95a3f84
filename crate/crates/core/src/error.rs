//! Error types shared by every module in the crate.

use thiserror::Error;

/// Errors produced by state constructors, validators, and physics operations.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("matrix is not Hermitian (max asymmetry {max_asymmetry:.3e})")]
    NotHermitian { max_asymmetry: f64 },

    #[error("state is not normalized (trace {trace:.17e})")]
    NotNormalized { trace: f64 },

    #[error("matrix is not a state (min eigenvalue {min_eigenvalue:.3e})")]
    NotPositive { min_eigenvalue: f64 },

    #[error("mode map is not canonical (residuals {commutator:.3e}, {pairing:.3e})")]
    NotCanonical { commutator: f64, pairing: f64 },

    #[error("parameter out of domain: {0}")]
    Domain(String),

    #[error("invalid input: {0}")]
    Validation(String),

    #[error("precondition not met: {0}")]
    Precondition(String),

    #[error("truncated space too large: {requested} rows exceeds limit {limit}")]
    ResourceLimit { requested: usize, limit: usize },

    #[error("truncation tail mass {tail_mass:.3e} exceeds {limit:.3e}; raise the cutoff")]
    Truncation { tail_mass: f64, limit: f64 },

    #[error("ground space is numerically degenerate (gap {gap:.3e})")]
    DegenerateVacuum { gap: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
