use thiserror::Error;

/// Errors from model construction, eigensolvers, markers and sweeps.
#[derive(Debug, Error)]
pub enum Error {
    /// A physical or numerical input violates its documented preconditions.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An argument lies outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Iterative eigensolve exceeded its iteration cap.
    #[error("eigensolver did not converge (best residual {best_residual:e})")]
    NonConvergence { best_residual: f64 },

    /// The two lowest eigenvalues are too close to separate the ground
    /// eigenvector reliably.
    #[error("near-degenerate ground pair (relative gap {relative_gap:e})")]
    DegenerateGroundPair { relative_gap: f64 },

    /// Dense-matrix cost guard tripped.
    #[error("dense solver dimension {dim} exceeds guard {max}")]
    DimensionGuard { dim: usize, max: usize },

    /// A grid-based operation requires uniform spacing.
    #[error("lambda grid is not uniformly spaced")]
    NonUniformGrid,

    /// A sweep point failed; carries the offending control-parameter value.
    #[error("sweep point lambda={lambda} failed: {source}")]
    AtSweepPoint {
        lambda: f64,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
