use thiserror::Error;

/// Errors produced by the modelling, simulation and estimation layers.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter is outside its documented domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An operation was asked to run on a geometry it is not defined for.
    #[error("unsupported geometry: {0}")]
    UnsupportedGeometry(String),

    /// Simulation input would produce degenerate (all-zero) data.
    #[error("degenerate scenario: {0}")]
    DegenerateScenario(String),

    /// A matrix failed a structural invariant (Hermitian, PSD, ...).
    #[error("matrix invariant violated: {0}")]
    MatrixInvariant(String),

    /// Requested subspace split is impossible (no noise subspace left).
    #[error("source count {sources} exceeds the degrees of freedom: must be < {dof}")]
    TooManySources { sources: usize, dof: usize },

    /// Peak search found fewer maxima than requested.
    #[error("peak search found {found} local maxima, {requested} requested{detail}")]
    NotEnoughPeaks {
        found: usize,
        requested: usize,
        detail: String,
    },

    /// Singular or near-singular matrix where an inverse is required.
    #[error("singular matrix: {0}")]
    Singular(String),
}

pub type Result<T> = std::result::Result<T, Error>;
