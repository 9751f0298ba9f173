use thiserror::Error;

/// Errors surfaced by construction, certification and I/O.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not symmetric: max asymmetry {asym:.3e} exceeds {tol:.3e}")]
    NotSymmetric { asym: f64, tol: f64 },

    #[error("non-finite entry encountered in {0}")]
    NonFinite(&'static str),

    #[error("input vectors are not orthonormal: {0}")]
    NotOrthonormal(String),

    #[error("unsupported dimension {n} for {what}")]
    UnsupportedDimension { n: usize, what: &'static str },

    #[error("unknown or invalid space: {0}")]
    InvalidSpace(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("Jacobi identity fails at triple ({i}, {j}, {k}): residual {residual:.3e}")]
    JacobiViolation {
        i: usize,
        j: usize,
        k: usize,
        residual: f64,
    },

    #[error("bracket tensor is not antisymmetric at ({i}, {j}): residual {residual:.3e}")]
    BracketNotAntisymmetric { i: usize, j: usize, residual: f64 },

    #[error("reductivity violated: {0}")]
    NotReductive(String),

    #[error("search basis is rank deficient (rank {rank} of {count} forms)")]
    RankDeficientBasis { rank: usize, count: usize },

    #[error("operator hypothesis fails: {0}")]
    HypothesisFailed(String),

    #[error("JSON schema violation at {path}: {message}")]
    Schema { path: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
