use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MatError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("site {site} has local dimension {expected}, operator has dimension {found}")]
    SiteDimension {
        site: usize,
        expected: usize,
        found: usize,
    },
    #[error("site {site} out of range for a {n_sites}-site space")]
    SiteOutOfRange { site: usize, n_sites: usize },
    #[error("sites of a pair operator must differ (got {0} twice)")]
    RepeatedSite(usize),
    #[error("{found} entries cannot fill a {dim}x{dim} matrix")]
    BadShape { dim: usize, found: usize },
    #[error("matrix dimension must be at least 1")]
    Empty,
    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },
    #[error("tensor space needs at least one site and positive local dimensions")]
    BadSpace,
    #[error("matrix is not Hermitian: asymmetry {asymmetry:e} exceeds tolerance {tol:e}")]
    NotHermitian { asymmetry: f64, tol: f64 },
    #[error("Jacobi iteration stalled after {sweeps} sweeps with off-diagonal {off:e}")]
    NoConvergence { sweeps: usize, off: f64 },
    #[error("matrix is singular to working precision")]
    Singular,
}
