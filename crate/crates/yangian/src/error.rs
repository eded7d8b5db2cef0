use liegen::LieError;
use matcore::MatError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum YangError {
    #[error("{mu} site weights for {sites} sites")]
    MuCount { mu: usize, sites: usize },
    #[error("Haldane-Shastry weights need spin 1/2 everywhere (site {site} has 2s = {two_s})")]
    HsSpin { site: usize, two_s: usize },
    #[error("W is not antisymmetric at ({i}, {j})")]
    NotAntisymmetric { i: usize, j: usize },
    #[error("W must be {expected}x{expected}, got {found}x{found}")]
    WShape { expected: usize, found: usize },
    #[error("W fails the triple condition on ({i}, {j}, {k}): got {value}")]
    TripleCondition {
        i: usize,
        j: usize,
        k: usize,
        value: f64,
    },
    #[error("{level1} level-1 generators for {level0} level-0 generators")]
    Level1Count { level0: usize, level1: usize },
    #[error("no simplified relation is known for {0}")]
    UnsupportedAlgebra(String),
    #[error("cannot combine realizations of {left} and {right}")]
    AlgebraMismatch { left: String, right: String },
    #[error("structure tensors differ by {0:e}")]
    StructureMismatch(f64),
    #[error("need at least {need} sites, got {got}")]
    TooFewSites { need: usize, got: usize },
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Mat(#[from] MatError),
}
