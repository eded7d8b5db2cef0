//! R-matrices in braid form `Ř = P R`, monodromy matrices built from
//! permutation Lax operators, and the checks that tie them together:
//! Yang-Baxter, RTT exchange, quantum-determinant centrality and
//! Hamiltonian densities.

mod hamiltonian;
mod monodromy;
mod qdet;
mod rmatrix;

use thiserror::Error;

pub use hamiltonian::{chain_hamiltonian, hamiltonian_from_r, hamiltonian_from_r_numeric};
pub use monodromy::{
    monodromy, monodromy_with, su2_generators, su3_generators, LaxNormalization, Monodromy,
};
pub use qdet::{qdet_su2, qdet_su3, QuantumDeterminant};
pub use rmatrix::{
    rtt_residual, son5_elementwise, son_r_closed_form, son_r_variant, ybe_r_form_residual,
    ybe_residual, RFamily, RMatrixSpec,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RttError {
    #[error("site {site} has dimension {found}, auxiliary space has {aux}")]
    AuxMismatch {
        aux: usize,
        site: usize,
        found: usize,
    },
    #[error("auxiliary dimension {0} is not supported here")]
    UnsupportedAux(usize),
    #[error("R(0) is singular")]
    Singular,
    #[error("monodromy and R-matrix dimensions differ ({mono} vs {r})")]
    DimMismatch { mono: usize, r: usize },
    #[error(transparent)]
    Mat(#[from] matcore::MatError),
    #[error(transparent)]
    Lie(#[from] liegen::LieError),
    #[error(transparent)]
    Yang(#[from] yangian::YangError),
}
