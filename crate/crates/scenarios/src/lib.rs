//! Small physical models whose spectra, eigenvectors or transition
//! amplitudes have closed forms, each rebuilt by exact diagonalization.
//!
//! Every function here is a pure computation; nothing is cached.

mod happer;
mod jsq;
mod lipatov;
mod nmr;
mod octet;
mod reduction;
mod sc;
mod spins;

use matcore::{hermitian_eigen, ComplexMatrix, MatError, C64};
use thiserror::Error;

pub use happer::{
    extended_breit_rabi, happer, happer_half, happer_hamiltonian, happer_j, happer_state,
    BreitRabiResult, BreitRabiState, HapperFamily, HapperHalf, HapperResult, HAPPER_CROSS,
};
pub use jsq::{
    j2_operator, j2_spectrum, rare_gas, rare_gas_commutator, rare_gas_compatible_u1, J2Result,
};
pub use lipatov::{harmonic, lipatov_chain, pair_projectors, LipatovResult, LipatovSite};
pub use nmr::{
    berry_phase, berry_phase_with, nmr_matrix, nmr_oscillation, nmr_quartic, nmr_spectrum,
    BerryMix, BerryPhase, NmrParams, NmrQuartic, Oscillation,
};
pub use octet::{meson_states, su3_octet_transition, OctetResult};
pub use reduction::{reduce_su3, reduce_two_spin, ReductionReport};
pub use sc::{p_wave, s_wave, sc_transition, Direction, ScResult, SphereState};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScenarioError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("degenerate configuration: {0}")]
    Degenerate(String),
    #[error("unsupported site type: {0}")]
    UnsupportedSite(String),
    #[error(transparent)]
    Mat(#[from] MatError),
    #[error(transparent)]
    Lie(#[from] liegen::LieError),
    #[error(transparent)]
    Yang(#[from] yangian::YangError),
}

/// A closed-form eigenvalue with its expected multiplicity.
#[derive(Clone, Debug, PartialEq)]
pub struct Predicted {
    pub label: String,
    pub value: f64,
    pub multiplicity: usize,
}

impl Predicted {
    pub fn new(label: impl Into<String>, value: f64, multiplicity: usize) -> Self {
        Self {
            label: label.into(),
            value,
            multiplicity,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SpectrumResult {
    pub hamiltonian: ComplexMatrix,
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    pub labels: Option<Vec<String>>,
    pub closed_form: Option<Vec<Predicted>>,
}

impl SpectrumResult {
    /// Diagonalize a Hermitian operator.
    pub fn diagonalize(hamiltonian: ComplexMatrix, tol: f64) -> Result<Self, ScenarioError> {
        let eig = hermitian_eigen(&hamiltonian, tol)?;
        Ok(Self {
            hamiltonian,
            eigenvalues: eig.values,
            labels: None,
            closed_form: None,
        })
    }

    pub fn with_closed_form(mut self, predicted: Vec<Predicted>) -> Self {
        self.closed_form = Some(predicted);
        self
    }

    /// Distance between the prediction and the numerical spectrum.
    ///
    /// If the multiplicities account for the whole spectrum the two sorted
    /// lists are compared entry by entry; otherwise each predicted value is
    /// matched to its nearest eigenvalue. `None` without a prediction.
    pub fn closed_form_gap(&self) -> Option<f64> {
        let pred = self.closed_form.as_ref()?;
        let total: usize = pred.iter().map(|p| p.multiplicity).sum();
        if total == self.eigenvalues.len() {
            let mut all: Vec<f64> = pred
                .iter()
                .flat_map(|p| std::iter::repeat_n(p.value, p.multiplicity))
                .collect();
            all.sort_by(f64::total_cmp);
            return Some(
                all.iter()
                    .zip(&self.eigenvalues)
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0, f64::max),
            );
        }
        Some(
            pred.iter()
                .map(|p| {
                    self.eigenvalues
                        .iter()
                        .map(|e| (e - p.value).abs())
                        .fold(f64::INFINITY, f64::min)
                })
                .fold(0.0, f64::max),
        )
    }

    /// Number of eigenvalues within `window` of `target`.
    pub fn count_near(&self, target: f64, window: f64) -> usize {
        self.eigenvalues
            .iter()
            .filter(|e| (*e - target).abs() < window)
            .count()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TransitionRow {
    pub input: String,
    /// Expansion of the image in the named basis; only entries above a
    /// small floor are kept.
    pub output: Vec<(String, C64)>,
    /// Norm of the part of the image outside the named basis.
    pub residual: f64,
}

impl TransitionRow {
    pub fn amplitude(&self, state: &str) -> C64 {
        self.output
            .iter()
            .find(|(s, _)| s == state)
            .map(|(_, z)| *z)
            .unwrap_or_default()
    }

    /// Norm of the whole image.
    pub fn image_norm(&self) -> f64 {
        let inside: f64 = self.output.iter().map(|(_, z)| z.norm_sqr()).sum();
        (inside + self.residual * self.residual).sqrt()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TransitionTable {
    pub operator: String,
    pub rows: Vec<TransitionRow>,
}

impl TransitionTable {
    pub fn row(&self, input: &str) -> Option<&TransitionRow> {
        self.rows.iter().find(|r| r.input == input)
    }
}

/// Amplitudes below this are dropped from transition rows.
pub(crate) const AMPLITUDE_FLOOR: f64 = 1e-12;

/// Expand `v` in an orthonormal named basis.
pub(crate) fn expand(input: &str, v: &[C64], basis: &[(String, Vec<C64>)]) -> TransitionRow {
    let mut rest = v.to_vec();
    let mut output = Vec::new();
    for (name, b) in basis {
        let z = matcore::vector::vdot(b, v);
        rest = matcore::vector::sub(&rest, &matcore::vector::scale(b, z));
        if z.norm() > AMPLITUDE_FLOOR {
            output.push((name.clone(), z));
        }
    }
    TransitionRow {
        input: input.to_string(),
        output,
        residual: matcore::vector::norm(&rest),
    }
}
