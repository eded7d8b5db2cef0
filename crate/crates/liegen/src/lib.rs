//! Catalog of concrete Lie-algebra generator sets.
//!
//! Conventions: spin matrices have `S3` diagonal and descending; su(3)
//! uses `F = λ/2`; so(n) uses `(L_ab)_cd = −i(δ_ac δ_bd − δ_ad δ_bc)`.

mod catalog;
mod ops;
mod structure;

use std::fmt;

use matcore::{ComplexMatrix, MatError, TensorSpace};
use thiserror::Error;

pub use catalog::{
    cartan_weyl_entry, gell_mann, quark_ladders, so5_cartan_weyl, so5_t1_assembly, so_n_generators,
    spin_matrices, su3_generators, QuarkLadders, Su3Ladders, SO5_LABELS,
};
pub use ops::{a_n_op, jimbo_labels, permutation_op};
pub use structure::{levi_civita, structure_constants, StructureTensor};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LieError {
    #[error("generator {index} has a degenerate trace form")]
    DegenerateTraceForm { index: usize },
    #[error("generators {a} and {b} are not trace-orthogonal (overlap {overlap:e})")]
    NotOrthogonal { a: usize, b: usize, overlap: f64 },
    #[error("so(n) is only cataloged for n = 5, 6 (got {0})")]
    UnsupportedN(usize),
    #[error("spin needs two_s >= 1")]
    InvalidSpin,
    #[error("generator set is empty")]
    Empty,
    #[error("{names} names for {gens} generators")]
    NameCount { names: usize, gens: usize },
    #[error(transparent)]
    Mat(#[from] MatError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraLabel {
    /// su(2) in the spin-`two_s/2` representation.
    Su2 {
        two_s: usize,
    },
    Su3,
    So(usize),
}

impl AlgebraLabel {
    /// The algebra regardless of representation.
    pub fn family(&self) -> &'static str {
        match self {
            AlgebraLabel::Su2 { .. } => "su2",
            AlgebraLabel::Su3 => "su3",
            AlgebraLabel::So(5) => "so5",
            AlgebraLabel::So(6) => "so6",
            AlgebraLabel::So(_) => "so",
        }
    }

    /// Same algebra, possibly different representation.
    pub fn same_algebra(&self, other: &AlgebraLabel) -> bool {
        self.family() == other.family()
    }
}

impl fmt::Display for AlgebraLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraLabel::Su2 { two_s } if two_s % 2 == 0 => write!(f, "su2_spin({})", two_s / 2),
            AlgebraLabel::Su2 { two_s } => write!(f, "su2_spin({two_s}/2)"),
            AlgebraLabel::Su3 => write!(f, "su3"),
            AlgebraLabel::So(n) => write!(f, "so({n})"),
        }
    }
}

/// A labeled family of matrices closing under commutation, with
/// `[g_l, g_m] = Σ_k c[l][m][k] g_k` stored in [`StructureTensor`].
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    label: AlgebraLabel,
    generators: Vec<ComplexMatrix>,
    names: Vec<String>,
    structure: StructureTensor,
}

impl GeneratorSet {
    pub fn new(
        label: AlgebraLabel,
        generators: Vec<ComplexMatrix>,
        names: Vec<String>,
    ) -> Result<Self, LieError> {
        if names.len() != generators.len() {
            return Err(LieError::NameCount {
                names: names.len(),
                gens: generators.len(),
            });
        }
        let structure = structure_constants(&generators)?;
        Ok(Self {
            label,
            generators,
            names,
            structure,
        })
    }

    /// Same label, names and structure tensor on new matrices, e.g. the
    /// multi-site sums `Σ_i g(i)`. The caller vouches for the algebra.
    pub fn with_matrices(&self, generators: Vec<ComplexMatrix>) -> Self {
        assert_eq!(generators.len(), self.generators.len());
        Self {
            label: self.label,
            generators,
            names: self.names.clone(),
            structure: self.structure.clone(),
        }
    }

    pub fn label(&self) -> AlgebraLabel {
        self.label
    }

    pub fn generators(&self) -> &[ComplexMatrix] {
        &self.generators
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn structure(&self) -> &StructureTensor {
        &self.structure
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Matrix dimension of the representation.
    pub fn dim(&self) -> usize {
        self.generators[0].dim()
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn get(&self, name: &str) -> Option<&ComplexMatrix> {
        self.index(name).map(|k| &self.generators[k])
    }

    /// `max_{l,m} ‖[g_l, g_m] − Σ_k c_lmk g_k‖_max`.
    pub fn closure_residual(&self) -> f64 {
        self.structure.closure_residual(&self.generators)
    }

    /// `Σ_k g_k g_k`.
    pub fn casimir(&self) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(self.dim());
        for g in &self.generators {
            out += g.matmul(g);
        }
        out
    }

    /// Each generator embedded at `site`.
    pub fn embedded(
        &self,
        site: usize,
        space: &TensorSpace,
    ) -> Result<Vec<ComplexMatrix>, MatError> {
        self.generators
            .iter()
            .map(|g| space.embed(g, site))
            .collect()
    }

    /// `Σ_i g(i)` over all sites of a uniform space.
    pub fn site_sums(&self, space: &TensorSpace) -> Result<Vec<ComplexMatrix>, MatError> {
        let mut out = vec![ComplexMatrix::zeros(space.total_dim()); self.len()];
        for site in 0..space.n_sites() {
            for (o, g) in out.iter_mut().zip(self.embedded(site, space)?) {
                *o += g;
            }
        }
        Ok(out)
    }
}
