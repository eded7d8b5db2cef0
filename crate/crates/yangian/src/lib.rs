//! Yangian realizations on small tensor-product spaces.
//!
//! A realization is a pair of operator families on a multi-site space: the
//! level-0 generators `I_λ` (a Lie algebra, here always site sums) and the
//! level-1 generators `J_λ`. The verifiers check the linearity relation
//! `[I_λ, J_μ] = C_λμν J_ν` and the cubic Serre-type constraint over every
//! ordered index combination.
//!
//! Level-1 normalization: `J` is stored in the normalization in which the
//! cubic constraint carries the `1/24` a-tensor. Coefficients pulled from a
//! monodromy matrix (`T⁽²⁾`) are twice that; see [`simplified`].

mod coproduct;
mod error;
mod hs;
mod realize;
mod report;
mod serre;
pub mod simplified;
mod weights;

use liegen::GeneratorSet;
use matcore::{ComplexMatrix, TensorSpace, C64};

pub use coproduct::{coproduct_extend, su3_coproduct_fit, CoproductFit};
pub use error::YangError;
pub use hs::{haldane_shastry_h2, haldane_shastry_h2_with, hs_z};
pub use realize::{
    bilocal_literal, bilocal_normalization_fit, realize_so_n_bilocal, realize_su2, realize_su3,
    su3_ladder_crosscheck, su3_ladder_form, BILOCAL_PREFACTOR,
};
pub use report::VerificationReport;
pub use serre::{a_tensor, serre_general_residual, serre_sl2_residual, verify_defining};
pub use simplified::verify_simplified;
pub use weights::WScheme;

/// Parameters a realization was built from. For the bilocal so(n)
/// realization `mu` is empty and `coupling` is the bilocal prefactor.
#[derive(Clone, Debug)]
pub struct RealizationParams {
    pub mu: Vec<f64>,
    pub coupling: C64,
    pub w: ComplexMatrix,
}

#[derive(Clone, Debug)]
pub struct YangianRealization {
    space: TensorSpace,
    level0: GeneratorSet,
    level1: Vec<ComplexMatrix>,
    params: RealizationParams,
}

impl YangianRealization {
    /// Assemble a realization from parts. Only shapes are checked here; the
    /// algebraic relations are the job of [`verify_defining`].
    pub fn from_parts(
        space: TensorSpace,
        level0: GeneratorSet,
        level1: Vec<ComplexMatrix>,
        params: RealizationParams,
    ) -> Result<Self, YangError> {
        if level1.len() != level0.len() {
            return Err(YangError::Level1Count {
                level0: level0.len(),
                level1: level1.len(),
            });
        }
        let n = space.total_dim();
        if let Some(bad) = level0
            .generators()
            .iter()
            .chain(level1.iter())
            .find(|m| m.dim() != n)
        {
            return Err(YangError::Mat(matcore::MatError::DimensionMismatch {
                left: n,
                right: bad.dim(),
            }));
        }
        Ok(Self {
            space,
            level0,
            level1,
            params,
        })
    }

    pub fn space(&self) -> &TensorSpace {
        &self.space
    }

    pub fn level0(&self) -> &GeneratorSet {
        &self.level0
    }

    pub fn level1(&self) -> &[ComplexMatrix] {
        &self.level1
    }

    pub fn params(&self) -> &RealizationParams {
        &self.params
    }

    pub fn dim(&self) -> usize {
        self.space.total_dim()
    }

    /// Level-1 generator by level-0 name.
    pub fn j(&self, name: &str) -> Option<&ComplexMatrix> {
        self.level0.index(name).map(|k| &self.level1[k])
    }

    /// `J → J + ξ I`, which preserves every defining relation.
    pub fn shifted(&self, xi: C64) -> Self {
        let level1 = self
            .level1
            .iter()
            .zip(self.level0.generators())
            .map(|(j, i)| j + &i.scale(xi))
            .collect();
        Self {
            level1,
            ..self.clone()
        }
    }

    /// Same level-0 data with the level-1 generators replaced.
    pub fn with_level1(&self, level1: Vec<ComplexMatrix>) -> Result<Self, YangError> {
        Self::from_parts(
            self.space.clone(),
            self.level0.clone(),
            level1,
            self.params.clone(),
        )
    }
}
