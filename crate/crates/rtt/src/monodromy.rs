use liegen::{gell_mann, permutation_op, AlgebraLabel, GeneratorSet};
use matcore::{c, re, ComplexMatrix, TensorSpace, C64};
use yangian::simplified::MONODROMY_SCALE;
use yangian::{RealizationParams, WScheme, YangianRealization};

use crate::RttError;

/// Local Lax operator `L_i(u) = 1 + u⁻¹ Q_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum LaxNormalization {
    /// `Q_i = P_{aux,i} − 1/d`; the first-order coefficient is traceless
    /// over the auxiliary space.
    #[default]
    Traceless,
    /// `Q_i = P_{aux,i}`.
    Plain,
}

/// `T(u) = L_1(u) ⋯ L_N(u) = Σ_k u⁻ᵏ T⁽ᵏ⁾` on aux ⊗ quantum, auxiliary
/// factor outermost. The coefficients are stored exactly.
#[derive(Clone, Debug)]
pub struct Monodromy {
    aux_dim: usize,
    sites: TensorSpace,
    lax: LaxNormalization,
    coeffs: Vec<ComplexMatrix>,
}

pub fn monodromy(d: usize, sites: &TensorSpace) -> Result<Monodromy, RttError> {
    monodromy_with(d, sites, LaxNormalization::default())
}

pub fn monodromy_with(
    d: usize,
    sites: &TensorSpace,
    lax: LaxNormalization,
) -> Result<Monodromy, RttError> {
    if d != 2 && d != 3 {
        return Err(RttError::UnsupportedAux(d));
    }
    for (site, &found) in sites.local_dims().iter().enumerate() {
        if found != d {
            return Err(RttError::AuxMismatch {
                aux: d,
                site,
                found,
            });
        }
    }
    let full = TensorSpace::uniform(d, 1)?.join(sites);
    let dim = full.total_dim();
    let p = permutation_op(d);
    let shift = match lax {
        LaxNormalization::Traceless => 1.0 / d as f64,
        LaxNormalization::Plain => 0.0,
    };
    let id = ComplexMatrix::identity(dim);
    let mut coeffs = vec![id.clone()];
    for i in 0..sites.n_sites() {
        let q = &full.embed_pair(&p, 0, i + 1)? - &id.scale_re(shift);
        let mut next = coeffs.clone();
        next.push(ComplexMatrix::zeros(dim));
        for (k, ck) in coeffs.iter().enumerate() {
            next[k + 1] += ck.matmul(&q);
        }
        coeffs = next;
    }
    Ok(Monodromy {
        aux_dim: d,
        sites: sites.clone(),
        lax,
        coeffs,
    })
}

impl Monodromy {
    pub fn aux_dim(&self) -> usize {
        self.aux_dim
    }

    pub fn sites(&self) -> &TensorSpace {
        &self.sites
    }

    pub fn lax(&self) -> LaxNormalization {
        self.lax
    }

    pub fn quantum_dim(&self) -> usize {
        self.sites.total_dim()
    }

    /// Polynomial degree in `u⁻¹`: the number of sites.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `T⁽ᵏ⁾`, zero beyond the degree.
    pub fn coefficient(&self, k: usize) -> ComplexMatrix {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| ComplexMatrix::zeros(self.coeffs[0].dim()))
    }

    pub fn evaluate(&self, u: C64) -> ComplexMatrix {
        let x = u.inv();
        let mut out = ComplexMatrix::zeros(self.coeffs[0].dim());
        let mut pw = re(1.0);
        for ck in &self.coeffs {
            out += ck.scale(pw);
            pw *= x;
        }
        out
    }

    /// Quantum-space block `(a, b)` of an aux ⊗ quantum operator.
    pub fn block(&self, m: &ComplexMatrix, a: usize, b: usize) -> ComplexMatrix {
        let q = self.quantum_dim();
        ComplexMatrix::from_fn(q, |i, j| m.get(a * q + i, b * q + j))
    }

    /// `T⁽ᵏ⁾_ab` as a quantum operator.
    pub fn coefficient_block(&self, k: usize, a: usize, b: usize) -> ComplexMatrix {
        self.block(&self.coefficient(k), a, b)
    }

    /// `(T(u) ⊗_aux 1, 1 ⊗_aux T(u))` on aux ⊗ aux ⊗ quantum.
    pub(crate) fn lift(&self, u: C64) -> (ComplexMatrix, ComplexMatrix) {
        let t = self.evaluate(u);
        let (d, q) = (self.aux_dim, self.quantum_dim());
        let n = d * d * q;
        let split = |idx: usize| (idx / (d * q), (idx / q) % d, idx % q);
        let t1 = ComplexMatrix::from_fn(n, |r, col| {
            let (a1, a2, i) = split(r);
            let (b1, b2, j) = split(col);
            if a2 == b2 {
                t.get(a1 * q + i, b1 * q + j)
            } else {
                re(0.0)
            }
        });
        let t2 = ComplexMatrix::from_fn(n, |r, col| {
            let (a1, a2, i) = split(r);
            let (b1, b2, j) = split(col);
            if a1 == b1 {
                t.get(a2 * q + i, b2 * q + j)
            } else {
                re(0.0)
            }
        });
        (t1, t2)
    }

    /// Second-order coefficient with the square of the first subtracted,
    /// `T⁽²⁾ − ½ (T⁽¹⁾)²`, the combination that transforms as level 1.
    pub fn level1_coefficient(&self) -> ComplexMatrix {
        let t1 = self.coefficient(1);
        &self.coefficient(2) - &t1.matmul(&t1).scale_re(0.5)
    }
}

fn su2_components(mono: &Monodromy, m: &ComplexMatrix) -> Vec<ComplexMatrix> {
    let p = mono.block(m, 0, 1);
    let n = mono.block(m, 1, 0);
    let z = (&mono.block(m, 0, 0) - &mono.block(m, 1, 1)).scale_re(0.5);
    vec![(&p + &n).scale_re(0.5), (&p - &n).scale(c(0.0, -0.5)), z]
}

fn su3_components(mono: &Monodromy, m: &ComplexMatrix) -> Vec<ComplexMatrix> {
    let lam = gell_mann();
    let q = mono.quantum_dim();
    lam.generators()
        .iter()
        .map(|l| {
            let mut out = ComplexMatrix::zeros(q);
            for a in 0..3 {
                for b in 0..3 {
                    let z = l.get(b, a) * 0.5;
                    if z != re(0.0) {
                        out += mono.block(m, a, b).scale(z);
                    }
                }
            }
            out
        })
        .collect()
}

fn extracted(
    mono: &Monodromy,
    label: AlgebraLabel,
    names: Vec<String>,
    comps: fn(&Monodromy, &ComplexMatrix) -> Vec<ComplexMatrix>,
) -> Result<YangianRealization, RttError> {
    let i = comps(mono, &mono.coefficient(1));
    let j = comps(mono, &mono.level1_coefficient())
        .into_iter()
        .map(|m| m.scale_re(1.0 / MONODROMY_SCALE))
        .collect();
    let n = mono.sites.n_sites();
    let level0 = GeneratorSet::new(label, i, names)?;
    Ok(YangianRealization::from_parts(
        mono.sites.clone(),
        level0,
        j,
        RealizationParams {
            mu: vec![0.0; n],
            coupling: re(1.0),
            w: WScheme::su2_default().matrix(n)?,
        },
    )?)
}

/// su(2) generators read off a `d = 2` monodromy:
/// `I₊ = T⁽¹⁾₀₁`, `I₋ = T⁽¹⁾₁₀`, `I₃ = (T⁽¹⁾₀₀ − T⁽¹⁾₁₁)/2`, and the same
/// blocks of [`Monodromy::level1_coefficient`] for `J`, divided by
/// [`MONODROMY_SCALE`].
///
/// Block `(a, b)` of `P_{aux,i}` is `E_ba` on site `i`, so `I₊` lowers the
/// site spins: the extracted generators close with `C = −iε`.
pub fn su2_generators(mono: &Monodromy) -> Result<YangianRealization, RttError> {
    if mono.aux_dim != 2 {
        return Err(RttError::UnsupportedAux(mono.aux_dim));
    }
    extracted(
        mono,
        AlgebraLabel::Su2 { two_s: 1 },
        ["I1", "I2", "I3"].map(String::from).to_vec(),
        su2_components,
    )
}

/// su(3) components `X_μ = Σ_ab (λ_μ)_ba T_ab / 2` of a `d = 3` monodromy.
pub fn su3_generators(mono: &Monodromy) -> Result<YangianRealization, RttError> {
    if mono.aux_dim != 3 {
        return Err(RttError::UnsupportedAux(mono.aux_dim));
    }
    extracted(
        mono,
        AlgebraLabel::Su3,
        (1..=8).map(|k| format!("I{k}")).collect(),
        su3_components,
    )
}
