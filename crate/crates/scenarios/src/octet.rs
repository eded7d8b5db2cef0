use liegen::{su3_generators, Su3Ladders};
use matcore::vector::{kron_vec, normalized};
use matcore::{c, re, ComplexMatrix, TensorSpace, C64};

use crate::{expand, ScenarioError, TransitionTable};

fn quark(k: usize) -> Vec<C64> {
    matcore::vector::basis(3, k)
}

/// The nine quark ⊗ antiquark states, quark on site 1, flavors
/// `u, d, s = 0, 1, 2`. Phases follow the antiquark convention `−Fᵀ`.
pub fn meson_states() -> Vec<(String, Vec<C64>)> {
    let ket = |a: usize, b: usize| kron_vec(&quark(a), &quark(b));
    let lin = |terms: &[(f64, usize, usize)]| {
        let mut v = vec![re(0.0); 9];
        for &(s, a, b) in terms {
            for (o, x) in v.iter_mut().zip(ket(a, b)) {
                *o += x * s;
            }
        }
        normalized(&v)
    };
    let (u, d, s) = (0, 1, 2);
    vec![
        ("pi+".into(), lin(&[(-1.0, u, d)])),
        ("pi0".into(), lin(&[(1.0, u, u), (-1.0, d, d)])),
        ("pi-".into(), lin(&[(1.0, d, u)])),
        ("K+".into(), lin(&[(1.0, u, s)])),
        ("K0".into(), lin(&[(1.0, d, s)])),
        ("K0bar".into(), lin(&[(-1.0, s, d)])),
        ("K-".into(), lin(&[(1.0, s, u)])),
        (
            "eta0".into(),
            lin(&[(-1.0, u, u), (-1.0, d, d), (2.0, s, s)]),
        ),
        (
            "eta0'".into(),
            lin(&[(1.0, u, u), (1.0, d, d), (1.0, s, s)]),
        ),
    ]
}

#[derive(Clone, Debug)]
pub struct OctetResult {
    /// `J + fI` in ladder form, one table per entry of
    /// [`Su3Ladders::NAMES`], rows for all nine mesons.
    pub tables: Vec<TransitionTable>,
    /// The level-0 ladders alone.
    pub level0: Vec<TransitionTable>,
}

impl OctetResult {
    pub fn table(&self, op: &str) -> Option<&TransitionTable> {
        self.tables.iter().find(|t| t.operator == op)
    }

    pub fn amplitude(&self, op: &str, input: &str, output: &str) -> C64 {
        self.table(op)
            .and_then(|t| t.row(input))
            .map(|r| r.amplitude(output))
            .unwrap_or_default()
    }
}

fn tables(l: &Su3Ladders, states: &[(String, Vec<C64>)]) -> Vec<TransitionTable> {
    Su3Ladders::NAMES
        .iter()
        .zip(l.as_array())
        .map(|(name, op)| TransitionTable {
            operator: name.to_string(),
            rows: states
                .iter()
                .map(|(s, v)| expand(s, &op.apply(v), states))
                .collect(),
        })
        .collect()
}

/// Quark ⊗ antiquark with
/// `J_μ = μ₁F_μ(1) + μ₂F̄_μ(2) − ih Σ_{i≠j} W_ij f_μνλ F_ν(i) F_λ(j)`,
/// `W₁₂ = −W₂₁ = 1`, `F̄ = −Fᵀ`, applied as `J + f·I` in ladder form.
///
/// With `μ₁ − μ₂ = −3h` the singlet is carried into the octet; with
/// `μ₁ − μ₂ = 3h` every operator annihilates it.
pub fn su3_octet_transition(
    mu1: f64,
    mu2: f64,
    h: f64,
    f: f64,
) -> Result<OctetResult, ScenarioError> {
    let base = su3_generators();
    let anti = base.with_matrices(base.generators().iter().map(|g| -g.transpose()).collect());
    let space = TensorSpace::uniform(3, 2)?;
    let sites = [base.embedded(0, &space)?, anti.embedded(1, &space)?];
    let level0: Vec<ComplexMatrix> = (0..8).map(|m| &sites[0][m] + &sites[1][m]).collect();
    let mut j: Vec<ComplexMatrix> = (0..8)
        .map(|m| &sites[0][m].scale_re(mu1) + &sites[1][m].scale_re(mu2))
        .collect();
    let w = [[0.0, 1.0], [-1.0, 0.0]];
    for &(m, a, b, cst) in &base.structure().nonzeros(1e-14) {
        let fm = (cst / c(0.0, 1.0)).re;
        for (i, j_site) in [(0, 1), (1, 0)] {
            j[m] += sites[i][a]
                .matmul(&sites[j_site][b])
                .scale(c(0.0, -h * w[i][j_site] * fm));
        }
    }
    let shifted: Vec<ComplexMatrix> = j
        .iter()
        .zip(&level0)
        .map(|(x, y)| x + &y.scale_re(f))
        .collect();
    let states = meson_states();
    Ok(OctetResult {
        tables: tables(&Su3Ladders::from_components(&shifted), &states),
        level0: tables(&Su3Ladders::from_components(&level0), &states),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use matcore::vector::vdot;

    #[test]
    fn meson_basis_orthonormal() {
        let st = meson_states();
        for (i, (_, a)) in st.iter().enumerate() {
            for (j, (_, b)) in st.iter().enumerate() {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((vdot(a, b) - re(want)).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn singlet_is_level0_invariant() {
        let r = su3_octet_transition(0.3, -0.2, 0.5, 0.1).unwrap();
        for t in &r.level0 {
            assert!(
                t.row("eta0'").unwrap().image_norm() < 1e-14,
                "{}",
                t.operator
            );
        }
        // I+ takes pi0 to +√2 pi+
        let i_plus = &r.level0[0];
        assert!(i_plus.row("pi0").unwrap().amplitude("pi+").re > 0.1);
    }
}
