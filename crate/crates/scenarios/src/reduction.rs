use liegen::{spin_matrices, su3_generators, StructureTensor};
use matcore::{c, re, ComplexMatrix, TensorSpace, C64};

use crate::spins::{cross, spin_on};
use crate::ScenarioError;

/// Outcome of conjugating a two-site level-1 operator by the reducing
/// transform.
#[derive(Clone, Debug)]
pub struct ReductionReport {
    /// Conjugated components `Y = A⁻¹ J A`, normalized.
    pub y: Vec<ComplexMatrix>,
    pub blocks: Vec<Vec<usize>>,
    /// Largest entry of any `Y` outside the diagonal blocks.
    pub leakage: f64,
    pub y_squared: ComplexMatrix,
    /// `block_components[b][k]` is component `k` restricted to block `b`.
    pub block_components: Vec<Vec<ComplexMatrix>>,
    pub rho: C64,
    /// Distance between the blocks and the predicted rescaled generators.
    pub closed_form_gap: f64,
    /// Commutator residual of the blocks against the algebra's structure.
    pub closure_residual: f64,
    /// How far the parameters are from the reducing condition.
    pub condition_gap: f64,
}

impl ReductionReport {
    /// `‖Σ Y² − s·1‖_max`.
    pub fn y_squared_deviation(&self, s: f64) -> f64 {
        let n = self.y_squared.dim();
        self.y_squared.dist(&ComplexMatrix::identity(n).scale_re(s))
    }
}

fn leakage(y: &[ComplexMatrix], blocks: &[Vec<usize>]) -> f64 {
    let n = y[0].dim();
    let mut owner = vec![0; n];
    for (b, idx) in blocks.iter().enumerate() {
        for &i in idx {
            owner[i] = b;
        }
    }
    let mut worst: f64 = 0.0;
    for m in y {
        for i in 0..n {
            for j in 0..n {
                if owner[i] != owner[j] {
                    worst = worst.max(m.get(i, j).norm());
                }
            }
        }
    }
    worst
}

fn finish(
    y: Vec<ComplexMatrix>,
    blocks: Vec<Vec<usize>>,
    predicted: Vec<Vec<ComplexMatrix>>,
    structure: &StructureTensor,
    rho: C64,
    condition_gap: f64,
) -> ReductionReport {
    let n = y[0].dim();
    let mut y_squared = ComplexMatrix::zeros(n);
    for m in &y {
        y_squared += m.matmul(m);
    }
    let block_components: Vec<Vec<ComplexMatrix>> = blocks
        .iter()
        .map(|b| y.iter().map(|m| m.principal(b)).collect())
        .collect();
    let mut gap: f64 = 0.0;
    let mut closure: f64 = 0.0;
    for (got, want) in block_components.iter().zip(&predicted) {
        for (g, w) in got.iter().zip(want) {
            gap = gap.max(g.dist(w));
        }
        closure = closure.max(structure.closure_residual(got));
    }
    ReductionReport {
        leakage: leakage(&y, &blocks),
        y,
        blocks,
        y_squared,
        block_components,
        rho,
        closed_form_gap: gap,
        closure_residual: closure,
        condition_gap,
    }
}

/// `D X D⁻¹` for diagonal `D`.
fn similar(x: &ComplexMatrix, d: &[C64]) -> ComplexMatrix {
    ComplexMatrix::from_fn(x.dim(), |i, j| x.get(i, j) * d[i] / d[j])
}

/// Spin-½ ⊗ spin-½ with `J′ = (μS₁ + νS₂ + 2λ S₁×S₂)/(μ+ν)`, conjugated by
/// the transform that mixes `|↑↓⟩` and `|↓↑⟩` with weights `ν` and `iλ`.
///
/// When `μν = λ²` the three components split into two 2×2 blocks on
/// `{0,1}` and `{2,3}`; each block is a spin-½ triple with its off-diagonal
/// entries rescaled by `ρ^{±1}`, `ρ = ν + iλ`.
pub fn reduce_two_spin(mu: f64, nu: f64, lam: f64) -> Result<ReductionReport, ScenarioError> {
    if (mu + nu).abs() < 1e-14 {
        return Err(ScenarioError::InvalidParameter(
            "mu + nu must be nonzero".into(),
        ));
    }
    if nu * nu + lam * lam < 1e-28 {
        return Err(ScenarioError::Degenerate(
            "transform is singular for nu = lam = 0".into(),
        ));
    }
    let space = TensorSpace::uniform(2, 2)?;
    let s1 = spin_on(&space, 0, 1)?;
    let s2 = spin_on(&space, 1, 1)?;
    let x = cross(&s1, &s2);
    let j: Vec<ComplexMatrix> = (0..3)
        .map(|k| {
            (&(&s1[k].scale_re(mu) + &s2[k].scale_re(nu)) + &x[k].scale_re(2.0 * lam))
                .scale_re(1.0 / (mu + nu))
        })
        .collect();
    let a = ComplexMatrix::identity(4)
        .with_entry(1, 1, re(nu))
        .with_entry(2, 2, re(nu))
        .with_entry(1, 2, c(0.0, lam))
        .with_entry(2, 1, c(0.0, lam));
    let ainv = a.inverse()?;
    let y: Vec<ComplexMatrix> = j.iter().map(|m| ainv.matmul(m).matmul(&a)).collect();

    let rho = c(nu, lam);
    let base = spin_matrices(1)?;
    let f = base.generators();
    // the second block carries the inverse scaling
    let predicted = vec![
        f.iter().map(|m| similar(m, &[rho, re(1.0)])).collect(),
        f.iter().map(|m| similar(m, &[re(1.0), rho])).collect(),
    ];
    Ok(finish(
        y,
        vec![vec![0, 1], vec![2, 3]],
        predicted,
        base.structure(),
        rho,
        (mu * nu - lam * lam).abs(),
    ))
}

/// Fundamental ⊗ fundamental with
/// `J_μ = u F_μ(1) + v F_μ(2) + 2λ f_μab F_a(1) F_b(2)`, conjugated by the
/// 9×9 transform mixing the pairs `(1,3)`, `(2,6)`, `(5,7)` with weights
/// `v` and `iλ`, then divided by `u + v`.
///
/// When `uv = λ²` the result splits into three 3×3 blocks, each a diagonal
/// similarity of the fundamental generators with ladder scales drawn from
/// `{ρ, 1, ρ⁻¹}`, `ρ = v + iλ`.
pub fn reduce_su3(u: f64, v: f64, lam: f64) -> Result<ReductionReport, ScenarioError> {
    if (u + v).abs() < 1e-14 {
        return Err(ScenarioError::InvalidParameter(
            "u + v must be nonzero".into(),
        ));
    }
    if v * v + lam * lam < 1e-28 {
        return Err(ScenarioError::Degenerate(
            "transform is singular for v = lam = 0".into(),
        ));
    }
    let base = su3_generators();
    let space = TensorSpace::uniform(3, 2)?;
    let f1 = base.embedded(0, &space)?;
    let f2 = base.embedded(1, &space)?;
    let st = base.structure();
    let nz = st.nonzeros(1e-14);
    let mut j: Vec<ComplexMatrix> = (0..8)
        .map(|m| &f1[m].scale_re(u) + &f2[m].scale_re(v))
        .collect();
    // C_mab = i f_mab
    for &(m, a, b, cst) in &nz {
        let fm = (cst / c(0.0, 1.0)).re;
        j[m] += f1[a].matmul(&f2[b]).scale_re(2.0 * lam * fm);
    }
    let mut a = ComplexMatrix::identity(9);
    for (p, q) in [(1, 3), (2, 6), (5, 7)] {
        a = a
            .with_entry(p, p, re(v))
            .with_entry(q, q, re(v))
            .with_entry(p, q, c(0.0, lam))
            .with_entry(q, p, c(0.0, lam));
    }
    let ainv = a.inverse()?;
    let y: Vec<ComplexMatrix> = j
        .iter()
        .map(|m| ainv.matmul(m).matmul(&a).scale_re(1.0 / (u + v)))
        .collect();

    let rho = c(v, lam);
    let one = re(1.0);
    // D = diag(s_I s_U, s_U, 1) reproduces ladder scales (s_I, s_U, s_V)
    let scales = [(rho, one), (one / rho, rho), (one, one / rho)];
    let predicted = scales
        .iter()
        .map(|&(si, su)| {
            let d = [si * su, su, one];
            base.generators().iter().map(|m| similar(m, &d)).collect()
        })
        .collect();
    Ok(finish(
        y,
        vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]],
        predicted,
        st,
        rho,
        (u * v - lam * lam).abs(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_spin_blocks_match_prediction() {
        let r = reduce_two_spin(1.0, 4.0, 2.0).unwrap();
        assert!(r.leakage < 1e-12);
        assert!(r.closed_form_gap < 1e-12, "{}", r.closed_form_gap);
        assert!(r.y_squared_deviation(0.75) < 1e-12);
    }

    #[test]
    fn su3_blocks_are_rescaled_fundamentals() {
        let r = reduce_su3(1.0, 4.0, 2.0).unwrap();
        assert!(r.leakage < 1e-12);
        assert!(r.closed_form_gap < 1e-12, "{}", r.closed_form_gap);
        assert!(r.closure_residual < 1e-12);
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(
            reduce_two_spin(1.0, -1.0, 1.0),
            Err(ScenarioError::InvalidParameter(_))
        ));
        assert!(matches!(
            reduce_su3(2.0, -2.0, 1.0),
            Err(ScenarioError::InvalidParameter(_))
        ));
    }
}
