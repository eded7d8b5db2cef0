use liegen::{permutation_op, so_n_generators, spin_matrices, GeneratorSet};
use matcore::{hermitian_eigen, ComplexMatrix, TensorSpace};
use yangian::{realize_so_n_bilocal, VerificationReport};

use crate::ScenarioError;

/// `h(j) = Σ_{k=1}^{j} 1/k` with `h(0) = 1`, as a reduced fraction.
pub fn harmonic(j: u64) -> (u64, u64) {
    if j == 0 {
        return (1, 1);
    }
    let gcd = |mut a: u64, mut b: u64| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    let (mut num, mut den) = (0u64, 1u64);
    for k in 1..=j {
        num = num * k + den;
        den *= k;
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    (num, den)
}

fn harmonic_f64(j: u64) -> f64 {
    let (n, d) = harmonic(j);
    n as f64 / d as f64
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LipatovSite {
    SpinHalf,
    So6Vector,
}

impl LipatovSite {
    /// Site from a doubled spin; only `two_s = 1` has a spin realization.
    pub fn from_two_s(two_s: usize) -> Result<Self, ScenarioError> {
        match two_s {
            1 => Ok(Self::SpinHalf),
            _ => Err(ScenarioError::UnsupportedSite(format!("two_s = {two_s}"))),
        }
    }

    fn generators(self) -> Result<GeneratorSet, ScenarioError> {
        Ok(match self {
            Self::SpinHalf => spin_matrices(1)?,
            Self::So6Vector => so_n_generators(6)?,
        })
    }

    fn dim(self) -> usize {
        match self {
            Self::SpinHalf => 2,
            Self::So6Vector => 6,
        }
    }
}

/// Projectors onto the eigenspaces of the two-site Casimir
/// `Σ_a (g_a ⊗ 1 + 1 ⊗ g_a)²`, ascending, so index `j` is weight `j`.
pub fn pair_projectors(site: LipatovSite) -> Result<Vec<ComplexMatrix>, ScenarioError> {
    let gens = site.generators()?;
    let space = TensorSpace::uniform(site.dim(), 2)?;
    let mut cas = ComplexMatrix::zeros(space.total_dim());
    for g in gens.site_sums(&space)? {
        cas += g.matmul(&g);
    }
    let eig = hermitian_eigen(&cas, 1e-12)?;
    let mut out: Vec<ComplexMatrix> = Vec::new();
    let mut last = f64::NEG_INFINITY;
    for (k, &v) in eig.values.iter().enumerate() {
        let col = eig.vector(k);
        let p = ComplexMatrix::outer(&col, &col);
        if v - last > 1e-6 {
            out.push(p);
        } else if let Some(top) = out.last_mut() {
            *top += p;
        }
        last = v;
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct LipatovResult {
    pub hamiltonian: ComplexMatrix,
    /// Two-site density `2Σ_j h(j)P^j`.
    pub density: ComplexMatrix,
    pub report: VerificationReport,
}

/// Coefficients `(α, β, γ)` of `αI + βP + γK` closest to `m` in the
/// Frobenius norm, `K` the rank-one trace operator on `d ⊗ d`.
fn ipk_fit(m: &ComplexMatrix, d: usize) -> ([f64; 3], f64) {
    let id = ComplexMatrix::identity(d * d);
    let p = permutation_op(d);
    let mut k = ComplexMatrix::zeros(d * d);
    for a in 0..d {
        for b in 0..d {
            k = k.with_entry(a * d + a, b * d + b, matcore::re(1.0));
        }
    }
    let basis = [id, p, k];
    let gram: Vec<Vec<f64>> = basis
        .iter()
        .map(|x| basis.iter().map(|y| x.hs_inner(y).re).collect())
        .collect();
    let rhs: Vec<f64> = basis.iter().map(|x| x.hs_inner(m).re).collect();
    let det3 = |g: &[Vec<f64>]| {
        g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1])
            - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
            + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0])
    };
    let dg = det3(&gram);
    // Cramer's rule on the 3×3 Gram system
    let coef: [f64; 3] = std::array::from_fn(|c| {
        let mut g = gram.clone();
        for r in 0..3 {
            g[r][c] = rhs[r];
        }
        det3(&g) / dg
    });
    let fit =
        &(&basis[0].scale_re(coef[0]) + &basis[1].scale_re(coef[1])) + &basis[2].scale_re(coef[2]);
    (coef, fit.dist(m))
}

/// `‖X − (1/d) tr_k(X) ⊗ 1_k‖_max`: how much `X` acts on site `k`.
fn site_dependence(x: &ComplexMatrix, space: &TensorSpace, k: usize) -> f64 {
    let d = space.local_dim(k);
    let n = space.total_dim();
    let avg = ComplexMatrix::from_fn(n, |i, j| {
        let (mut di, mut dj) = (space.digits_of(i), space.digits_of(j));
        if di[k] != dj[k] {
            return matcore::re(0.0);
        }
        let mut acc = matcore::re(0.0);
        for s in 0..d {
            di[k] = s;
            dj[k] = s;
            acc += x.get(space.index_of(&di), space.index_of(&dj));
        }
        acc / d as f64
    });
    x.dist(&avg)
}

/// Open chain `H = Σ_α H_{α,α+1}` with the two-site density
/// `2Σ_j h(j)P^j`.
///
/// The report checks Hermiticity and `[H, I_a]` for every level-0
/// generator. For SO(6) vector sites it also records, without asserting,
/// `max_a ‖[H, J_a]‖` for the bilocal level-1 generators and how much those
/// commutators depend on the interior sites.
pub fn lipatov_chain(n_sites: usize, site: LipatovSite) -> Result<LipatovResult, ScenarioError> {
    if n_sites < 2 {
        return Err(ScenarioError::InvalidParameter(
            "need at least 2 sites".into(),
        ));
    }
    let d = site.dim();
    let proj = pair_projectors(site)?;
    let mut density = ComplexMatrix::zeros(d * d);
    for (j, p) in proj.iter().enumerate() {
        density += p.scale_re(2.0 * harmonic_f64(j as u64));
    }
    let space = TensorSpace::uniform(d, n_sites)?;
    let mut h = ComplexMatrix::zeros(space.total_dim());
    for a in 0..n_sites - 1 {
        h += space.embed_pair(&density, a, a + 1)?;
    }

    let mut report = VerificationReport::new("lipatov", 1e-9);
    report.check("hermitian defect", h.hermitian_defect());
    let level0 = site.generators()?.site_sums(&space)?;
    let worst = level0
        .iter()
        .map(|g| h.comm(g).max_abs())
        .fold(0.0, f64::max);
    report.check("[H, I]", worst);
    report.note("weights", proj.len() as f64);

    let (coef, fit_gap) = ipk_fit(&density, d);
    match site {
        LipatovSite::SpinHalf => {
            // only weights 0 and 1 occur and h(0) = h(1), so the density is 2·1
            let collapse = density.dist(&ComplexMatrix::identity(4).scale_re(2.0));
            report.note("density - 2I", collapse);
            report.note(
                "collapses to identity",
                f64::from(u8::from(collapse < 1e-12)),
            );
        }
        LipatovSite::So6Vector => {
            report.note("density I coef", coef[0]);
            report.note("density P coef", coef[1]);
            report.note("density K coef", coef[2]);
            report.note("density I,P,K fit gap", fit_gap);
            if coef[2].abs() > 1e-12 {
                report.note("density P/K", coef[1] / coef[2]);
            }
            // 6^n grows quickly; the level-1 data is only gathered for short chains
            if n_sites <= 3 {
                let real = realize_so_n_bilocal(6, n_sites)?;
                let mut j_worst: f64 = 0.0;
                let mut interior: f64 = 0.0;
                for j in real.level1() {
                    let x = h.comm(j);
                    j_worst = j_worst.max(x.max_abs());
                    for k in 1..n_sites - 1 {
                        interior = interior.max(site_dependence(&x, &space, k));
                    }
                }
                report.note("[H, J]", j_worst);
                if n_sites > 2 {
                    report.note("[H, J] interior support", interior);
                }
            }
        }
    }
    Ok(LipatovResult {
        hamiltonian: h,
        density,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn harmonic_values() {
        assert_eq!(harmonic(0), (1, 1));
        assert_eq!(harmonic(1), (1, 1));
        assert_eq!(harmonic(2), (3, 2));
        assert_eq!(harmonic(4), (25, 12));
    }

    #[test]
    fn so6_weights() {
        let p = pair_projectors(LipatovSite::So6Vector).unwrap();
        let ranks: Vec<f64> = p.iter().map(|m| m.trace().re.round()).collect();
        assert_eq!(ranks, vec![1.0, 15.0, 20.0]);
    }

    #[test]
    fn unsupported_site() {
        assert!(matches!(
            LipatovSite::from_two_s(2),
            Err(ScenarioError::UnsupportedSite(_))
        ));
    }
}
