use std::collections::BTreeMap;
use std::f64::consts::PI;

use matcore::{c, re, ComplexMatrix, TensorSpace, C64};

use crate::spins::{cross, spin_on};
use crate::{ScenarioError, TransitionRow, TransitionTable, AMPLITUDE_FLOOR};

type Mono = [u32; 3];

/// A two-spin wavefunction on the unit sphere: four spin components
/// `(↑↑, ↑↓, ↓↑, ↓↓)`, each a polynomial in the direction `(x, y, z)`.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct SphereState {
    pub comps: [BTreeMap<Mono, C64>; 4],
}

fn double_factorial(n: i64) -> f64 {
    let mut acc = 1.0;
    let mut k = n;
    while k > 1 {
        acc *= k as f64;
        k -= 2;
    }
    acc
}

/// `∫ xᵃ yᵇ zᶜ dΩ` over the unit sphere.
fn moment([a, b, cc]: Mono) -> f64 {
    if a % 2 == 1 || b % 2 == 1 || cc % 2 == 1 {
        return 0.0;
    }
    let (a, b, cc) = (a as i64, b as i64, cc as i64);
    4.0 * PI * double_factorial(a - 1) * double_factorial(b - 1) * double_factorial(cc - 1)
        / double_factorial(a + b + cc + 1)
}

impl SphereState {
    fn add_term(&mut self, spin: usize, m: Mono, z: C64) {
        *self.comps[spin].entry(m).or_default() += z;
    }

    /// `⟨self|other⟩ = Σ_s ∫ conj(self_s) other_s dΩ`, exact.
    pub fn inner(&self, other: &SphereState) -> C64 {
        let mut acc = re(0.0);
        for s in 0..4 {
            for (ma, za) in &self.comps[s] {
                for (mb, zb) in &other.comps[s] {
                    let m = [ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]];
                    acc += za.conj() * zb * moment(m);
                }
            }
        }
        acc
    }

    pub fn norm(&self) -> f64 {
        self.inner(self).re.max(0.0).sqrt()
    }

    fn combine(&self, other: &SphereState, s: C64) -> SphereState {
        let mut out = self.clone();
        for sp in 0..4 {
            for (m, z) in &other.comps[sp] {
                out.add_term(sp, *m, z * s);
            }
        }
        out.canonical()
    }

    /// Rewrite `z² = 1 − x² − y²` until no monomial has `z`-degree above
    /// one. Those monomials are independent on the sphere, so functions
    /// that vanish there cancel coefficient by coefficient.
    fn canonical(&self) -> SphereState {
        let mut out = SphereState::default();
        for sp in 0..4 {
            let mut todo: Vec<(Mono, C64)> = self.comps[sp].iter().map(|(m, z)| (*m, *z)).collect();
            while let Some((m, z)) = todo.pop() {
                if m[2] < 2 {
                    out.add_term(sp, m, z);
                    continue;
                }
                let low = [m[0], m[1], m[2] - 2];
                todo.push((low, z));
                todo.push(([m[0] + 2, m[1], m[2] - 2], -z));
                todo.push(([m[0], m[1] + 2, m[2] - 2], -z));
            }
        }
        out
    }

    /// `Σ_m k_m O_m ψ`: each spin operator multiplied by one direction
    /// component.
    fn directional(&self, ops: &[ComplexMatrix; 3]) -> SphereState {
        let mut out = SphereState::default();
        for (axis, op) in ops.iter().enumerate() {
            for col in 0..4 {
                for (m, z) in &self.comps[col] {
                    let mut raised = *m;
                    raised[axis] += 1;
                    for row in 0..4 {
                        let o = op.get(row, col);
                        if o != re(0.0) {
                            out.add_term(row, raised, o * z);
                        }
                    }
                }
            }
        }
        out
    }
}

/// S-wave spin singlet `φ = Y₀₀(↑↓ − ↓↑)/√2`.
pub fn s_wave() -> SphereState {
    let y00 = 1.0 / (4.0 * PI).sqrt();
    let a = y00 / 2f64.sqrt();
    let mut s = SphereState::default();
    s.add_term(1, [0, 0, 0], re(a));
    s.add_term(2, [0, 0, 0], re(-a));
    s
}

/// P-wave spin triplet coupled to total zero,
/// `Φ = (k₋|↑↑⟩ − k_z|↑↓⟩ − k_z|↓↑⟩ − k₊|↓↓⟩)/√(8π)`.
pub fn p_wave() -> SphereState {
    let n = 1.0 / (8.0 * PI).sqrt();
    let mut s = SphereState::default();
    s.add_term(0, [1, 0, 0], re(n));
    s.add_term(0, [0, 1, 0], c(0.0, -n));
    s.add_term(1, [0, 0, 1], re(-n));
    s.add_term(2, [0, 0, 1], re(-n));
    s.add_term(3, [1, 0, 0], re(-n));
    s.add_term(3, [0, 1, 0], c(0.0, -n));
    s
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `Gφ ∝ Φ`, `GΦ = 0`.
    SToP,
    /// `GΦ ∝ φ`, `Gφ = 0`.
    PToS,
    /// Both images vanish.
    Neither,
    Both,
}

#[derive(Clone, Debug)]
pub struct ScResult {
    pub table: TransitionTable,
    /// `⟨Φ|Gφ⟩`.
    pub s_to_p: C64,
    /// `⟨φ|GΦ⟩`.
    pub p_to_s: C64,
    /// Predicted `½(λ₂ − λ₁ + hv/2)` and `½(λ₂ − λ₁ − hv/2)`.
    pub closed: (f64, f64),
    pub direction: Direction,
}

fn row(input: &str, image: &SphereState, basis: &[(&str, &SphereState)]) -> TransitionRow {
    let mut rest = image.canonical();
    let mut output = Vec::new();
    for (name, b) in basis {
        let z = b.inner(image);
        rest = rest.combine(b, -z);
        if z.norm() > AMPLITUDE_FLOOR {
            output.push((name.to_string(), z));
        }
    }
    TransitionRow {
        input: input.to_string(),
        output,
        residual: rest.norm(),
    }
}

/// `G = Σ_m k̂_m (J_m + f I_m)` with `k̂` the direction variable of the
/// wavefunction, `I = S₁ + S₂`, `f = −½(λ₁ + λ₂)` and
/// `J = λ₁S₁ + λ₂S₂ − (i hv/4)(S₁×S₂ − S₂×S₁)`, applied to the S-wave
/// singlet and the P-wave triplet.
pub fn sc_transition(lam1: f64, lam2: f64, hv: f64) -> Result<ScResult, ScenarioError> {
    let space = TensorSpace::uniform(2, 2)?;
    let s1 = spin_on(&space, 0, 1)?;
    let s2 = spin_on(&space, 1, 1)?;
    let x12 = cross(&s1, &s2);
    let x21 = cross(&s2, &s1);
    let f = -0.5 * (lam1 + lam2);
    let g: [ComplexMatrix; 3] = std::array::from_fn(|m| {
        let j = &(&s1[m].scale_re(lam1) + &s2[m].scale_re(lam2))
            + &(&x12[m] - &x21[m]).scale(c(0.0, -hv / 4.0));
        &j + &(&s1[m] + &s2[m]).scale_re(f)
    });
    let phi = s_wave();
    let big = p_wave();
    let g_phi = phi.directional(&g);
    let g_big = big.directional(&g);
    let basis = [("phi00", &phi), ("Phi00", &big)];
    let r1 = row("phi00", &g_phi, &basis);
    let r2 = row("Phi00", &g_big, &basis);
    let s_to_p = big.inner(&g_phi);
    let p_to_s = phi.inner(&g_big);
    let small = |z: C64| z.norm() < 1e-12;
    let direction = match (small(s_to_p), small(p_to_s)) {
        (false, true) => Direction::SToP,
        (true, false) => Direction::PToS,
        (true, true) => Direction::Neither,
        (false, false) => Direction::Both,
    };
    Ok(ScResult {
        table: TransitionTable {
            operator: "k.(J + f I)".into(),
            rows: vec![r1, r2],
        },
        s_to_p,
        p_to_s,
        closed: (
            0.5 * (lam2 - lam1 + hv / 2.0),
            0.5 * (lam2 - lam1 - hv / 2.0),
        ),
        direction,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moments() {
        assert!((moment([0, 0, 0]) - 4.0 * PI).abs() < 1e-14);
        assert!((moment([2, 0, 0]) - 4.0 * PI / 3.0).abs() < 1e-14);
        assert!((moment([2, 2, 0]) - 4.0 * PI / 15.0).abs() < 1e-14);
        assert_eq!(moment([1, 0, 1]), 0.0);
    }

    #[test]
    fn states_are_orthonormal() {
        let (a, b) = (s_wave(), p_wave());
        assert!((a.inner(&a).re - 1.0).abs() < 1e-14);
        assert!((b.inner(&b).re - 1.0).abs() < 1e-14);
        assert!(a.inner(&b).norm() < 1e-15);
    }
}
