use matcore::vector::{kron_vec, norm, normalized, vdot};
use matcore::{hermitian_eigen, re, ComplexMatrix, TensorSpace, C64};

use crate::spins::{dot, ladders, spin_on};
use crate::{Predicted, ScenarioError, SpectrumResult, TransitionRow, TransitionTable};

/// Coefficient of the cross term `±(S±K_z − S_zK±)` in [`happer_j`] that
/// makes the family transitions exact.
pub const HAPPER_CROSS: f64 = -0.5;

/// `H = K·S + x(K + ½)S_z` on `(2K+1) ⊗ (2S+1)`, orbital factor first.
pub fn happer_hamiltonian(k: usize, x: f64, two_s: usize) -> Result<ComplexMatrix, ScenarioError> {
    if k < 1 {
        return Err(ScenarioError::InvalidParameter(
            "K must be at least 1".into(),
        ));
    }
    let space = TensorSpace::new(vec![2 * k + 1, two_s + 1])?;
    let kk = spin_on(&space, 0, 2 * k)?;
    let s = spin_on(&space, 1, two_s)?;
    Ok(&dot(&kk, &s) + &s[2].scale_re(x * (k as f64 + 0.5)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HapperFamily {
    /// Degenerate at `x = +1`.
    Alpha,
    /// Degenerate at `x = −1`.
    Beta,
}

fn ket(k: usize, km: i64, sm: i64) -> Option<Vec<C64>> {
    let ki = k as i64;
    if km.abs() > ki || sm.abs() > 1 {
        return None;
    }
    let orb = matcore::vector::basis(2 * k + 1, (ki - km) as usize);
    let spin = matcore::vector::basis(3, (1 - sm) as usize);
    Some(kron_vec(&orb, &spin))
}

/// Normalized member of the degenerate family with `G_z = m`, built from
/// `|K_z = m−1, S_z = 1⟩`, `|m, 0⟩` and `|m+1, −1⟩`. `None` when every
/// coefficient vanishes (the edge state `α_{−K}` or `β_K`).
pub fn happer_state(k: usize, m: i64, family: HapperFamily) -> Option<Vec<C64>> {
    let kf = k as f64;
    let mf = m as f64;
    let w = match family {
        HapperFamily::Alpha => [
            -((kf - mf + 1.0) * (kf + mf + 1.0) / 2.0).max(0.0).sqrt(),
            ((kf + mf) * (kf + mf + 1.0)).max(0.0).sqrt(),
            ((kf - mf) * (kf + mf) / 2.0).max(0.0).sqrt(),
        ],
        HapperFamily::Beta => [
            ((kf - mf) * (kf + mf) / 2.0).max(0.0).sqrt(),
            ((kf - mf) * (kf - mf + 1.0)).max(0.0).sqrt(),
            -((kf - mf + 1.0) * (kf + mf + 1.0) / 2.0).max(0.0).sqrt(),
        ],
    };
    let dim = 3 * (2 * k + 1);
    let mut v = vec![re(0.0); dim];
    for (coef, (km, sm)) in w.iter().zip([(m - 1, 1), (m, 0), (m + 1, -1)]) {
        if let Some(b) = ket(k, km, sm) {
            for (o, z) in v.iter_mut().zip(b) {
                *o += z * *coef;
            }
        }
    }
    (norm(&v) > 1e-12).then(|| normalized(&v))
}

/// `J± = aS± + bK∓ ± cross·(S±K_z − S_zK±)` on `(2K+1) ⊗ 3`.
pub fn happer_j(
    k: usize,
    a: f64,
    b: f64,
    cross: f64,
    plus: bool,
) -> Result<ComplexMatrix, ScenarioError> {
    let space = TensorSpace::new(vec![2 * k + 1, 3])?;
    let kk = spin_on(&space, 0, 2 * k)?;
    let s = spin_on(&space, 1, 2)?;
    let (sp, sm) = ladders(&s);
    let (kp, km) = ladders(&kk);
    let (s_pm, k_pm, k_mp, sign) = if plus {
        (sp, kp, km, 1.0)
    } else {
        (sm, km, kp, -1.0)
    };
    let tail = &s_pm.matmul(&kk[2]) - &s[2].matmul(&k_pm);
    Ok(&(&s_pm.scale_re(a) + &k_mp.scale_re(b)) + &tail.scale_re(sign * cross))
}

#[derive(Clone, Debug)]
pub struct HapperResult {
    pub spectrum: SpectrumResult,
    /// Dimension of the `E = −½` eigenspace.
    pub degenerate_dim: usize,
    /// Per family member `(m, ‖Hv + ½v‖, 1 − ‖P v‖²)` for the family that
    /// belongs to this `x` (empty unless `x = ±1`).
    pub family: Vec<(i64, f64, f64)>,
    /// Transition tables at the stated `a` with the exact cross term.
    pub transitions: Vec<TransitionTable>,
    /// Same maps built with cross coefficient `1`, largest leakage only.
    pub literal_leakage: f64,
    /// Largest `‖(1 − P_target) J v‖` over unit `v` in the source
    /// eigenspace, for all four maps between the `x = ±1` eigenspaces.
    pub containment: f64,
}

impl HapperResult {
    pub fn max_family_residual(&self) -> f64 {
        self.family.iter().map(|r| r.1.max(r.2)).fold(0.0, f64::max)
    }

    pub fn max_transition_leakage(&self) -> f64 {
        self.transitions
            .iter()
            .flat_map(|t| t.rows.iter().map(|r| r.residual))
            .fold(0.0, f64::max)
    }
}

/// Orthonormal basis of the `E = −½` eigenspace.
fn degenerate_space(k: usize, x: f64) -> Result<Vec<Vec<C64>>, ScenarioError> {
    let h = happer_hamiltonian(k, x, 2)?;
    Ok(hermitian_eigen(&h, 1e-13)?.eigenspace(-0.5, 1e-8))
}

fn outside(v: &[C64], space: &[Vec<C64>]) -> f64 {
    let mut rest = v.to_vec();
    for b in space {
        let z = vdot(b, v);
        rest = matcore::vector::sub(&rest, &matcore::vector::scale(b, z));
    }
    norm(&rest)
}

/// Degenerate `S = 1` spectrum at field `x`, the family check and the
/// `J±` transitions between the `x = +1` and `x = −1` families with
/// `a = −(K+1)/2` and `a = K/2`, `b = 0`.
pub fn happer(k: usize, x: f64) -> Result<HapperResult, ScenarioError> {
    let h = happer_hamiltonian(k, x, 2)?;
    let eig = hermitian_eigen(&h, 1e-13)?;
    let space = eig.eigenspace(-0.5, 1e-8);
    let degenerate_dim = space.len();
    let mut spectrum = SpectrumResult::diagonalize(h.clone(), 1e-13)?;
    if x.abs() == 1.0 {
        spectrum = spectrum.with_closed_form(vec![Predicted::new("D", -0.5, 2 * k + 1)]);
    } else if x == 0.0 {
        // pure K·S: E = ½[G(G+1) − K(K+1) − 2]
        let kf = k as f64;
        let e = |g: f64| 0.5 * (g * (g + 1.0) - kf * (kf + 1.0) - 2.0);
        spectrum = spectrum.with_closed_form(vec![
            Predicted::new("G=K+1", e(kf + 1.0), 2 * k + 3),
            Predicted::new("G=K", e(kf), 2 * k + 1),
            Predicted::new("G=K-1", e(kf - 1.0), 2 * k - 1),
        ]);
    }
    let fam = if x == 1.0 {
        Some(HapperFamily::Alpha)
    } else if x == -1.0 {
        Some(HapperFamily::Beta)
    } else {
        None
    };
    let ki = k as i64;
    let mut family = Vec::new();
    if let Some(fam) = fam {
        for m in -ki..=ki {
            if let Some(v) = happer_state(k, m, fam) {
                let hv = h.apply(&v);
                let res = norm(&matcore::vector::add(
                    &hv,
                    &matcore::vector::scale(&v, re(0.5)),
                ));
                let kept: f64 = space.iter().map(|b| vdot(b, &v).norm_sqr()).sum();
                family.push((m, res, (1.0 - kept).abs()));
            }
        }
    }

    let a_first = -(k as f64 + 1.0) / 2.0;
    let a_second = k as f64 / 2.0;
    use HapperFamily::{Alpha, Beta};
    // (name, a, plus, source family, target family, Δm)
    let maps = [
        ("J+ a=-(K+1)/2", a_first, true, Beta, Alpha, 1),
        ("J- a=-(K+1)/2", a_first, false, Alpha, Beta, -1),
        ("J- a=K/2", a_second, false, Beta, Alpha, -1),
        ("J+ a=K/2", a_second, true, Alpha, Beta, 1),
    ];
    let label = |f: HapperFamily, m: i64| match f {
        Alpha => format!("alpha_{m}"),
        Beta => format!("beta_{m}"),
    };
    let mut transitions = Vec::new();
    let mut literal_leakage: f64 = 0.0;
    for &(name, a, plus, from, to, dm) in &maps {
        let op = happer_j(k, a, 0.0, HAPPER_CROSS, plus)?;
        let lit = happer_j(k, a, 0.0, 1.0, plus)?;
        let mut rows = Vec::new();
        for m in -ki..=ki {
            let target_m = m + dm;
            if target_m.abs() > ki {
                continue;
            }
            let (Some(v), Some(t)) = (happer_state(k, m, from), happer_state(k, target_m, to))
            else {
                continue;
            };
            let img = op.apply(&v);
            let z = vdot(&t, &img);
            let rest = matcore::vector::sub(&img, &matcore::vector::scale(&t, z));
            rows.push(TransitionRow {
                input: label(from, m),
                output: vec![(label(to, target_m), z)],
                residual: norm(&rest),
            });
            let li = lit.apply(&v);
            let lz = vdot(&t, &li);
            literal_leakage = literal_leakage.max(norm(&matcore::vector::sub(
                &li,
                &matcore::vector::scale(&t, lz),
            )));
        }
        transitions.push(TransitionTable {
            operator: name.to_string(),
            rows,
        });
    }

    let e_plus = degenerate_space(k, 1.0)?;
    let e_minus = degenerate_space(k, -1.0)?;
    let mut containment: f64 = 0.0;
    for &(_, a, plus, from, _, _) in &maps {
        let op = happer_j(k, a, 0.0, HAPPER_CROSS, plus)?;
        let (src, dst) = if from == Beta {
            (&e_minus, &e_plus)
        } else {
            (&e_plus, &e_minus)
        };
        for v in src {
            containment = containment.max(outside(&op.apply(v), dst));
        }
    }

    Ok(HapperResult {
        spectrum,
        degenerate_dim,
        family,
        transitions,
        literal_leakage,
        containment,
    })
}

/// `S = ½` version: no degenerate family, closed-form sector frequencies.
#[derive(Clone, Debug)]
pub struct HapperHalf {
    pub spectrum: SpectrumResult,
    /// `(m, ω_m)` for the interior `|m| < K + ½`,
    /// `ω_m² = (K+½)²(1 + x²) + 2xm(K+½)`.
    pub omega: Vec<(f64, f64)>,
    /// Largest discriminant of `ω_m² = 0` as a quadratic in `x`; negative
    /// means no real zero.
    pub max_discriminant: f64,
}

pub fn happer_half(k: usize, x: f64) -> Result<HapperHalf, ScenarioError> {
    let h = happer_hamiltonian(k, x, 1)?;
    let kh = k as f64 + 0.5;
    let kf = k as f64;
    let mut pred = vec![
        Predicted::new("edge +", kf / 2.0 + x * kh / 2.0, 1),
        Predicted::new("edge -", kf / 2.0 - x * kh / 2.0, 1),
    ];
    let mut omega = Vec::new();
    let mut max_disc = f64::NEG_INFINITY;
    for j in 0..2 * k {
        let m = -kf + 0.5 + j as f64;
        let w = (kh * kh * (1.0 + x * x) + 2.0 * x * m * kh).sqrt();
        omega.push((m, w));
        pred.push(Predicted::new(format!("m={m} +"), -0.25 + w / 2.0, 1));
        pred.push(Predicted::new(format!("m={m} -"), -0.25 - w / 2.0, 1));
        // kh²x² + 2m·kh·x + kh²
        max_disc = max_disc.max(4.0 * m * m * kh * kh - 4.0 * kh.powi(4));
    }
    Ok(HapperHalf {
        spectrum: SpectrumResult::diagonalize(h, 1e-13)?.with_closed_form(pred),
        omega,
        max_discriminant: max_disc,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct BreitRabiState {
    pub label: String,
    /// `‖Hv + (a+b)/4 v‖` for the normalized state.
    pub residual: f64,
    pub energy: f64,
    pub sz1: f64,
}

#[derive(Clone, Debug)]
pub struct BreitRabiResult {
    pub spectrum: SpectrumResult,
    /// The printed `α^±_{D,±½}` with signs taken from `x`.
    pub printed: Vec<BreitRabiState>,
    /// The eigenvector family that does sit at `−(a+b)/4` for `x = ±1`.
    pub corrected: Vec<BreitRabiState>,
}

/// `|s₁ s₂ s₃⟩` with `true` for spin up.
fn spins3(s: [bool; 3]) -> Vec<C64> {
    let idx = s.iter().fold(0, |acc, &up| 2 * acc + usize::from(!up));
    matcore::vector::basis(8, idx)
}

fn br_state(
    label: &str,
    terms: &[(f64, [bool; 3])],
    h: &ComplexMatrix,
    sz1: &ComplexMatrix,
    target: f64,
) -> BreitRabiState {
    let mut v = vec![re(0.0); 8];
    for (c, s) in terms {
        v = matcore::vector::add(&v, &matcore::vector::scale(&spins3(*s), re(*c)));
    }
    let v = normalized(&v);
    let hv = h.apply(&v);
    BreitRabiState {
        label: label.to_string(),
        residual: norm(&matcore::vector::sub(
            &hv,
            &matcore::vector::scale(&v, re(target)),
        )),
        energy: vdot(&v, &hv).re,
        sz1: vdot(&v, &sz1.apply(&v)).re,
    }
}

/// `H = −(aS₂ + bS₃)·S₁ + x√(ab) S₁^z` on three spin-½ sites, `S₁` first.
pub fn extended_breit_rabi(a: f64, b: f64, x: f64) -> Result<BreitRabiResult, ScenarioError> {
    if a * b <= 0.0 {
        return Err(ScenarioError::InvalidParameter("need ab > 0".into()));
    }
    let space = TensorSpace::uniform(2, 3)?;
    let s1 = spin_on(&space, 0, 1)?;
    let s2 = spin_on(&space, 1, 1)?;
    let s3 = spin_on(&space, 2, 1)?;
    let h = &(&dot(&s2, &s1).scale_re(-a) - &dot(&s3, &s1).scale_re(b))
        + &s1[2].scale_re(x * (a * b).sqrt());
    let lam = b / a;
    let r = lam.sqrt();
    let sg = if x < 0.0 { -1.0 } else { 1.0 };
    let target = -(a + b) / 4.0;
    let (u, d) = (true, false);
    let printed = vec![
        br_state(
            "+1/2",
            &[
                (-(2f64.sqrt()) * lam, [u, u, d]),
                (sg * r, [u, d, u]),
                (1.0 + sg * r, [d, u, u]),
            ],
            &h,
            &s1[2],
            target,
        ),
        br_state(
            "-1/2",
            &[
                (-(2f64.sqrt()) * lam, [d, d, u]),
                (-sg * r, [d, u, d]),
                (1.0 - sg * r, [u, d, d]),
            ],
            &h,
            &s1[2],
            target,
        ),
    ];
    let corrected = vec![
        br_state(
            "+1/2",
            &[
                (lam, [u, u, d]),
                (sg * r, [u, d, u]),
                (lam + sg * r, [d, u, u]),
            ],
            &h,
            &s1[2],
            target,
        ),
        br_state(
            "-1/2",
            &[
                (lam, [d, d, u]),
                (-sg * r, [d, u, d]),
                (lam - sg * r, [u, d, d]),
            ],
            &h,
            &s1[2],
            target,
        ),
    ];
    let spectrum = SpectrumResult::diagonalize(h, 1e-13)?
        .with_closed_form(vec![Predicted::new("D", target, 2)]);
    Ok(BreitRabiResult {
        spectrum,
        printed,
        corrected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_states_vanish() {
        assert!(happer_state(2, -2, HapperFamily::Alpha).is_none());
        assert!(happer_state(2, 2, HapperFamily::Beta).is_none());
        assert!(happer_state(2, 0, HapperFamily::Alpha).is_some());
    }

    #[test]
    fn spin_ket_order() {
        // |↓↑↑⟩ sits at index 4
        assert_eq!(spins3([false, true, true])[4], re(1.0));
    }
}
