use std::f64::consts::{PI, SQRT_2};

use matcore::vector::{normalized, vdot};
use matcore::{c, char_poly_coeffs, hermitian_eigen, poly_roots, re, ComplexMatrix, C64};

use crate::{Predicted, ScenarioError, SpectrumResult};

/// Two-spin NMR parameters; `μ± = (μ₁ − μ₂) ± ih/2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NmrParams {
    pub omega0: f64,
    pub gamma: f64,
    pub b1: f64,
    pub b3: f64,
    pub mu1: f64,
    pub mu2: f64,
    pub h: f64,
}

impl NmrParams {
    pub fn mu_plus(&self) -> C64 {
        c(self.mu1 - self.mu2, self.h / 2.0)
    }

    pub fn mu_minus(&self) -> C64 {
        c(self.mu1 - self.mu2, -self.h / 2.0)
    }

    /// `ω = (B₃/2)|μ|`, the singlet-triplet frequency when `B₁ = 0`.
    pub fn omega(&self) -> f64 {
        0.5 * self.b3 * self.mu_plus().norm()
    }
}

/// The 4×4 interaction matrix on `(b₊, a₃, b₋, a₀)`, the three triplet
/// components followed by the singlet.
pub fn nmr_matrix(p: &NmrParams) -> ComplexMatrix {
    let w = re(p.omega0 - p.gamma * p.b3);
    let g = re(-p.gamma * p.b1 / SQRT_2);
    let (mp, mm) = (p.mu_plus(), p.mu_minus());
    let t = p.b1 / (2.0 * SQRT_2);
    let q = p.b3 / 2.0;
    let z = re(0.0);
    ComplexMatrix::from_rows(&[
        vec![w, g, z, mm * t],
        vec![g, z, g, -mm * q],
        vec![z, g, -w, -mm * t],
        vec![mp * t, -mp * q, -mp * t, z],
    ])
    .expect("4x4 literal")
}

/// Spectrum of [`nmr_matrix`]. For `B₁ = 0` the four closed-form values
/// `±(ω₀ − γB₃)` and `±ω` are attached.
pub fn nmr_spectrum(p: &NmrParams, tol: f64) -> Result<SpectrumResult, ScenarioError> {
    let res = SpectrumResult::diagonalize(nmr_matrix(p), tol)?;
    if p.b1 != 0.0 {
        return Ok(res);
    }
    let w = p.omega0 - p.gamma * p.b3;
    let om = p.omega();
    Ok(res.with_closed_form(vec![
        Predicted::new("triplet +", w, 1),
        Predicted::new("triplet -", -w, 1),
        Predicted::new("mixed +", om, 1),
        Predicted::new("mixed -", -om, 1),
    ]))
}

/// Characteristic polynomial of the NMR matrix, highest power first, next
/// to the closed-form quartic and the numerically found roots.
#[derive(Clone, Debug)]
pub struct NmrQuartic {
    pub numeric: Vec<C64>,
    pub closed: Vec<C64>,
    /// Real parts of the roots, ascending.
    pub roots: Vec<f64>,
}

impl NmrQuartic {
    /// `max_k |numeric_k − closed_k| / max_k |closed_k|`.
    pub fn relative_gap(&self) -> f64 {
        let scale = self
            .closed
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
            .max(f64::MIN_POSITIVE);
        let diff = self
            .numeric
            .iter()
            .zip(&self.closed)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        diff / scale
    }

    /// Largest distance between the roots and a sorted spectrum.
    pub fn root_gap(&self, eigenvalues: &[f64]) -> f64 {
        self.roots
            .iter()
            .zip(eigenvalues)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

pub fn nmr_quartic(p: &NmrParams) -> NmrQuartic {
    let numeric = char_poly_coeffs(&nmr_matrix(p));
    let w = p.omega0 - p.gamma * p.b3;
    let mm = (p.mu_plus() * p.mu_minus()).re;
    let (b1, b3, g) = (p.b1, p.b3, p.gamma);
    let e2 = -(w * w + g * g * b1 * b1 + 0.25 * mm * (b1 * b1 + b3 * b3));
    let e0 = 0.25 * mm * (b3 * b3 * w * w - 2.0 * g * b3 * b1 * b1 * w + g * g * b1.powi(4));
    let closed = vec![re(1.0), re(0.0), re(e2), re(0.0), re(e0)];
    let mut roots: Vec<f64> = poly_roots(&numeric).iter().map(|z| z.re).collect();
    roots.sort_by(f64::total_cmp);
    NmrQuartic {
        numeric,
        closed,
        roots,
    }
}

/// `⟨S²⟩` sampled along the evolution that starts in the triplet `m = 0`
/// component.
#[derive(Clone, Debug)]
pub struct Oscillation {
    pub omega: f64,
    /// `(t, ⟨S²⟩(t))`.
    pub samples: Vec<(f64, f64)>,
}

impl Oscillation {
    /// Largest deviation from `2cos²(ωt)`.
    pub fn closed_form_gap(&self) -> f64 {
        self.samples
            .iter()
            .map(|&(t, s)| (s - 2.0 * (self.omega * t).cos().powi(2)).abs())
            .fold(0.0, f64::max)
    }
}

/// Evolve under [`nmr_matrix`] with `B₁ = 0`. Any other field is rejected;
/// `ω = 0` leaves nothing to oscillate.
pub fn nmr_oscillation(p: &NmrParams, times: &[f64]) -> Result<Oscillation, ScenarioError> {
    if p.b1 != 0.0 {
        return Err(ScenarioError::InvalidParameter(
            "oscillation needs b1 = 0".into(),
        ));
    }
    let omega = p.omega();
    if omega == 0.0 {
        return Err(ScenarioError::Degenerate(
            "omega = 0, no singlet-triplet drive".into(),
        ));
    }
    let h = nmr_matrix(p);
    let eig = hermitian_eigen(&h, 1e-13)?;
    let start = matcore::vector::basis(4, 1);
    let coef: Vec<C64> = (0..4).map(|k| vdot(&eig.vector(k), &start)).collect();
    let samples = times
        .iter()
        .map(|&t| {
            let mut psi = [re(0.0); 4];
            for (k, ck) in coef.iter().enumerate() {
                let ph = c(0.0, -eig.values[k] * t).exp() * ck;
                for (o, v) in psi.iter_mut().zip(eig.vector(k)) {
                    *o += ph * v;
                }
            }
            let triplet: f64 = psi[..3].iter().map(|z| z.norm_sqr()).sum();
            (t, 2.0 * triplet)
        })
        .collect();
    Ok(Oscillation { omega, samples })
}

/// Parameters of the singlet-triplet mixing weights `f₁^±`, `f₂^±`.
/// `μ₊ = mu`, `μ₋ = conj(mu)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BerryMix {
    pub alpha: f64,
    pub g_b0: f64,
    pub mu: C64,
}

impl Default for BerryMix {
    fn default() -> Self {
        Self {
            alpha: 1.0,
            g_b0: 1.0,
            mu: c(1.0, 0.5),
        }
    }
}

impl BerryMix {
    /// `(f₁, f₂)` for the upper (`sign = +1`) or lower branch, normalized
    /// so that `|f₁|² + |f₂|² = 1`.
    pub fn weights(&self, sign: f64) -> (C64, C64) {
        let x = self.alpha * self.alpha + self.g_b0 * self.g_b0 * self.mu.norm_sqr();
        let pre = 1.0 / (2.0 * x).sqrt();
        let f1 = pre * re(x.sqrt() + sign * self.alpha).sqrt();
        let ratio = self.mu / self.mu.conj();
        let f2 = pre * (ratio * x.sqrt() - sign * self.alpha).sqrt();
        let n = (f1.norm_sqr() + f2.norm_sqr()).sqrt();
        if n == 0.0 {
            return (re(1.0), re(0.0));
        }
        (f1 / n, f2 / n)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BerryPhase {
    pub label: String,
    pub numeric: f64,
    pub closed: f64,
}

/// Driven states in the basis `(↑↑, ↑↓, ↓↑, ↓↓)`.
fn driven(theta: f64, w0t: f64, which: usize, mix: &BerryMix) -> Vec<C64> {
    let r = 1.0 / SQRT_2;
    let e = |k: f64| c(0.0, k * w0t).exp();
    let (ct, st) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    // |χ10⟩ = (↑↓ + ↓↑)/√2, |χ00⟩ = (↑↓ − ↓↑)/√2
    let from =
        |a11: C64, a10: C64, a1m: C64, a00: C64| vec![a11, r * (a10 + a00), r * (a10 - a00), a1m];
    match which {
        0 => from(
            re(ct * ct),
            r * theta.sin() * e(-1.0),
            st * st * e(-2.0),
            re(0.0),
        ),
        1 => from(
            st * st * e(2.0),
            -r * theta.sin() * e(1.0),
            re(ct * ct),
            re(0.0),
        ),
        _ => {
            let sign = if which == 2 { 1.0 } else { -1.0 };
            let (f1, f2) = mix.weights(sign);
            let a = f1 * r;
            from(
                -a * theta.sin() * e(1.0),
                a * SQRT_2 * theta.cos(),
                a * theta.sin() * e(-1.0),
                f2,
            )
        }
    }
}

/// `γ = i∮⟨χ|∂ₜχ⟩dt` over one drive period for the four driven states,
/// with the default mixing weights.
pub fn berry_phase(
    theta: f64,
    omega0: f64,
    n_steps: usize,
) -> Result<Vec<BerryPhase>, ScenarioError> {
    berry_phase_with(theta, omega0, n_steps, &BerryMix::default())
}

/// Trapezoid rule on a uniform grid of `n_steps` intervals; the time
/// derivative is a central difference with the same step, so the error
/// falls as `n_steps⁻²`.
pub fn berry_phase_with(
    theta: f64,
    omega0: f64,
    n_steps: usize,
    mix: &BerryMix,
) -> Result<Vec<BerryPhase>, ScenarioError> {
    if !(0.0..=PI).contains(&theta) {
        return Err(ScenarioError::InvalidParameter(format!(
            "theta = {theta} outside [0, pi]"
        )));
    }
    if n_steps < 100 {
        return Err(ScenarioError::InvalidParameter(
            "n_steps must be at least 100".into(),
        ));
    }
    if omega0 == 0.0 {
        return Err(ScenarioError::InvalidParameter(
            "omega0 must be nonzero".into(),
        ));
    }
    let period = 2.0 * PI / omega0.abs();
    let dt = period / n_steps as f64;
    let omega_solid = 2.0 * PI * (1.0 - theta.cos());
    let labels = [
        ("chi_11", omega_solid),
        ("chi_1-1", -omega_solid),
        ("chi_+", 0.0),
        ("chi_-", 0.0),
    ];
    let mut out = Vec::with_capacity(4);
    for (which, (label, closed)) in labels.iter().enumerate() {
        let state = |t: f64| normalized(&driven(theta, omega0 * t, which, mix));
        let integrand = |t: f64| {
            let fwd = state(t + dt);
            let bwd = state(t - dt);
            let d: Vec<C64> = fwd
                .iter()
                .zip(&bwd)
                .map(|(a, b)| (a - b) / (2.0 * dt))
                .collect();
            vdot(&state(t), &d)
        };
        let mut acc = re(0.0);
        for k in 0..=n_steps {
            let w = if k == 0 || k == n_steps { 0.5 } else { 1.0 };
            acc += integrand(k as f64 * dt) * w;
        }
        let gamma = c(0.0, 1.0) * acc * dt;
        out.push(BerryPhase {
            label: label.to_string(),
            numeric: gamma.re,
            closed: *closed,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn case() -> NmrParams {
        NmrParams {
            omega0: 2.0,
            gamma: 1.0,
            b1: 0.0,
            b3: 1.0,
            mu1: 1.0,
            mu2: 0.0,
            h: 0.0,
        }
    }

    #[test]
    fn b1_zero_spectrum() {
        let s = nmr_spectrum(&case(), 1e-13).unwrap();
        let want = [-1.0, -0.5, 0.5, 1.0];
        for (a, b) in s.eigenvalues.iter().zip(want) {
            assert!((a - b).abs() < 1e-12);
        }
        assert!(s.closed_form_gap().unwrap() < 1e-12);
    }

    #[test]
    fn matrix_is_hermitian() {
        let p = NmrParams {
            b1: 0.7,
            h: 0.3,
            ..case()
        };
        assert!(nmr_matrix(&p).hermitian_defect() < 1e-15);
    }

    #[test]
    fn mixing_weights_normalized() {
        for s in [1.0, -1.0] {
            let (a, b) = BerryMix::default().weights(s);
            assert!((a.norm_sqr() + b.norm_sqr() - 1.0).abs() < 1e-14);
        }
    }
}
