use matcore::ComplexMatrix;

use crate::{Monodromy, RttError};

/// Series and closed-form quantum-determinant coefficients `C₀, C₁, C₂`.
#[derive(Clone, Debug)]
pub struct QuantumDeterminant {
    /// `C_n` for `n = 0, 1, 2` from the shifted-argument expansion.
    pub series: Vec<ComplexMatrix>,
    /// The same three from the closed forms.
    pub closed: Vec<ComplexMatrix>,
}

impl QuantumDeterminant {
    /// Largest entrywise gap between series and closed forms.
    pub fn closed_form_gap(&self) -> f64 {
        self.series
            .iter()
            .zip(&self.closed)
            .map(|(a, b)| a.dist(b))
            .fold(0.0, f64::max)
    }

    /// `max ‖[C_n, g]‖` over the given operators.
    pub fn centrality(&self, ops: &[ComplexMatrix]) -> f64 {
        let mut worst: f64 = 0.0;
        for cn in &self.series {
            for g in ops {
                worst = worst.max(cn.comm(g).max_abs());
            }
        }
        worst
    }
}

fn binom(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// `T_ab(u − s)` as a series in `u⁻¹` up to `order`, using
/// `(u − s)⁻ᵐ = Σ_l C(m+l−1, l) sˡ u^{−m−l}`.
fn shifted(mono: &Monodromy, a: usize, b: usize, s: f64, order: usize) -> Vec<ComplexMatrix> {
    let q = mono.quantum_dim();
    let mut out = vec![ComplexMatrix::zeros(q); order + 1];
    for m in 0..=mono.degree().min(order) {
        let blk = mono.coefficient_block(m, a, b);
        if m == 0 {
            out[0] += blk;
            continue;
        }
        for l in 0..=order - m {
            out[m + l] += blk.scale_re(binom(m + l - 1, l) * s.powi(l as i32));
        }
    }
    out
}

fn mul(x: &[ComplexMatrix], y: &[ComplexMatrix]) -> Vec<ComplexMatrix> {
    let order = x.len() - 1;
    let mut out = vec![ComplexMatrix::zeros(x[0].dim()); order + 1];
    for i in 0..=order {
        for j in 0..=order - i {
            out[i + j] += x[i].matmul(&y[j]);
        }
    }
    out
}

fn trace_block(mono: &Monodromy, m: &ComplexMatrix) -> ComplexMatrix {
    let mut out = ComplexMatrix::zeros(mono.quantum_dim());
    for a in 0..mono.aux_dim() {
        out += mono.block(m, a, a);
    }
    out
}

fn truncation(mono: &Monodromy) -> usize {
    2 + mono.sites().n_sites()
}

/// `T₁₁(u) T₂₂(u−1) − T₁₂(u) T₂₁(u−1)` expanded in `u⁻¹`; closed forms
/// `C₁ = T₀⁽¹⁾`, `C₂ = T₀⁽²⁾ − I² + T₀⁽¹⁾(1 + ½T₀⁽¹⁾)` with `T₀ = tr_aux T`
/// and `I² = I₃² + ½(I₊I₋ + I₋I₊)`.
///
/// The closed forms hold for the traceless Lax normalization only; with
/// the plain one `closed` is still filled in but does not match.
pub fn qdet_su2(mono: &Monodromy) -> Result<QuantumDeterminant, RttError> {
    if mono.aux_dim() != 2 {
        return Err(RttError::UnsupportedAux(mono.aux_dim()));
    }
    let k = truncation(mono);
    let a = mul(&shifted(mono, 0, 0, 0.0, k), &shifted(mono, 1, 1, 1.0, k));
    let b = mul(&shifted(mono, 0, 1, 0.0, k), &shifted(mono, 1, 0, 1.0, k));
    let series: Vec<ComplexMatrix> = a.iter().zip(&b).take(3).map(|(x, y)| x - y).collect();

    let q = mono.quantum_dim();
    let id = ComplexMatrix::identity(q);
    let t1 = mono.coefficient(1);
    let t01 = trace_block(mono, &t1);
    let t02 = trace_block(mono, &mono.coefficient(2));
    let ip = mono.block(&t1, 0, 1);
    let im = mono.block(&t1, 1, 0);
    let i3 = (&mono.block(&t1, 0, 0) - &mono.block(&t1, 1, 1)).scale_re(0.5);
    let i2 = &(&ip.matmul(&im) + &im.matmul(&ip)).scale_re(0.5) + &i3.matmul(&i3);
    let c2 = &(&t02 - &i2) + &t01.matmul(&(&id + &t01.scale_re(0.5)));
    Ok(QuantumDeterminant {
        series,
        closed: vec![id, t01, c2],
    })
}

/// `Σ_p (−1)^p T_{1p₁}(u) T_{2p₂}(u−1) T_{3p₃}(u−2)`; closed forms
/// `C₁ = T₀⁽¹⁾`, `C₂ = T₀⁽²⁾ + T₀⁽¹⁾ + 2(T₀⁽¹⁾)² − I²` with
/// `I² = Σ_μ I_μ²` over the Gell-Mann components of `T⁽¹⁾`.
pub fn qdet_su3(mono: &Monodromy) -> Result<QuantumDeterminant, RttError> {
    if mono.aux_dim() != 3 {
        return Err(RttError::UnsupportedAux(mono.aux_dim()));
    }
    let k = truncation(mono);
    let perms: [([usize; 3], f64); 6] = [
        ([0, 1, 2], 1.0),
        ([0, 2, 1], -1.0),
        ([1, 0, 2], -1.0),
        ([1, 2, 0], 1.0),
        ([2, 0, 1], 1.0),
        ([2, 1, 0], -1.0),
    ];
    let q = mono.quantum_dim();
    let mut series = vec![ComplexMatrix::zeros(q); 3];
    for (p, sg) in perms {
        let prod = mul(
            &mul(
                &shifted(mono, 0, p[0], 0.0, k),
                &shifted(mono, 1, p[1], 1.0, k),
            ),
            &shifted(mono, 2, p[2], 2.0, k),
        );
        for n in 0..3 {
            series[n] += prod[n].scale_re(sg);
        }
    }
    let id = ComplexMatrix::identity(q);
    let t1 = mono.coefficient(1);
    let t01 = trace_block(mono, &t1);
    let t02 = trace_block(mono, &mono.coefficient(2));
    let comps = crate::su3_generators(mono)?;
    let i2 = comps.level0().casimir();
    let c2 = &(&(&t02 + &t01) + &t01.matmul(&t01).scale_re(2.0)) - &i2;
    Ok(QuantumDeterminant {
        series,
        closed: vec![id, t01, c2],
    })
}
