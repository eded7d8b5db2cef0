use std::f64::consts::PI;

use matcore::{c, ComplexMatrix, C64};

use crate::{realize_su2, VerificationReport, WScheme, YangError};

/// Chain coordinates on the unit circle, `Z_k = exp(2πik/N)`, `k = 1..N`.
pub fn hs_z(n: usize) -> Vec<C64> {
    (1..=n)
        .map(|k| C64::from_polar(1.0, 2.0 * PI * k as f64 / n as f64))
        .collect()
}

/// `H₂ = Σ_{i≠j} Z_i Z_j / (Z_ij Z_ji) · (P_ij − 1)` for arbitrary site
/// coordinates `z`, with `P_ij = 2(S_i·S_j + ¼)`, checked against the
/// Haldane-Shastry realization (`μ = 0`, `W_jk = i·cot((j−k)π/N)`,
/// coupling `i/2`).
pub fn haldane_shastry_h2_with(
    z: &[C64],
    tol: f64,
) -> Result<(ComplexMatrix, VerificationReport), YangError> {
    let n = z.len();
    if n < 3 {
        return Err(YangError::TooFewSites { need: 3, got: n });
    }
    let real = realize_su2(
        &vec![1; n],
        &vec![0.0; n],
        &WScheme::HaldaneShastry,
        c(0.0, 0.5),
    )?;
    let space = real.space();
    let dim = space.total_dim();
    let s = liegen::spin_matrices(1)?;
    let per: Vec<Vec<ComplexMatrix>> = (0..n)
        .map(|site| s.embedded(site, space))
        .collect::<Result<_, _>>()?;
    let id = ComplexMatrix::identity(dim);
    let mut h = ComplexMatrix::zeros(dim);
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let w = z[i] * z[j] / ((z[i] - z[j]) * (z[j] - z[i]));
            let mut dot = ComplexMatrix::zeros(dim);
            for a in 0..3 {
                dot += per[i][a].matmul(&per[j][a]);
            }
            // P − 1 = 2 S_i·S_j − 1/2
            h += (&dot.scale_re(2.0) - &id.scale_re(0.5)).scale(w);
        }
    }
    let mut rep = VerificationReport::new(format!("Haldane-Shastry H2, N = {n}"), tol);
    rep.check("hermitian", h.hermitian_defect());
    for (k, name) in ["1", "2", "3"].iter().enumerate() {
        rep.check(
            format!("[H2,I{name}]"),
            h.comm(&real.level0().generators()[k]).max_abs(),
        );
        rep.check(format!("[H2,J{name}]"), h.comm(&real.level1()[k]).max_abs());
    }
    Ok((h, rep))
}

/// [`haldane_shastry_h2_with`] on [`hs_z`]. The report also carries, as
/// information, the level-1 commutator obtained with `Z_k = exp(iπk/N)`
/// instead, which does not commute.
pub fn haldane_shastry_h2(
    n_sites: usize,
    tol: f64,
) -> Result<(ComplexMatrix, VerificationReport), YangError> {
    let (h, mut rep) = haldane_shastry_h2_with(&hs_z(n_sites), tol)?;
    let half: Vec<C64> = (1..=n_sites)
        .map(|k| C64::from_polar(1.0, PI * k as f64 / n_sites as f64))
        .collect();
    let (_, alt) = haldane_shastry_h2_with(&half, tol)?;
    let worst = ["1", "2", "3"]
        .iter()
        .filter_map(|k| alt.residual(&format!("[H2,J{k}]")))
        .fold(0.0, f64::max);
    rep.note("[H2,J] with half-angle coordinates", worst);
    Ok((h, rep))
}
