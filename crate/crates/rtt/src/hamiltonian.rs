use matcore::{re, ComplexMatrix, TensorSpace};

use crate::{RMatrixSpec, RttError};

/// Two-site density `H = Ř'(0) Ř(0)⁻¹` with the analytic derivative.
pub fn hamiltonian_from_r(spec: &RMatrixSpec) -> Result<ComplexMatrix, RttError> {
    let r0 = spec.evaluate(re(0.0));
    let inv = r0.inverse().map_err(|_| RttError::Singular)?;
    Ok(spec.derivative(re(0.0)).matmul(&inv))
}

/// Same density with a central difference of step `h`.
pub fn hamiltonian_from_r_numeric(spec: &RMatrixSpec, h: f64) -> Result<ComplexMatrix, RttError> {
    let r0 = spec.evaluate(re(0.0));
    let inv = r0.inverse().map_err(|_| RttError::Singular)?;
    let d = (&spec.evaluate(re(h)) - &spec.evaluate(re(-h))).scale_re(0.5 / h);
    Ok(d.matmul(&inv))
}

/// Open chain `Σ_{i} h_{i,i+1}` of a two-site density on `n_sites` sites of
/// dimension `d`.
pub fn chain_hamiltonian(
    density: &ComplexMatrix,
    d: usize,
    n_sites: usize,
) -> Result<ComplexMatrix, RttError> {
    let space = TensorSpace::uniform(d, n_sites)?;
    let mut h = ComplexMatrix::zeros(space.total_dim());
    for i in 0..n_sites.saturating_sub(1) {
        h += space.embed_pair(density, i, i + 1)?;
    }
    Ok(h)
}
