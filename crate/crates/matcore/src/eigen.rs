use num_complex::Complex64 as C64;

use crate::{ComplexMatrix, MatError};

/// Sweep cap for the cyclic Jacobi iteration.
pub const MAX_SWEEPS: usize = 100;

#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    /// Ascending.
    pub values: Vec<f64>,
    /// Eigenvectors as columns, unitary.
    pub vectors: ComplexMatrix,
}

impl EigenDecomposition {
    pub fn vector(&self, k: usize) -> Vec<C64> {
        self.vectors.column(k)
    }

    /// `‖A·V − V·diag(values)‖_max`.
    pub fn residual(&self, a: &ComplexMatrix) -> f64 {
        let d = ComplexMatrix::real_diagonal(&self.values);
        a.matmul(&self.vectors).dist(&self.vectors.matmul(&d))
    }

    /// Columns whose eigenvalue lies within `window` of `target`.
    pub fn eigenspace(&self, target: f64, window: f64) -> Vec<Vec<C64>> {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &v)| (v - target).abs() < window)
            .map(|(k, _)| self.vector(k))
            .collect()
    }
}

/// Diagonalize a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// Rotations continue until every off-diagonal modulus is at most
/// `tol·‖a‖_max` (never below a few ulps, so tiny `tol` still terminates).
pub fn hermitian_eigen(a: &ComplexMatrix, tol: f64) -> Result<EigenDecomposition, MatError> {
    let asymmetry = a.hermitian_defect();
    if asymmetry >= tol {
        return Err(MatError::NotHermitian { asymmetry, tol });
    }
    let n = a.dim();
    let scale = a.max_abs();
    let mut m: Vec<C64> = (0..n * n)
        .map(|k| {
            let (i, j) = (k / n, k % n);
            (a.get(i, j) + a.get(j, i).conj()) * 0.5
        })
        .collect();
    let mut v: Vec<C64> = ComplexMatrix::identity(n).entries().to_vec();
    let threshold = tol.max(4.0 * f64::EPSILON) * scale;

    let off = |m: &[C64]| {
        let mut w: f64 = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                w = w.max(m[p * n + q].norm());
            }
        }
        w
    };

    let mut converged = scale == 0.0;
    for _ in 0..MAX_SWEEPS {
        if converged || off(&m) <= threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[p * n + q];
                let r = apq.norm();
                if r == 0.0 {
                    continue;
                }
                let ph = apq / r;
                let tau = (m[q * n + q].re - m[p * n + p].re) / (2.0 * r);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let cs = 1.0 / (1.0 + t * t).sqrt();
                let sn = t * cs;
                // U on the (p,q) plane: [[c, s·ph], [−s·ph*, c]]
                let upq = ph * sn;
                let uqp = -ph.conj() * sn;
                for k in 0..n {
                    let (kp, kq) = (m[k * n + p], m[k * n + q]);
                    m[k * n + p] = kp * cs + kq * uqp;
                    m[k * n + q] = kp * upq + kq * cs;
                    let (vp, vq) = (v[k * n + p], v[k * n + q]);
                    v[k * n + p] = vp * cs + vq * uqp;
                    v[k * n + q] = vp * upq + vq * cs;
                }
                for k in 0..n {
                    let (pk, qk) = (m[p * n + k], m[q * n + k]);
                    m[p * n + k] = pk * cs + qk * uqp.conj();
                    m[q * n + k] = pk * upq.conj() + qk * cs;
                }
                m[p * n + q] = C64::new(0.0, 0.0);
                m[q * n + p] = C64::new(0.0, 0.0);
                m[p * n + p] = C64::new(m[p * n + p].re, 0.0);
                m[q * n + q] = C64::new(m[q * n + q].re, 0.0);
            }
        }
    }
    if !converged && off(&m) > threshold {
        return Err(MatError::NoConvergence {
            sweeps: MAX_SWEEPS,
            off: off(&m),
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| m[x * n + x].re.total_cmp(&m[y * n + y].re));
    let values = order.iter().map(|&k| m[k * n + k].re).collect();
    let mut vectors = ComplexMatrix::from_fn(n, |i, j| v[i * n + order[j]]);
    // fix phases: largest component of each column real and positive
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let col = vectors.column(j);
        let big = col
            .iter()
            .copied()
            .max_by(|x, y| x.norm().total_cmp(&y.norm()))
            .unwrap_or(C64::new(1.0, 0.0));
        let ph = big.conj() / big.norm();
        cols.push(col.into_iter().map(|z| z * ph).collect::<Vec<_>>());
    }
    if n > 0 {
        vectors = ComplexMatrix::from_columns(&cols)?;
    }
    Ok(EigenDecomposition { values, vectors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{c, re};

    #[test]
    fn pauli_spectra() {
        let s3 = ComplexMatrix::real_diagonal(&[1.0, -1.0]);
        assert_eq!(hermitian_eigen(&s3, 1e-12).unwrap().values, vec![-1.0, 1.0]);
        let s1 = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap();
        let e = hermitian_eigen(&s1, 1e-12).unwrap();
        assert!((e.values[0] + 1.0).abs() < 1e-14 && (e.values[1] - 1.0).abs() < 1e-14);
        let v0 = e.vector(0);
        let h = 1.0 / 2f64.sqrt();
        // (1, −1)/√2 up to phase
        assert!((v0[0].norm() - h).abs() < 1e-14 && (v0[0] + v0[1]).norm() < 1e-14);
        assert!(e.residual(&s1) < 1e-14);
    }

    #[test]
    fn rejects_non_hermitian() {
        let a = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap();
        match hermitian_eigen(&a, 1e-9) {
            Err(MatError::NotHermitian { asymmetry, .. }) => {
                assert!((asymmetry - 1.0).abs() < 1e-15)
            }
            other => panic!("expected NotHermitian, got {other:?}"),
        }
    }

    #[test]
    fn complex_hermitian_reconstruction() {
        let n = 7;
        let b = ComplexMatrix::from_fn(n, |i, j| {
            c(
                ((i * 7 + j * 3) % 5) as f64 - 2.0,
                ((i + 2 * j) % 3) as f64 - 1.0,
            )
        });
        let a = &b + &b.adjoint();
        let e = hermitian_eigen(&a, 1e-12).unwrap();
        assert!(e.residual(&a) < 1e-10 * a.max_abs());
        let vv = e.vectors.adjoint().matmul(&e.vectors);
        assert!(vv.dist(&ComplexMatrix::identity(n)) < 1e-12);
        assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
        let tr: f64 = e.values.iter().sum();
        assert!((tr - a.trace().re).abs() < 1e-10 * n as f64 * a.max_abs());
    }

    #[test]
    fn zero_matrix() {
        let e = hermitian_eigen(&ComplexMatrix::zeros(3), 1e-9).unwrap();
        assert_eq!(e.values, vec![0.0; 3]);
        assert_eq!(e.vectors, ComplexMatrix::identity(3));
        let _ = re(0.0);
    }
}
