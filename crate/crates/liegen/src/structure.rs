use matcore::{ComplexMatrix, C64};

use crate::LieError;

/// Complex structure constants `c[l][m][k]` with
/// `[g_l, g_m] = Σ_k c_lmk g_k`. For a Hermitian basis `c = i·f` with `f`
/// real.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureTensor {
    n: usize,
    c: Vec<C64>,
}

impl StructureTensor {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize, usize) -> C64) -> Self {
        let mut c = Vec::with_capacity(n * n * n);
        for l in 0..n {
            for m in 0..n {
                for k in 0..n {
                    c.push(f(l, m, k));
                }
            }
        }
        Self { n, c }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, l: usize, m: usize, k: usize) -> C64 {
        self.c[(l * self.n + m) * self.n + k]
    }

    /// Real structure constant `f = c / i`.
    pub fn f(&self, l: usize, m: usize, k: usize) -> f64 {
        (self.get(l, m, k) / C64::new(0.0, 1.0)).re
    }

    /// Largest imaginary part of `c / i`; zero for a Hermitian basis.
    pub fn f_imaginary_part(&self) -> f64 {
        self.c
            .iter()
            .map(|z| (z / C64::new(0.0, 1.0)).im.abs())
            .fold(0.0, f64::max)
    }

    /// Nonzero entries `(l, m, k, c_lmk)`.
    pub fn nonzeros(&self, tol: f64) -> Vec<(usize, usize, usize, C64)> {
        let n = self.n;
        let mut out = Vec::new();
        for l in 0..n {
            for m in 0..n {
                for k in 0..n {
                    let z = self.get(l, m, k);
                    if z.norm() > tol {
                        out.push((l, m, k, z));
                    }
                }
            }
        }
        out
    }

    /// `max |c_lmk + c_mlk|`.
    pub fn antisymmetry_defect(&self) -> f64 {
        let n = self.n;
        let mut worst: f64 = 0.0;
        for l in 0..n {
            for m in 0..n {
                for k in 0..n {
                    worst = worst.max((self.get(l, m, k) + self.get(m, l, k)).norm());
                }
            }
        }
        worst
    }

    /// Jacobi identity in tensor form:
    /// `max |Σ_s (c_lms c_skt + c_mks c_slt + c_kls c_smt)|`.
    pub fn jacobi_defect(&self) -> f64 {
        let n = self.n;
        let mut worst: f64 = 0.0;
        for l in 0..n {
            for m in 0..n {
                for k in 0..n {
                    for t in 0..n {
                        let mut acc = C64::new(0.0, 0.0);
                        for s in 0..n {
                            acc += self.get(l, m, s) * self.get(s, k, t)
                                + self.get(m, k, s) * self.get(s, l, t)
                                + self.get(k, l, s) * self.get(s, m, t);
                        }
                        worst = worst.max(acc.norm());
                    }
                }
            }
        }
        worst
    }

    pub fn closure_residual(&self, gens: &[ComplexMatrix]) -> f64 {
        let n = self.n;
        let mut worst: f64 = 0.0;
        for l in 0..n {
            for m in 0..n {
                let mut d = gens[l].comm(&gens[m]);
                for (k, g) in gens.iter().enumerate() {
                    let z = self.get(l, m, k);
                    if z.norm() > 0.0 {
                        d -= g.scale(z);
                    }
                }
                worst = worst.max(d.max_abs());
            }
        }
        worst
    }
}

/// Structure constants by trace projection,
/// `c_lmk = tr([g_l, g_m] g_k†) / tr(g_k g_k†)`. Entries below 1e−14 are
/// flushed to zero so that sparsity is exact.
pub fn structure_constants(gens: &[ComplexMatrix]) -> Result<StructureTensor, LieError> {
    if gens.is_empty() {
        return Err(LieError::Empty);
    }
    let n = gens.len();
    let adj: Vec<ComplexMatrix> = gens.iter().map(|g| g.adjoint()).collect();
    let mut norms = Vec::with_capacity(n);
    for (k, g) in gens.iter().enumerate() {
        let t = g.hs_inner(g).re;
        if t < 1e-14 {
            return Err(LieError::DegenerateTraceForm { index: k });
        }
        norms.push(t);
    }
    for a in 0..n {
        for b in a + 1..n {
            let ov = gens[a].hs_inner(&gens[b]).norm() / (norms[a] * norms[b]).sqrt();
            if ov > 1e-10 {
                return Err(LieError::NotOrthogonal { a, b, overlap: ov });
            }
        }
    }
    let comms: Vec<ComplexMatrix> = (0..n * n).map(|k| gens[k / n].comm(&gens[k % n])).collect();
    Ok(StructureTensor::from_fn(n, |l, m, k| {
        let z = comms[l * n + m].matmul(&adj[k]).trace() / norms[k];
        let flush = |x: f64| if x.abs() < 1e-14 { 0.0 } else { x };
        C64::new(flush(z.re), flush(z.im))
    }))
}

/// `ε_abc` for indices in 0..3.
pub fn levi_civita(a: usize, b: usize, c: usize) -> f64 {
    match (a, b, c) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}
