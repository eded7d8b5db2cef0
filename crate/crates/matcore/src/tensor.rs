use crate::{ComplexMatrix, MatError};

/// Ordered list of local dimensions of a multi-site Hilbert space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorSpace {
    local_dims: Vec<usize>,
    total_dim: usize,
}

impl TensorSpace {
    pub fn new(local_dims: Vec<usize>) -> Result<Self, MatError> {
        if local_dims.is_empty() || local_dims.contains(&0) {
            return Err(MatError::BadSpace);
        }
        let total_dim = local_dims.iter().product();
        Ok(Self {
            local_dims,
            total_dim,
        })
    }

    /// `n` copies of a `d`-dimensional site.
    pub fn uniform(d: usize, n: usize) -> Result<Self, MatError> {
        Self::new(vec![d; n])
    }

    pub fn local_dims(&self) -> &[usize] {
        &self.local_dims
    }

    pub fn local_dim(&self, site: usize) -> usize {
        self.local_dims[site]
    }

    pub fn n_sites(&self) -> usize {
        self.local_dims.len()
    }

    pub fn total_dim(&self) -> usize {
        self.total_dim
    }

    /// Spaces side by side, `self` outer.
    pub fn join(&self, other: &TensorSpace) -> TensorSpace {
        let mut d = self.local_dims.clone();
        d.extend_from_slice(&other.local_dims);
        TensorSpace::new(d).expect("joined spaces are valid")
    }

    fn stride(&self, site: usize) -> usize {
        self.local_dims[site + 1..].iter().product()
    }

    fn check_site(&self, site: usize, op_dim: usize) -> Result<(), MatError> {
        if site >= self.n_sites() {
            return Err(MatError::SiteOutOfRange {
                site,
                n_sites: self.n_sites(),
            });
        }
        if self.local_dims[site] != op_dim {
            return Err(MatError::SiteDimension {
                site,
                expected: self.local_dims[site],
                found: op_dim,
            });
        }
        Ok(())
    }

    /// Flattened index of a product basis state.
    pub fn index_of(&self, digits: &[usize]) -> usize {
        assert_eq!(digits.len(), self.n_sites());
        digits
            .iter()
            .zip(&self.local_dims)
            .fold(0, |acc, (&d, &n)| acc * n + d)
    }

    /// Inverse of [`TensorSpace::index_of`].
    pub fn digits_of(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.n_sites()];
        for (k, &n) in self.local_dims.iter().enumerate().rev() {
            out[k] = index % n;
            index /= n;
        }
        out
    }

    /// `1 ⊗ … ⊗ op ⊗ … ⊗ 1` with `op` at `site`.
    pub fn embed(&self, op: &ComplexMatrix, site: usize) -> Result<ComplexMatrix, MatError> {
        self.check_site(site, op.dim())?;
        let left: usize = self.local_dims[..site].iter().product();
        let right = self.stride(site);
        let mut out = op.clone();
        if right > 1 {
            out = out.kron(&ComplexMatrix::identity(right));
        }
        if left > 1 {
            out = ComplexMatrix::identity(left).kron(&out);
        }
        Ok(out)
    }

    /// Place a two-site operator defined on `d_i ⊗ d_j` (site `i` outer)
    /// onto sites `i` and `j`, which need not be adjacent or ordered.
    pub fn embed_pair(
        &self,
        op: &ComplexMatrix,
        i: usize,
        j: usize,
    ) -> Result<ComplexMatrix, MatError> {
        if i == j {
            return Err(MatError::RepeatedSite(i));
        }
        for s in [i, j] {
            if s >= self.n_sites() {
                return Err(MatError::SiteOutOfRange {
                    site: s,
                    n_sites: self.n_sites(),
                });
            }
        }
        let (di, dj) = (self.local_dims[i], self.local_dims[j]);
        if op.dim() != di * dj {
            return Err(MatError::DimensionMismatch {
                left: di * dj,
                right: op.dim(),
            });
        }
        let (si, sj) = (self.stride(i), self.stride(j));
        let n = self.total_dim;
        let mut data = vec![crate::C64::new(0.0, 0.0); n * n];
        for col in 0..n {
            let ci = (col / si) % di;
            let cj = (col / sj) % dj;
            let rest = col - ci * si - cj * sj;
            for ri in 0..di {
                for rj in 0..dj {
                    let v = op.get(ri * dj + rj, ci * dj + cj);
                    if v.re == 0.0 && v.im == 0.0 {
                        continue;
                    }
                    let row = rest + ri * si + rj * sj;
                    data[row * n + col] += v;
                }
            }
        }
        ComplexMatrix::from_vec(n, data)
    }
}

/// Free-function form of [`TensorSpace::embed`].
pub fn embed(
    op: &ComplexMatrix,
    site: usize,
    space: &TensorSpace,
) -> Result<ComplexMatrix, MatError> {
    space.embed(op, site)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::re;

    fn sz() -> ComplexMatrix {
        ComplexMatrix::real_diagonal(&[0.5, -0.5])
    }

    #[test]
    fn embed_first_site() {
        let sp = TensorSpace::uniform(2, 2).unwrap();
        let e = sp.embed(&sz(), 0).unwrap();
        assert_eq!(e, ComplexMatrix::real_diagonal(&[0.5, 0.5, -0.5, -0.5]));
    }

    #[test]
    fn embed_identity_anywhere() {
        let sp = TensorSpace::uniform(2, 3).unwrap();
        for k in 0..3 {
            assert_eq!(
                sp.embed(&ComplexMatrix::identity(2), k).unwrap(),
                ComplexMatrix::identity(8)
            );
        }
    }

    #[test]
    fn embed_errors_name_the_site() {
        let sp = TensorSpace::new(vec![2, 3]).unwrap();
        let err = sp.embed(&sz(), 1).unwrap_err();
        assert_eq!(
            err,
            MatError::SiteDimension {
                site: 1,
                expected: 3,
                found: 2
            }
        );
        assert!(err.to_string().contains("site 1"));
        assert!(matches!(
            sp.embed(&sz(), 2),
            Err(MatError::SiteOutOfRange { .. })
        ));
    }

    #[test]
    fn digits_roundtrip() {
        let sp = TensorSpace::new(vec![2, 3, 4]).unwrap();
        for k in 0..24 {
            assert_eq!(sp.index_of(&sp.digits_of(k)), k);
        }
    }

    #[test]
    fn pair_embedding_matches_kron_when_adjacent() {
        let sp = TensorSpace::new(vec![2, 3]).unwrap();
        let a = ComplexMatrix::from_fn(2, |i, j| re((i + 2 * j) as f64));
        let b = ComplexMatrix::from_fn(3, |i, j| re(i as f64 - j as f64 * 0.5));
        let ab = a.kron(&b);
        assert_eq!(sp.embed_pair(&ab, 0, 1).unwrap(), ab);
        // reversed placement: op's outer factor goes to site 1
        let ba = b.kron(&a);
        assert!(sp.embed_pair(&ba, 1, 0).unwrap().dist(&ab) < 1e-15);
    }
}
