use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_complex::Complex64 as C64;

use crate::MatError;

/// Dense square complex matrix, row-major.
///
/// Values are never shared mutably: every operation allocates its result.
/// Binary operators panic on a dimension mismatch; the free functions
/// [`commutator`], [`anticommutator`] and [`sym3`] return an error instead.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<C64>,
}

impl ComplexMatrix {
    /// # Panics
    /// If `dim == 0`.
    pub fn zeros(dim: usize) -> Self {
        assert!(dim > 0, "matrix dimension must be at least 1");
        Self {
            dim,
            data: vec![C64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = C64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m.data[i * dim + j] = f(i, j);
            }
        }
        m
    }

    /// Build from row-major entries, checking shape and finiteness.
    pub fn from_vec(dim: usize, data: Vec<C64>) -> Result<Self, MatError> {
        if dim == 0 {
            return Err(MatError::Empty);
        }
        if data.len() != dim * dim {
            return Err(MatError::BadShape {
                dim,
                found: data.len(),
            });
        }
        if let Some(k) = data
            .iter()
            .position(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(MatError::NonFinite {
                row: k / dim,
                col: k % dim,
            });
        }
        Ok(Self { dim, data })
    }

    /// Build from nested rows of real numbers (handy for literal tables).
    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self, MatError> {
        let dim = rows.len();
        let data: Vec<C64> = rows
            .iter()
            .flat_map(|r| r.iter().map(|&x| C64::new(x, 0.0)))
            .collect();
        Self::from_vec(dim, data)
    }

    pub fn from_rows(rows: &[Vec<C64>]) -> Result<Self, MatError> {
        let dim = rows.len();
        Self::from_vec(dim, rows.concat())
    }

    pub fn diagonal(diag: &[C64]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n);
        for (i, &d) in diag.iter().enumerate() {
            m.data[i * n + i] = d;
        }
        m
    }

    pub fn real_diagonal(diag: &[f64]) -> Self {
        Self::diagonal(&diag.iter().map(|&x| C64::new(x, 0.0)).collect::<Vec<_>>())
    }

    /// Matrix unit `E_ij`.
    pub fn unit(dim: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(dim);
        m.data[i * dim + j] = C64::new(1.0, 0.0);
        m
    }

    /// `|u><v|`.
    pub fn outer(u: &[C64], v: &[C64]) -> Self {
        assert_eq!(u.len(), v.len(), "outer product of unequal vectors");
        Self::from_fn(u.len(), |i, j| u[i] * v[j].conj())
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<C64>]) -> Result<Self, MatError> {
        let n = cols.len();
        if n == 0 {
            return Err(MatError::Empty);
        }
        if let Some(bad) = cols.iter().find(|c| c.len() != n) {
            return Err(MatError::DimensionMismatch {
                left: n,
                right: bad.len(),
            });
        }
        Ok(Self::from_fn(n, |i, j| cols[j][i]))
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.data[i * self.dim + j]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[C64] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<C64> {
        (0..self.dim).map(|i| self.get(i, j)).collect()
    }

    pub fn row(&self, i: usize) -> Vec<C64> {
        self.data[i * self.dim..(i + 1) * self.dim].to_vec()
    }

    /// Copy with one entry replaced.
    pub fn with_entry(&self, i: usize, j: usize, z: C64) -> Self {
        let mut m = self.clone();
        m.data[i * self.dim + j] = z;
        m
    }

    fn map(&self, f: impl Fn(C64) -> C64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|&z| f(z)).collect(),
        }
    }

    pub fn scale(&self, s: C64) -> Self {
        self.map(|z| z * s)
    }

    pub fn scale_re(&self, s: f64) -> Self {
        self.map(|z| z * s)
    }

    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i))
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).conj())
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Largest entry modulus, the norm used for every residual.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn frobenius(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `max |self - other|` entrywise.
    pub fn dist(&self, other: &Self) -> f64 {
        self.check_dim(other);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// `‖a − a†‖_max`.
    pub fn hermitian_defect(&self) -> f64 {
        let n = self.dim;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in i..n {
                worst = worst.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_defect() < tol
    }

    /// Hilbert-Schmidt inner product `tr(self† other)`.
    pub fn hs_inner(&self, other: &Self) -> C64 {
        self.check_dim(other);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.max_abs() < tol
    }

    fn check_dim(&self, other: &Self) {
        assert_eq!(
            self.dim, other.dim,
            "dimension mismatch: {} vs {}",
            self.dim, other.dim
        );
    }

    /// Matrix product. Zero entries of `self` are skipped, which pays off
    /// for the sparse site operators this crate mostly multiplies.
    pub fn matmul(&self, other: &Self) -> Self {
        self.check_dim(other);
        let n = self.dim;
        let mut out = vec![C64::new(0.0, 0.0); n * n];
        for i in 0..n {
            let row = &mut out[i * n..(i + 1) * n];
            for k in 0..n {
                let a = self.data[i * n + k];
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                let b = &other.data[k * n..(k + 1) * n];
                for (r, &bv) in row.iter_mut().zip(b) {
                    *r += a * bv;
                }
            }
        }
        Self { dim: n, data: out }
    }

    /// `ab − ba`.
    ///
    /// # Panics
    /// On a dimension mismatch.
    pub fn comm(&self, other: &Self) -> Self {
        &self.matmul(other) - &other.matmul(self)
    }

    /// `ab + ba`.
    pub fn anticomm(&self, other: &Self) -> Self {
        &self.matmul(other) + &other.matmul(self)
    }

    pub fn kron(&self, other: &Self) -> Self {
        let (na, nb) = (self.dim, other.dim);
        let n = na * nb;
        let mut out = Self::zeros(n);
        for i1 in 0..na {
            for j1 in 0..na {
                let a = self.get(i1, j1);
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                for i2 in 0..nb {
                    let base = (i1 * nb + i2) * n + j1 * nb;
                    for j2 in 0..nb {
                        out.data[base + j2] = a * other.data[i2 * nb + j2];
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(
            v.len(),
            self.dim,
            "vector length {} vs dim {}",
            v.len(),
            self.dim
        );
        let n = self.dim;
        (0..n)
            .map(|i| {
                self.data[i * n..(i + 1) * n]
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn powi(&self, k: u32) -> Self {
        let mut out = Self::identity(self.dim);
        for _ in 0..k {
            out = out.matmul(self);
        }
        out
    }

    /// Principal submatrix on the given index list.
    pub fn principal(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), |i, j| self.get(idx[i], idx[j]))
    }

    /// Max modulus over entries `(i, j)` with `i` in `rows` and `j` in `cols`.
    pub fn block_max(&self, rows: &[usize], cols: &[usize]) -> f64 {
        let mut worst: f64 = 0.0;
        for &i in rows {
            for &j in cols {
                worst = worst.max(self.get(i, j).norm());
            }
        }
        worst
    }

    /// Gauss-Jordan inverse with partial pivoting.
    pub fn inverse(&self) -> Result<Self, MatError> {
        let n = self.dim;
        let scale = self.max_abs();
        if scale == 0.0 {
            return Err(MatError::Singular);
        }
        let mut a = self.data.clone();
        let mut inv = Self::identity(n).data;
        for col in 0..n {
            let piv = (col..n)
                .max_by(|&x, &y| a[x * n + col].norm().total_cmp(&a[y * n + col].norm()))
                .unwrap_or(col);
            if a[piv * n + col].norm() <= 1e-14 * scale {
                return Err(MatError::Singular);
            }
            if piv != col {
                for j in 0..n {
                    a.swap(piv * n + j, col * n + j);
                    inv.swap(piv * n + j, col * n + j);
                }
            }
            let d = a[col * n + col].inv();
            for j in 0..n {
                a[col * n + j] *= d;
                inv[col * n + j] *= d;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a[r * n + col];
                if f.re == 0.0 && f.im == 0.0 {
                    continue;
                }
                for j in 0..n {
                    let (x, y) = (a[col * n + j], inv[col * n + j]);
                    a[r * n + j] -= f * x;
                    inv[r * n + j] -= f * y;
                }
            }
        }
        Ok(Self { dim: n, data: inv })
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{})", self.dim, self.dim)?;
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim)
                .map(|j| {
                    let z = self.get(i, j);
                    format!("{:+.4}{:+.4}i", z.re, z.im)
                })
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.check_dim(rhs);
        ComplexMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.check_dim(rhs);
        ComplexMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.matmul(rhs)
    }
}

impl Mul<C64> for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: C64) -> ComplexMatrix {
        self.scale(rhs)
    }
}

impl Mul<f64> for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: f64) -> ComplexMatrix {
        self.scale_re(rhs)
    }
}

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn neg(self) -> ComplexMatrix {
        self.scale_re(-1.0)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for ComplexMatrix {
            type Output = ComplexMatrix;
            fn $m(self, rhs: ComplexMatrix) -> ComplexMatrix {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&ComplexMatrix> for ComplexMatrix {
            type Output = ComplexMatrix;
            fn $m(self, rhs: &ComplexMatrix) -> ComplexMatrix {
                (&self).$m(rhs)
            }
        }
        impl $tr<ComplexMatrix> for &ComplexMatrix {
            type Output = ComplexMatrix;
            fn $m(self, rhs: ComplexMatrix) -> ComplexMatrix {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Mul<C64> for ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: C64) -> ComplexMatrix {
        self.scale(rhs)
    }
}

impl Mul<f64> for ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: f64) -> ComplexMatrix {
        self.scale_re(rhs)
    }
}

impl Neg for ComplexMatrix {
    type Output = ComplexMatrix;
    fn neg(self) -> ComplexMatrix {
        self.scale_re(-1.0)
    }
}

impl AddAssign<&ComplexMatrix> for ComplexMatrix {
    fn add_assign(&mut self, rhs: &ComplexMatrix) {
        self.check_dim(rhs);
        for (a, b) in self.data.iter_mut().zip(&rhs.data) {
            *a += b;
        }
    }
}

impl AddAssign<ComplexMatrix> for ComplexMatrix {
    fn add_assign(&mut self, rhs: ComplexMatrix) {
        *self += &rhs;
    }
}

impl SubAssign<&ComplexMatrix> for ComplexMatrix {
    fn sub_assign(&mut self, rhs: &ComplexMatrix) {
        self.check_dim(rhs);
        for (a, b) in self.data.iter_mut().zip(&rhs.data) {
            *a -= b;
        }
    }
}

impl SubAssign<ComplexMatrix> for ComplexMatrix {
    fn sub_assign(&mut self, rhs: ComplexMatrix) {
        *self -= &rhs;
    }
}

fn same_dims(ms: &[&ComplexMatrix]) -> Result<(), MatError> {
    let d = ms[0].dim;
    match ms.iter().find(|m| m.dim != d) {
        Some(m) => Err(MatError::DimensionMismatch {
            left: d,
            right: m.dim,
        }),
        None => Ok(()),
    }
}

/// Kronecker product, first factor outer.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    a.kron(b)
}

pub fn commutator(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix, MatError> {
    same_dims(&[a, b])?;
    Ok(a.comm(b))
}

pub fn anticommutator(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix, MatError> {
    same_dims(&[a, b])?;
    Ok(a.anticomm(b))
}

/// Symmetric triple sum: all six orderings of `x1 x2 x3`.
pub fn sym3(
    x1: &ComplexMatrix,
    x2: &ComplexMatrix,
    x3: &ComplexMatrix,
) -> Result<ComplexMatrix, MatError> {
    same_dims(&[x1, x2, x3])?;
    // x1{x2,x3} + x2{x1,x3} + x3{x1,x2}
    let mut out = x1.matmul(&x2.anticomm(x3));
    out += x2.matmul(&x1.anticomm(x3));
    out += x3.matmul(&x1.anticomm(x2));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{c, re};

    fn pauli() -> [ComplexMatrix; 3] {
        let z = re(0.0);
        [
            ComplexMatrix::from_vec(2, vec![z, re(1.0), re(1.0), z]).unwrap(),
            ComplexMatrix::from_vec(2, vec![z, c(0.0, -1.0), c(0.0, 1.0), z]).unwrap(),
            ComplexMatrix::real_diagonal(&[1.0, -1.0]),
        ]
    }

    #[test]
    fn kron_index_convention() {
        let [_, _, s3] = pauli();
        let k = kron(&s3, &ComplexMatrix::identity(2));
        assert_eq!(k, ComplexMatrix::real_diagonal(&[1.0, 1.0, -1.0, -1.0]));
        let i4 = kron(&ComplexMatrix::identity(2), &ComplexMatrix::identity(2));
        assert_eq!(i4, ComplexMatrix::identity(4));
    }

    #[test]
    fn pauli_algebra() {
        let [s1, s2, s3] = pauli();
        let lhs = commutator(&s1.scale_re(0.5), &s2.scale_re(0.5)).unwrap();
        assert!(lhs.dist(&s3.scale(c(0.0, 0.5))) < 1e-15);
        assert!(anticommutator(&s1, &s2).unwrap().is_zero(1e-15));
        assert!(commutator(&s3, &s3).unwrap().is_zero(1e-15));
    }

    #[test]
    fn sym3_against_explicit_orderings() {
        let [s1, s2, s3] = pauli();
        let mut want = ComplexMatrix::zeros(2);
        for (a, b, cc) in [
            (&s1, &s2, &s3),
            (&s1, &s3, &s2),
            (&s2, &s1, &s3),
            (&s2, &s3, &s1),
            (&s3, &s1, &s2),
            (&s3, &s2, &s1),
        ] {
            want += a.matmul(b).matmul(cc);
        }
        assert!(sym3(&s1, &s2, &s3).unwrap().dist(&want) < 1e-15);
        let id = ComplexMatrix::identity(3);
        assert_eq!(sym3(&id, &id, &id).unwrap(), id.scale_re(6.0));
        assert!(sym3(&s1, &s1, &s1).unwrap().dist(&s1.powi(3).scale_re(6.0)) < 1e-15);
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = ComplexMatrix::identity(2);
        let b = ComplexMatrix::identity(3);
        assert!(matches!(
            commutator(&a, &b),
            Err(MatError::DimensionMismatch { left: 2, right: 3 })
        ));
        assert!(sym3(&a, &a, &b).is_err());
    }

    #[test]
    fn shape_checks() {
        assert!(matches!(
            ComplexMatrix::from_vec(2, vec![re(1.0); 3]),
            Err(MatError::BadShape { .. })
        ));
        assert!(matches!(
            ComplexMatrix::from_vec(1, vec![re(f64::NAN)]),
            Err(MatError::NonFinite { row: 0, col: 0 })
        ));
    }

    #[test]
    fn inverse_roundtrip() {
        let a = ComplexMatrix::from_fn(4, |i, j| {
            c((i * 3 + j) as f64 % 5.0 + 0.5, (i as f64 - j as f64) * 0.3)
        }) + ComplexMatrix::identity(4).scale_re(4.0);
        let inv = a.inverse().unwrap();
        assert!(a.matmul(&inv).dist(&ComplexMatrix::identity(4)) < 1e-12);
        assert_eq!(ComplexMatrix::zeros(3).inverse(), Err(MatError::Singular));
    }
}
