//! Dense complex linear algebra for small multi-site Hilbert spaces.
//!
//! Everything is square and row-major. Kronecker products put the first
//! factor on the slow (outer) index, so `kron(a, b)[(i1,i2),(j1,j2)]` is
//! `a[i1,j1] * b[i2,j2]` with the flattened index `i1 * b.dim() + i2`.

mod eigen;
mod error;
mod matrix;
mod poly;
mod tensor;
pub mod vector;

pub use eigen::{hermitian_eigen, EigenDecomposition, MAX_SWEEPS};
pub use error::MatError;
pub use matrix::{anticommutator, commutator, kron, sym3, ComplexMatrix};
pub use poly::{char_poly_coeffs, poly_eval, poly_roots};
pub use tensor::{embed, TensorSpace};

pub use num_complex::Complex64 as C64;

/// Default absolute tolerance for max-norm residuals.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Shorthand for a complex number.
#[inline]
pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Real number as a complex scalar.
#[inline]
pub fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

/// The imaginary unit.
pub const I: C64 = C64::new(0.0, 1.0);
