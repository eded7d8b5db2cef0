use std::f64::consts::PI;

use matcore::{c, re, ComplexMatrix};

use crate::YangError;

/// Antisymmetric site weights `W_ij` for the bilocal part of a realization.
#[derive(Clone, Debug)]
pub enum WScheme {
    /// `W_ij = sign` for `i < j` and `−sign` for `i > j`.
    Step {
        sign: f64,
    },
    /// `W_jk = i·cot((j − k)π/N)`.
    HaldaneShastry,
    Explicit(ComplexMatrix),
}

impl WScheme {
    /// Upper step, `W_ij = +1` for `i < j`: the su(2) default.
    pub fn su2_default() -> Self {
        WScheme::Step { sign: 1.0 }
    }

    /// Lower step, `W_ij = +1` for `i > j`: the su(3) default.
    pub fn su3_default() -> Self {
        WScheme::Step { sign: -1.0 }
    }

    /// The `n × n` weight matrix. Explicit matrices must be exactly
    /// antisymmetric.
    pub fn matrix(&self, n: usize) -> Result<ComplexMatrix, YangError> {
        match self {
            WScheme::Step { sign } => Ok(ComplexMatrix::from_fn(n, |i, j| {
                re(match i.cmp(&j) {
                    std::cmp::Ordering::Less => *sign,
                    std::cmp::Ordering::Greater => -*sign,
                    std::cmp::Ordering::Equal => 0.0,
                })
            })),
            WScheme::HaldaneShastry => Ok(ComplexMatrix::from_fn(n, |j, k| {
                if j == k {
                    re(0.0)
                } else {
                    let x = (j as f64 - k as f64) * PI / n as f64;
                    c(0.0, x.cos() / x.sin())
                }
            })),
            WScheme::Explicit(m) => {
                if m.dim() != n {
                    return Err(YangError::WShape {
                        expected: n,
                        found: m.dim(),
                    });
                }
                for i in 0..n {
                    for j in i..n {
                        if m.get(i, j) != -m.get(j, i) {
                            return Err(YangError::NotAntisymmetric { i, j });
                        }
                    }
                }
                Ok(m.clone())
            }
        }
    }
}
