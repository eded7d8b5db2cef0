use liegen::{a_n_op, permutation_op};
use matcore::{kron, re, ComplexMatrix, TensorSpace, C64};

use crate::{Monodromy, RttError};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RFamily {
    /// `Ř(u) = uP + I` on `d ⊗ d`.
    RationalSun { d: usize },
    /// `Ř(u) = u²P + uξ(A − κP − I) + κξ²I` with `κ = (n − 2)/2`.
    RationalSon { n: usize, xi: f64 },
    /// `Ř(u) = u(u − κa)P + αuA + (−uα + κα²)I`. Equal to the previous
    /// family with `ξ = α` when `a = α`; other values of `a` break YBE.
    SonZz { n: usize, alpha: f64, a: f64 },
}

#[derive(Clone, Debug)]
pub struct RMatrixSpec {
    family: RFamily,
    p: ComplexMatrix,
    a: Option<ComplexMatrix>,
    id: ComplexMatrix,
}

fn kappa(n: usize) -> f64 {
    (n as f64 - 2.0) / 2.0
}

impl RMatrixSpec {
    pub fn new(family: RFamily) -> Result<Self, RttError> {
        let d = match family {
            RFamily::RationalSun { d } => {
                if d < 2 {
                    return Err(RttError::UnsupportedAux(d));
                }
                d
            }
            RFamily::RationalSon { n, .. } | RFamily::SonZz { n, .. } => n,
        };
        let a = match family {
            RFamily::RationalSun { .. } => None,
            _ => Some(a_n_op(d)?),
        };
        Ok(Self {
            family,
            p: permutation_op(d),
            a,
            id: ComplexMatrix::identity(d * d),
        })
    }

    pub fn rational_sun(d: usize) -> Result<Self, RttError> {
        Self::new(RFamily::RationalSun { d })
    }

    pub fn rational_son(n: usize, xi: f64) -> Result<Self, RttError> {
        Self::new(RFamily::RationalSon { n, xi })
    }

    pub fn son_zz(n: usize, alpha: f64, a: f64) -> Result<Self, RttError> {
        Self::new(RFamily::SonZz { n, alpha, a })
    }

    pub fn family(&self) -> RFamily {
        self.family
    }

    /// Local dimension `d` (Ř acts on `d ⊗ d`).
    pub fn dim(&self) -> usize {
        self.p.dim().isqrt()
    }

    /// `Ř(u)` as a combination `x·P + y·A + z·I`, returned as `(x, y, z)`.
    fn coefficients(&self, u: C64) -> (C64, C64, C64) {
        match self.family {
            RFamily::RationalSun { .. } => (u, re(0.0), re(1.0)),
            RFamily::RationalSon { n, xi } => {
                let k = kappa(n);
                (u * u - u * xi * k, u * xi, -u * xi + k * xi * xi)
            }
            RFamily::SonZz { n, alpha, a } => {
                let k = kappa(n);
                (u * (u - k * a), u * alpha, -u * alpha + k * alpha * alpha)
            }
        }
    }

    /// `dŘ/du` in the same `(P, A, I)` coefficients.
    fn derivative_coefficients(&self, u: C64) -> (C64, C64, C64) {
        match self.family {
            RFamily::RationalSun { .. } => (re(1.0), re(0.0), re(0.0)),
            RFamily::RationalSon { n, xi } => (2.0 * u - xi * kappa(n), re(xi), re(-xi)),
            RFamily::SonZz { n, alpha, a } => (2.0 * u - kappa(n) * a, re(alpha), re(-alpha)),
        }
    }

    fn assemble(&self, (x, y, z): (C64, C64, C64)) -> ComplexMatrix {
        let mut out = &self.p.scale(x) + &self.id.scale(z);
        if let Some(a) = &self.a {
            out += a.scale(y);
        }
        out
    }

    /// Braid-form `Ř(u)` on `d ⊗ d`.
    pub fn evaluate(&self, u: C64) -> ComplexMatrix {
        self.assemble(self.coefficients(u))
    }

    /// Analytic `dŘ/du`.
    pub fn derivative(&self, u: C64) -> ComplexMatrix {
        self.assemble(self.derivative_coefficients(u))
    }

    /// `R(u) = Ř(u) P`.
    pub fn r_form(&self, u: C64) -> ComplexMatrix {
        self.evaluate(u).matmul(&self.p)
    }

    pub fn permutation(&self) -> &ComplexMatrix {
        &self.p
    }

    pub fn a_op(&self) -> Option<&ComplexMatrix> {
        self.a.as_ref()
    }
}

/// `‖Ř₁₂(u−v) Ř₂₃(u) Ř₁₂(v) − Ř₂₃(v) Ř₁₂(u) Ř₂₃(u−v)‖_max`.
pub fn ybe_residual(spec: &RMatrixSpec, u: C64, v: C64) -> f64 {
    let id = ComplexMatrix::identity(spec.dim());
    let r12 = |x: C64| kron(&spec.evaluate(x), &id);
    let r23 = |x: C64| kron(&id, &spec.evaluate(x));
    let lhs = r12(u - v).matmul(&r23(u)).matmul(&r12(v));
    let rhs = r23(v).matmul(&r12(u)).matmul(&r23(u - v));
    lhs.dist(&rhs)
}

/// Non-braid form: `R₁₂(u−v) R₁₃(u) R₂₃(v) = R₂₃(v) R₁₃(u) R₁₂(u−v)`.
pub fn ybe_r_form_residual(spec: &RMatrixSpec, u: C64, v: C64) -> f64 {
    let d = spec.dim();
    let space = TensorSpace::uniform(d, 3).expect("d >= 2");
    let at =
        |x: C64, i: usize, j: usize| space.embed_pair(&spec.r_form(x), i, j).expect("valid pair");
    let lhs = at(u - v, 0, 1).matmul(&at(u, 0, 2)).matmul(&at(v, 1, 2));
    let rhs = at(v, 1, 2).matmul(&at(u, 0, 2)).matmul(&at(u - v, 0, 1));
    lhs.dist(&rhs)
}

/// `R(u) = u(u − κα)I + (κα² − uα)P + uαA`, the product `Ř P` for
/// [`RFamily::RationalSon`] with `ξ = α`.
pub fn son_r_closed_form(n: usize, alpha: f64, u: C64) -> Result<ComplexMatrix, RttError> {
    let k = kappa(n);
    let (p, a) = (permutation_op(n), a_n_op(n)?);
    let id = ComplexMatrix::identity(n * n);
    Ok(
        &(&id.scale(u * (u - k * alpha)) + &p.scale(k * alpha * alpha - u * alpha))
            + &a.scale(u * alpha),
    )
}

/// `u(u − 2α)I + u(2u − α)P + 2uαA`, a rearrangement that is not `Ř P`;
/// kept for comparison only.
pub fn son_r_variant(n: usize, alpha: f64, u: C64) -> Result<ComplexMatrix, RttError> {
    let (p, a) = (permutation_op(n), a_n_op(n)?);
    let id = ComplexMatrix::identity(n * n);
    Ok(
        &(&id.scale(u * (u - 2.0 * alpha)) + &p.scale(u * (2.0 * u - alpha)))
            + &a.scale(2.0 * u * alpha),
    )
}

/// The so(5) Ř-matrix assembled entry by entry on labels (−2, …, 2):
/// `u² δ_ab δ_bc + u(δ_{a,−b} δ_{c,−d} − δ_ac δ_bd − (3/2) δ_ad δ_bc)ξ + (3/2) δ_ac δ_bd ξ²`
/// with row `(a, b)` and column `(c, d)`. The quadratic term is taken as
/// written, so this differs from the operator form on the `u²` part.
pub fn son5_elementwise(u: C64, xi: f64) -> ComplexMatrix {
    let lab = [-2i32, -1, 0, 1, 2];
    let dl = |x: i32, y: i32| if x == y { 1.0 } else { 0.0 };
    ComplexMatrix::from_fn(25, |row, col| {
        let (a, b) = (lab[row / 5], lab[row % 5]);
        let (c, d) = (lab[col / 5], lab[col % 5]);
        u * u * dl(a, b) * dl(b, c)
            + u * xi * (dl(a, -b) * dl(c, -d) - dl(a, c) * dl(b, d) - 1.5 * dl(a, d) * dl(b, c))
            + re(1.5 * dl(a, c) * dl(b, d) * xi * xi)
    })
}

/// `‖Ř(u−v) T₁(u) T₂(v) − T₁(v) T₂(u) Ř(u−v)‖_max` on aux ⊗ aux ⊗ quantum.
pub fn rtt_residual(spec: &RMatrixSpec, mono: &Monodromy, u: C64, v: C64) -> Result<f64, RttError> {
    let d = mono.aux_dim();
    if spec.dim() != d {
        return Err(RttError::DimMismatch {
            mono: d,
            r: spec.dim(),
        });
    }
    let q = mono.quantum_dim();
    let r = kron(&spec.evaluate(u - v), &ComplexMatrix::identity(q));
    let (t1u, t2u) = mono.lift(u);
    let (t1v, t2v) = mono.lift(v);
    let lhs = r.matmul(&t1u).matmul(&t2v);
    let rhs = t1v.matmul(&t2u).matmul(&r);
    Ok(lhs.dist(&rhs))
}
