use liegen::{AlgebraLabel, Su3Ladders};
use matcore::{c, kron, re, ComplexMatrix, C64};

use crate::{RealizationParams, YangError, YangianRealization};

fn check_compatible(r1: &YangianRealization, r2: &YangianRealization) -> Result<(), YangError> {
    let (l1, l2) = (r1.level0().label(), r2.level0().label());
    if !l1.same_algebra(&l2) {
        return Err(YangError::AlgebraMismatch {
            left: l1.to_string(),
            right: l2.to_string(),
        });
    }
    let (s1, s2) = (r1.level0().structure(), r2.level0().structure());
    let n = s1.n();
    let mut worst: f64 = 0.0;
    for a in 0..n {
        for b in 0..n {
            for k in 0..n {
                worst = worst.max((s1.get(a, b, k) - s2.get(a, b, k)).norm());
            }
        }
    }
    if worst > 1e-12 {
        return Err(YangError::StructureMismatch(worst));
    }
    Ok(())
}

/// `Δ(I) = I⊗1 + 1⊗I`, `Δ(J_λ) = J_λ⊗1 + 1⊗J_λ + ½ C_λμν I_μ⊗I_ν`.
///
/// The params of the result concatenate `mu`, keep the first coupling and
/// put `W = +1` between the two blocks; they are descriptive only.
pub fn coproduct_extend(
    r1: &YangianRealization,
    r2: &YangianRealization,
) -> Result<YangianRealization, YangError> {
    check_compatible(r1, r2)?;
    let (d1, d2) = (r1.dim(), r2.dim());
    let (id1, id2) = (ComplexMatrix::identity(d1), ComplexMatrix::identity(d2));
    let i1 = r1.level0().generators();
    let i2 = r2.level0().generators();
    let st = r1.level0().structure();
    let n = i1.len();
    let level0 = r1.level0().with_matrices(
        (0..n)
            .map(|k| &kron(&i1[k], &id2) + &kron(&id1, &i2[k]))
            .collect(),
    );
    let mut level1 = Vec::with_capacity(n);
    for l in 0..n {
        let mut j = &kron(&r1.level1()[l], &id2) + &kron(&id1, &r2.level1()[l]);
        for m in 0..n {
            for nu in 0..n {
                let z = st.get(l, m, nu);
                if z != re(0.0) {
                    j += kron(&i1[m], &i2[nu]).scale(z * 0.5);
                }
            }
        }
        level1.push(j);
    }
    let (n1, n2) = (r1.space().n_sites(), r2.space().n_sites());
    let (w1, w2) = (&r1.params().w, &r2.params().w);
    let w = ComplexMatrix::from_fn(n1 + n2, |i, j| match (i < n1, j < n1) {
        (true, true) => w1.get(i, j),
        (false, false) => w2.get(i - n1, j - n1),
        (true, false) => re(1.0),
        (false, true) => re(-1.0),
    });
    let mu = r1
        .params()
        .mu
        .iter()
        .chain(&r2.params().mu)
        .copied()
        .collect();
    YangianRealization::from_parts(
        r1.space().join(r2.space()),
        level0,
        level1,
        RealizationParams {
            mu,
            coupling: r1.params().coupling,
            w,
        },
    )
}

/// Coefficients `(a, b)` of the su(3) co-product cross term of the raising
/// and lowering isospin combinations:
/// `ΔJ(I±) − J(I±)⊗1 − 1⊗J(I±) = a (I3⊗I± − I±⊗I3) + b (V∓⊗U∓ − U∓⊗V∓)`
/// where `J(I±) = J1 ± iJ2` and `I3` is the third component itself.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CoproductFit {
    pub plus: [C64; 2],
    pub minus: [C64; 2],
    pub residual_plus: f64,
    pub residual_minus: f64,
}

fn fit2(target: &ComplexMatrix, a: &ComplexMatrix, b: &ComplexMatrix) -> ([C64; 2], f64) {
    let (aa, ab, bb) = (a.hs_inner(a), a.hs_inner(b), b.hs_inner(b));
    let (ta, tb) = (a.hs_inner(target), b.hs_inner(target));
    let det = aa * bb - ab * ab.conj();
    let x = (ta * bb - ab * tb) / det;
    let y = (aa * tb - ab.conj() * ta) / det;
    let res = (target - &(&a.scale(x) + &b.scale(y))).max_abs();
    ([x, y], res)
}

pub fn su3_coproduct_fit(
    r1: &YangianRealization,
    r2: &YangianRealization,
) -> Result<CoproductFit, YangError> {
    if r1.level0().label() != AlgebraLabel::Su3 {
        return Err(YangError::UnsupportedAlgebra(
            r1.level0().label().to_string(),
        ));
    }
    let joint = coproduct_extend(r1, r2)?;
    let (id1, id2) = (
        ComplexMatrix::identity(r1.dim()),
        ComplexMatrix::identity(r2.dim()),
    );
    let i = c(0.0, 1.0);
    let combo = |x: &[ComplexMatrix], s: f64| &x[0] + &x[1].scale(i * s);
    let l1 = Su3Ladders::from_components(r1.level0().generators());
    let l2 = Su3Ladders::from_components(r2.level0().generators());
    let mut out = [([re(0.0); 2], 0.0); 2];
    for (slot, s) in [(0, 1.0), (1, -1.0)] {
        let local = &kron(&combo(r1.level1(), s), &id2) + &kron(&id1, &combo(r2.level1(), s));
        let extra = &combo(joint.level1(), s) - &local;
        let (ip1, ip2, u1, u2, v1, v2) = if s > 0.0 {
            (
                &l1.i_plus,
                &l2.i_plus,
                &l1.u_minus,
                &l2.u_minus,
                &l1.v_minus,
                &l2.v_minus,
            )
        } else {
            (
                &l1.i_minus,
                &l2.i_minus,
                &l1.u_plus,
                &l2.u_plus,
                &l1.v_plus,
                &l2.v_plus,
            )
        };
        let a = &kron(&l1.i3, ip2) - &kron(ip1, &l2.i3);
        let b = &kron(v1, u2) - &kron(u1, v2);
        out[slot] = fit2(&extra, &a, &b);
    }
    Ok(CoproductFit {
        plus: out[0].0,
        minus: out[1].0,
        residual_plus: out[0].1,
        residual_minus: out[1].1,
    })
}
