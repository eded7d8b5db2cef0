use liegen::{AlgebraLabel, StructureTensor};
use matcore::{re, ComplexMatrix, C64};

use crate::{VerificationReport, YangianRealization};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Level1Kind {
    /// su(2): the cubic constraint degenerates and the quartic form is used.
    Sl2,
    General,
}

impl Level1Kind {
    pub(crate) fn for_label(label: AlgebraLabel) -> Self {
        match label {
            AlgebraLabel::Su2 { .. } => Level1Kind::Sl2,
            _ => Level1Kind::General,
        }
    }
}

fn sym3(a: &ComplexMatrix, b: &ComplexMatrix, c: &ComplexMatrix) -> ComplexMatrix {
    let mut out = a.matmul(&b.anticomm(c));
    out += b.matmul(&a.anticomm(c));
    out += c.matmul(&a.anticomm(b));
    out
}

/// `a_λμν^{αβγ} = (1/24) C_λαi C_μβj C_νγk C_ijk`.
pub fn a_tensor(st: &StructureTensor, lmn: [usize; 3], abg: [usize; 3]) -> C64 {
    let n = st.n();
    let mut acc = re(0.0);
    for i in 0..n {
        let x = st.get(lmn[0], abg[0], i);
        if x == re(0.0) {
            continue;
        }
        for j in 0..n {
            let y = st.get(lmn[1], abg[1], j);
            if y == re(0.0) {
                continue;
            }
            for k in 0..n {
                acc += x * y * st.get(lmn[2], abg[2], k) * st.get(i, j, k);
            }
        }
    }
    acc / 24.0
}

/// `kl[λ][σ]` lists `(α, C_λασ)`, so that `Σ_α C_λασ I_α` is a short sum.
fn contraction_lists(st: &StructureTensor) -> Vec<Vec<Vec<(usize, C64)>>> {
    let n = st.n();
    let mut kl = vec![vec![Vec::new(); n]; n];
    for (l, a, s, z) in st.nonzeros(0.0) {
        kl[l][s].push((a, z));
    }
    kl
}

fn sorted3(mut k: [usize; 3]) -> [usize; 3] {
    k.sort_unstable();
    k
}

/// Feed `(lhs, rhs)` of every instance of the cubic constraint to `f`.
///
/// General: `[J_λ,[J_μ,I_ν]] − [I_λ,[J_μ,J_ν]]` against
/// `a_λμν^{αβγ} {I_α, I_β, I_γ}` over all ordered `(λ, μ, ν)`.
///
/// su(2): `[[J_λ,J_μ],[I_σ,J_τ]] + [[J_σ,J_τ],[I_λ,J_μ]]` against
/// `(a_λμν^{αβγ} C_στν + a_στν^{αβγ} C_λμν) {I_α, I_β, J_γ}` over all
/// ordered `(λ, μ, σ, τ)`.
pub(crate) fn serre_pairs(
    real: &YangianRealization,
    kind: Level1Kind,
    mut f: impl FnMut(ComplexMatrix, ComplexMatrix),
) {
    let st = real.level0().structure();
    let i = real.level0().generators();
    let j = real.level1();
    let n = i.len();
    let dim = real.dim();
    let jj: Vec<ComplexMatrix> = (0..n * n).map(|k| j[k / n].comm(&j[k % n])).collect();
    match kind {
        Level1Kind::General => {
            let ji: Vec<ComplexMatrix> = (0..n * n).map(|k| j[k / n].comm(&i[k % n])).collect();
            let kl = contraction_lists(st);
            let nz = st.nonzeros(0.0);
            let mut cache: Vec<Option<ComplexMatrix>> = vec![None; n * n * n];
            let mut coef: Vec<C64> = vec![re(0.0); n * n * n];
            let mut touched: Vec<usize> = Vec::new();
            for l in 0..n {
                for m in 0..n {
                    for nu in 0..n {
                        let lhs = &j[l].comm(&ji[m * n + nu]) - &i[l].comm(&jj[m * n + nu]);
                        for &(s, t, r, z) in &nz {
                            for &(a, za) in &kl[l][s] {
                                for &(b, zb) in &kl[m][t] {
                                    for &(g, zg) in &kl[nu][r] {
                                        let [x, y, w] = sorted3([a, b, g]);
                                        let key = (x * n + y) * n + w;
                                        if coef[key] == re(0.0) {
                                            touched.push(key);
                                        }
                                        coef[key] += z * za * zb * zg / 24.0;
                                    }
                                }
                            }
                        }
                        let mut rhs = ComplexMatrix::zeros(dim);
                        touched.sort_unstable();
                        touched.dedup();
                        for &key in &touched {
                            let z = std::mem::replace(&mut coef[key], re(0.0));
                            if z.norm() < 1e-15 {
                                continue;
                            }
                            let s3 = cache[key].get_or_insert_with(|| {
                                sym3(&i[key / (n * n)], &i[(key / n) % n], &i[key % n])
                            });
                            rhs += s3.scale(z);
                        }
                        touched.clear();
                        f(lhs, rhs);
                    }
                }
            }
        }
        Level1Kind::Sl2 => {
            let ij: Vec<ComplexMatrix> = (0..n * n).map(|k| i[k / n].comm(&j[k % n])).collect();
            let s3: Vec<ComplexMatrix> = (0..n * n * n)
                .map(|k| sym3(&i[k / (n * n)], &i[(k / n) % n], &j[k % n]))
                .collect();
            let mut a = vec![re(0.0); n.pow(6)];
            for (idx, slot) in a.iter_mut().enumerate() {
                let d = |p: u32| (idx / n.pow(p)) % n;
                *slot = a_tensor(st, [d(5), d(4), d(3)], [d(2), d(1), d(0)]);
            }
            let at = |x: usize, y: usize, z: usize, abg: usize| {
                a[((x * n + y) * n + z) * n * n * n + abg]
            };
            for l in 0..n {
                for m in 0..n {
                    for s in 0..n {
                        for t in 0..n {
                            let lhs = &jj[l * n + m].comm(&ij[s * n + t])
                                + &jj[s * n + t].comm(&ij[l * n + m]);
                            let mut rhs = ComplexMatrix::zeros(dim);
                            for (abg, term) in s3.iter().enumerate() {
                                let mut z = re(0.0);
                                for nu in 0..n {
                                    z += at(l, m, nu, abg) * st.get(s, t, nu)
                                        + at(s, t, nu, abg) * st.get(l, m, nu);
                                }
                                if z.norm() > 1e-15 {
                                    rhs += term.scale(z);
                                }
                            }
                            f(lhs, rhs);
                        }
                    }
                }
            }
        }
    }
}

fn worst_and_scale(real: &YangianRealization, kind: Level1Kind) -> (f64, f64) {
    let mut worst: f64 = 0.0;
    let mut scale: f64 = 0.0;
    serre_pairs(real, kind, |lhs, rhs| {
        worst = worst.max(lhs.dist(&rhs));
        scale = scale.max(lhs.max_abs());
    });
    (worst, scale)
}

/// Max-norm residual of the general cubic constraint.
pub fn serre_general_residual(real: &YangianRealization) -> f64 {
    worst_and_scale(real, Level1Kind::General).0
}

/// Max-norm residual of the su(2) quartic constraint.
pub fn serre_sl2_residual(real: &YangianRealization) -> f64 {
    worst_and_scale(real, Level1Kind::Sl2).0
}

/// `max_{λ,μ} ‖[I_λ, J_μ] − C_λμν J_ν‖`.
fn linearity_residual(real: &YangianRealization) -> f64 {
    let st = real.level0().structure();
    let i = real.level0().generators();
    let j = real.level1();
    let mut worst: f64 = 0.0;
    for l in 0..i.len() {
        for m in 0..i.len() {
            let mut d = i[l].comm(&j[m]);
            for (k, jk) in j.iter().enumerate() {
                let z = st.get(l, m, k);
                if z != re(0.0) {
                    d -= jk.scale(z);
                }
            }
            worst = worst.max(d.max_abs());
        }
    }
    worst
}

/// Closure of the level-0 generators, linearity of the level-1 generators
/// and the cubic constraint (the su(2) quartic form for su(2) labels),
/// every ordered index combination included.
pub fn verify_defining(real: &YangianRealization, tol: f64) -> VerificationReport {
    let label = real.level0().label();
    let mut rep = VerificationReport::new(format!("defining relations, {label}"), tol);
    rep.check("closure", real.level0().closure_residual());
    rep.check("linearity", linearity_residual(real));
    let kind = Level1Kind::for_label(label);
    let (worst, scale) = worst_and_scale(real, kind);
    let key = match kind {
        Level1Kind::Sl2 => "serre (su2 form)",
        Level1Kind::General => "serre",
    };
    rep.check(key, worst);
    rep.note("serre lhs max", scale);
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use liegen::spin_matrices;

    #[test]
    fn a_tensor_symmetry_for_su2() {
        // C = iε: a is built from four ε factors, so it is real
        let s = spin_matrices(1).unwrap();
        let st = s.structure();
        let mut any = false;
        for l in 0..3 {
            for m in 0..3 {
                for nu in 0..3 {
                    for al in 0..3 {
                        for be in 0..3 {
                            for ga in 0..3 {
                                let z = a_tensor(st, [l, m, nu], [al, be, ga]);
                                assert!(z.im.abs() < 1e-15);
                                any |= z.norm() > 0.0;
                            }
                        }
                    }
                }
            }
        }
        assert!(any);
    }
}
