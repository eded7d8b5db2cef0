use liegen::{
    quark_ladders, so_n_generators, spin_matrices, su3_generators, GeneratorSet, Su3Ladders,
};
use matcore::{re, ComplexMatrix, TensorSpace, C64};

use crate::serre::{serre_pairs, Level1Kind};
use crate::{RealizationParams, VerificationReport, WScheme, YangError, YangianRealization};

/// Prefactor of the bilocal so(n) level-1 generators.
pub const BILOCAL_PREFACTOR: C64 = C64::new(0.0, 0.5);

fn check_mu(mu: &[f64], sites: usize) -> Result<(), YangError> {
    if mu.len() != sites {
        return Err(YangError::MuCount {
            mu: mu.len(),
            sites,
        });
    }
    Ok(())
}

/// Per-site embedded copies of every generator: `out[site][k]`.
fn per_site(
    base: &GeneratorSet,
    space: &TensorSpace,
) -> Result<Vec<Vec<ComplexMatrix>>, YangError> {
    (0..space.n_sites())
        .map(|s| base.embedded(s, space).map_err(YangError::from))
        .collect()
}

fn sums(per: &[Vec<ComplexMatrix>], dim: usize, n: usize) -> Vec<ComplexMatrix> {
    let mut out = vec![ComplexMatrix::zeros(dim); n];
    for site in per {
        for (o, g) in out.iter_mut().zip(site) {
            *o += g;
        }
    }
    out
}

/// su(2) realization on sites of spin `two_s/2`:
/// `I = Σ_i S_i`, `J = Σ_i μ_i S_i + coupling·Σ_{i<j} W_ij S_i × S_j`.
///
/// Beyond two sites the cubic constraint holds only for
/// `coupling·W` of unit step size with `coupling = ±i/2`.
pub fn realize_su2(
    spins: &[usize],
    mu: &[f64],
    w: &WScheme,
    coupling: C64,
) -> Result<YangianRealization, YangError> {
    let n = spins.len();
    check_mu(mu, n)?;
    if matches!(w, WScheme::HaldaneShastry) {
        if let Some((site, &two_s)) = spins.iter().enumerate().find(|(_, &t)| t != 1) {
            return Err(YangError::HsSpin { site, two_s });
        }
    }
    let wm = w.matrix(n)?;
    let space = TensorSpace::new(spins.iter().map(|t| t + 1).collect())?;
    let dim = space.total_dim();
    let mut per = Vec::with_capacity(n);
    for (site, &two_s) in spins.iter().enumerate() {
        let s = spin_matrices(two_s)?;
        per.push(
            s.generators()
                .iter()
                .map(|g| space.embed(g, site))
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    let level0 = spin_matrices(spins[0])?.with_matrices(sums(&per, dim, 3));

    let mut level1 = vec![ComplexMatrix::zeros(dim); 3];
    for (site, s) in per.iter().enumerate() {
        for nu in 0..3 {
            level1[nu] += s[nu].scale_re(mu[site]);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let wij = wm.get(i, j) * coupling;
            if wij == re(0.0) {
                continue;
            }
            for (nu, out) in level1.iter_mut().enumerate() {
                for a in 0..3 {
                    for b in 0..3 {
                        let e = liegen::levi_civita(nu, a, b);
                        if e != 0.0 {
                            *out += per[i][a].matmul(&per[j][b]).scale(wij * e);
                        }
                    }
                }
            }
        }
    }
    YangianRealization::from_parts(
        space,
        level0,
        level1,
        RealizationParams {
            mu: mu.to_vec(),
            coupling,
            w: wm,
        },
    )
}

/// `W_ij W_jk + W_jk W_ki + W_ki W_ij` for distinct sites.
pub(crate) fn triple_delta(w: &ComplexMatrix, i: usize, j: usize, k: usize) -> C64 {
    w.get(i, j) * w.get(j, k) + w.get(j, k) * w.get(k, i) + w.get(k, i) * w.get(i, j)
}

/// su(3) realization on `n_sites` fundamental sites:
/// `J_μ = Σ_i μ_i F_i^μ − i h f_μνλ Σ_{i≠j} W_ij F_i^ν F_j^λ`.
pub fn realize_su3(
    n_sites: usize,
    mu: &[f64],
    w: &WScheme,
    h: f64,
) -> Result<YangianRealization, YangError> {
    check_mu(mu, n_sites)?;
    let wm = w.matrix(n_sites)?;
    for i in 0..n_sites {
        for j in i + 1..n_sites {
            for k in j + 1..n_sites {
                let d = triple_delta(&wm, i, j, k);
                if (d + 1.0).norm() > 1e-12 {
                    return Err(YangError::TripleCondition {
                        i,
                        j,
                        k,
                        value: d.re,
                    });
                }
            }
        }
    }
    let space = TensorSpace::uniform(3, n_sites)?;
    let dim = space.total_dim();
    let f = su3_generators();
    let per = per_site(&f, &space)?;
    let level0 = f.with_matrices(sums(&per, dim, 8));
    // −i h f = −h c since c = i f
    let nz = f.structure().nonzeros(1e-14);
    let mut level1 = vec![ComplexMatrix::zeros(dim); 8];
    for (site, s) in per.iter().enumerate() {
        for m in 0..8 {
            level1[m] += s[m].scale_re(mu[site]);
        }
    }
    if h != 0.0 {
        for i in 0..n_sites {
            for j in 0..n_sites {
                let wij = wm.get(i, j);
                if i == j || wij == re(0.0) {
                    continue;
                }
                for &(m, nu, la, cc) in &nz {
                    level1[m] += per[i][nu].matmul(&per[j][la]).scale(-wij * cc * h);
                }
            }
        }
    }
    YangianRealization::from_parts(
        space,
        level0,
        level1,
        RealizationParams {
            mu: mu.to_vec(),
            coupling: re(h),
            w: wm,
        },
    )
}

/// The explicit ladder-operator form of the su(3) level-1 generators built
/// from the quark-basis matrix units, in [`Su3Ladders::NAMES`] order.
/// The hypercharge term is read as `U_i⁺U_j⁻ − V_i⁺V_j⁻`.
pub fn su3_ladder_form(
    n_sites: usize,
    mu: &[f64],
    w: &WScheme,
    h: f64,
) -> Result<Vec<ComplexMatrix>, YangError> {
    check_mu(mu, n_sites)?;
    let wm = w.matrix(n_sites)?;
    let space = TensorSpace::uniform(3, n_sites)?;
    let dim = space.total_dim();
    let q = quark_ladders();
    let local = [
        q.i_plus.clone(),
        q.i_plus.adjoint(),
        q.u_plus.clone(),
        q.u_plus.adjoint(),
        q.v_plus.clone(),
        q.v_plus.adjoint(),
        q.i3.clone(),
        q.y.clone(),
    ];
    let at: Vec<Vec<ComplexMatrix>> = (0..n_sites)
        .map(|s| {
            local
                .iter()
                .map(|m| space.embed(m, s))
                .collect::<Result<_, _>>()
        })
        .collect::<Result<_, _>>()?;
    const IP: usize = 0;
    const IM: usize = 1;
    const UP: usize = 2;
    const UM: usize = 3;
    const VP: usize = 4;
    const VM: usize = 5;
    const I3: usize = 6;
    const Y: usize = 7;
    let mut out: Vec<ComplexMatrix> = (0..8)
        .map(|k| {
            let mut t = ComplexMatrix::zeros(dim);
            for s in 0..n_sites {
                t += at[s][k].scale_re(mu[s]);
            }
            t
        })
        .collect();
    let x = |a: usize, i: usize, b: usize, j: usize| at[i][a].matmul(&at[j][b]);
    for i in 0..n_sites {
        for j in 0..n_sites {
            if i == j {
                continue;
            }
            let wh = wm.get(i, j) * h;
            let yj = at[j][Y].scale_re(1.5);
            let i3m = &at[j][I3] - &yj;
            let i3p = &at[j][I3] + &yj;
            let terms: [(usize, C64, ComplexMatrix); 8] = [
                (
                    IP,
                    -2.0 * wh,
                    &x(IP, i, I3, j) + &x(UM, i, VM, j).scale_re(0.5),
                ),
                (
                    IM,
                    2.0 * wh,
                    &x(IM, i, I3, j) + &x(UP, i, VP, j).scale_re(0.5),
                ),
                (UP, wh, &at[i][UP].matmul(&i3m) + &x(IM, i, VM, j)),
                (UM, -wh, &at[i][UM].matmul(&i3m) + &x(IP, i, VP, j)),
                (VP, wh, &at[i][VP].matmul(&i3p) + &x(UM, i, IM, j)),
                (VM, -wh, &at[i][VM].matmul(&i3p) + &x(UP, i, IP, j)),
                (
                    I3,
                    wh,
                    &x(IP, i, IM, j) - &(&x(UP, i, UM, j) - &x(VP, i, VM, j)).scale_re(0.5),
                ),
                (Y, wh, &x(UP, i, UM, j) - &x(VP, i, VM, j)),
            ];
            for (k, s, m) in terms {
                out[k] += m.scale(s);
            }
        }
    }
    Ok(out)
}

fn ladder_images(x: &[ComplexMatrix]) -> Vec<ComplexMatrix> {
    Su3Ladders::from_components(x)
        .as_array()
        .iter()
        .map(|m| (*m).clone())
        .collect()
}

fn fit_ratio(target: &ComplexMatrix, basis: &ComplexMatrix) -> Option<C64> {
    let nn = basis.hs_inner(basis).re;
    (nn > 1e-24).then(|| basis.hs_inner(target) / nn)
}

/// Compare the ladder form against the ladder images of the f-tensor form
/// (`J1 ± iJ2`, `J6 ± iJ7`, `J4 ∓ iJ5`, `J3`, `(2/√3) J8`). Residuals are the
/// entrywise distances; the fitted level-0 and bilocal ratios go to `info`.
pub fn su3_ladder_crosscheck(
    n_sites: usize,
    mu: &[f64],
    w: &WScheme,
    h: f64,
    tol: f64,
) -> Result<VerificationReport, YangError> {
    let f_form = ladder_images(realize_su3(n_sites, mu, w, h)?.level1());
    let f_zero = ladder_images(realize_su3(n_sites, mu, w, 0.0)?.level1());
    let l_form = su3_ladder_form(n_sites, mu, w, h)?;
    let l_zero = su3_ladder_form(n_sites, mu, w, 0.0)?;
    let mut rep = VerificationReport::new("su3 ladder form vs f-tensor form", tol);
    for (k, name) in Su3Ladders::NAMES.iter().enumerate() {
        rep.check(format!("{name} entrywise"), l_form[k].dist(&f_form[k]));
        if let Some(r) = fit_ratio(&l_zero[k], &f_zero[k]) {
            rep.note(format!("{name} level-0 ratio"), r.re);
        }
        let bl = &l_form[k] - &l_zero[k];
        let bf = &f_form[k] - &f_zero[k];
        if let Some(r) = fit_ratio(&bl, &bf) {
            rep.note(format!("{name} bilocal ratio"), r.re);
            rep.note(
                format!("{name} bilocal fit residual"),
                (&bl - &bf.scale(r)).max_abs(),
            );
        }
    }
    Ok(rep)
}

/// `I_ab` for any ordered pair, using `I_ba = −I_ab`; `None` when `a = b`.
fn so_entry(per: &[ComplexMatrix], n: usize, a: usize, b: usize) -> Option<ComplexMatrix> {
    if a == b {
        return None;
    }
    let (lo, hi, sg) = if a < b { (a, b, 1.0) } else { (b, a, -1.0) };
    // lexicographic index of (lo, hi)
    let k = lo * n - lo * (lo + 1) / 2 + (hi - lo - 1);
    Some(per[k].scale_re(sg))
}

/// `Σ_{x,y} sign(x − y) Σ_{c≠a,b} I_ac(x) I_cb(y)` with no prefactor.
pub fn bilocal_literal(
    n: usize,
    n_sites: usize,
) -> Result<(YangianRealization, Vec<ComplexMatrix>), YangError> {
    let base = so_n_generators(n)?;
    let space = TensorSpace::uniform(n, n_sites)?;
    let dim = space.total_dim();
    let per = per_site(&base, &space)?;
    let level0 = base.with_matrices(sums(&per, dim, base.len()));
    let mut lit = Vec::with_capacity(base.len());
    for a in 0..n {
        for b in a + 1..n {
            let mut j = ComplexMatrix::zeros(dim);
            for x in 0..n_sites {
                for y in 0..n_sites {
                    let sg = match x.cmp(&y) {
                        std::cmp::Ordering::Greater => 1.0,
                        std::cmp::Ordering::Less => -1.0,
                        std::cmp::Ordering::Equal => continue,
                    };
                    for cc in (0..n).filter(|&cc| cc != a && cc != b) {
                        let ac = so_entry(&per[x], n, a, cc).expect("c != a");
                        let cb = so_entry(&per[y], n, cc, b).expect("c != b");
                        j += ac.matmul(&cb).scale_re(sg);
                    }
                }
            }
            lit.push(j);
        }
    }
    let wm = WScheme::Step { sign: -1.0 }.matrix(n_sites)?;
    let real = YangianRealization::from_parts(
        space,
        level0,
        lit.clone(),
        RealizationParams {
            mu: Vec::new(),
            coupling: re(1.0),
            w: wm,
        },
    )?;
    Ok((real, lit))
}

/// Bilocal so(n) realization on vector-representation sites,
/// `J_ab = (i/2) Σ_{x,y} sign(x − y) Σ_{c≠a,b} I_ac(x) I_cb(y)`.
pub fn realize_so_n_bilocal(n: usize, n_sites: usize) -> Result<YangianRealization, YangError> {
    let (real, lit) = bilocal_literal(n, n_sites)?;
    let scaled = lit.iter().map(|j| j.scale(BILOCAL_PREFACTOR)).collect();
    let mut out = real.with_level1(scaled)?;
    out.params.coupling = BILOCAL_PREFACTOR;
    Ok(out)
}

/// Least-squares `κ²` such that `κ·J_literal` satisfies the cubic constraint:
/// the left side is quadratic in `J`, the right side does not involve it.
/// Returns `(κ², residual after the fit)`.
pub fn bilocal_normalization_fit(n: usize, n_sites: usize) -> Result<(C64, f64), YangError> {
    let (real, _) = bilocal_literal(n, n_sites)?;
    let mut num = re(0.0);
    let mut den = 0.0;
    let mut pairs = Vec::new();
    serre_pairs(&real, Level1Kind::General, |lhs, rhs| {
        num += lhs.hs_inner(&rhs);
        den += lhs.hs_inner(&lhs).re;
        pairs.push((lhs, rhs));
    });
    if den < 1e-24 {
        return Ok((re(0.0), 0.0));
    }
    let k2 = num / den;
    let res = pairs
        .iter()
        .map(|(l, r)| (&l.scale(k2) - r).max_abs())
        .fold(0.0, f64::max);
    Ok((k2, res))
}
