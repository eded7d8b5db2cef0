use liegen::{a_n_op, permutation_op, spin_matrices};
use matcore::{c, re, ComplexMatrix, TensorSpace, C64};
use rtt::*;
use yangian::{verify_defining, verify_simplified};

fn grid() -> Vec<(C64, C64)> {
    let pts = [-2.0, -1.0, 0.0, 1.0, 2.0];
    let mut out = Vec::new();
    for &u in &pts {
        for &v in &pts {
            // shift off the real axis a little so that no product is degenerate
            out.push((c(u, 0.1), c(v, -0.2)));
        }
    }
    out
}

fn families() -> Vec<RMatrixSpec> {
    vec![
        RMatrixSpec::rational_sun(2).unwrap(),
        RMatrixSpec::rational_sun(3).unwrap(),
        RMatrixSpec::rational_son(5, 1.0).unwrap(),
        RMatrixSpec::rational_son(6, 1.0).unwrap(),
    ]
}

#[test]
fn yang_baxter_on_grid() {
    for spec in families() {
        for (u, v) in grid() {
            let r = ybe_residual(&spec, u, v);
            assert!(r < 1e-10, "{:?} at {u}, {v}: {r}", spec.family());
        }
    }
    let s = RMatrixSpec::rational_sun(2).unwrap();
    assert!(ybe_residual(&s, re(0.7), re(0.3)) < 1e-12);
    assert_eq!(ybe_residual(&s, re(0.4), re(0.4)), 0.0);
    let so = RMatrixSpec::rational_son(6, 1.0).unwrap();
    assert!(ybe_residual(&so, re(1.3), re(0.4)) < 1e-10);
}

#[test]
fn regular_at_zero() {
    let s = RMatrixSpec::rational_sun(3).unwrap();
    assert_eq!(s.evaluate(re(0.0)), ComplexMatrix::identity(9));
}

#[test]
fn zz_family_needs_matching_parameters() {
    let good = RMatrixSpec::son_zz(6, 0.7, 0.7).unwrap();
    let bad = RMatrixSpec::son_zz(6, 0.7, 1.1).unwrap();
    let (u, v) = (re(1.3), re(-0.6));
    assert!(ybe_residual(&good, u, v) < 1e-10);
    assert!(ybe_residual(&bad, u, v) > 1e-3);
    let so = RMatrixSpec::rational_son(6, 0.7).unwrap();
    assert!(good.evaluate(u).dist(&so.evaluate(u)) < 1e-14);
}

#[test]
fn r_form_matches_closed_form() {
    for n in [5, 6] {
        let alpha = 0.8;
        let spec = RMatrixSpec::rational_son(n, alpha).unwrap();
        for u in [re(0.3), c(-1.2, 0.5)] {
            assert!(
                spec.r_form(u)
                    .dist(&son_r_closed_form(n, alpha, u).unwrap())
                    < 1e-13
            );
        }
        assert!(ybe_r_form_residual(&spec, re(0.9), re(-0.4)) < 1e-10);
    }
    // the rearranged variant is a different matrix and is not a solution
    let u = re(0.9);
    let var = son_r_variant(6, 1.0, u).unwrap();
    assert!(var.dist(&son_r_closed_form(6, 1.0, u).unwrap()) > 0.1);
}

#[test]
fn elementwise_so5_differs_only_in_quadratic_term() {
    let spec = RMatrixSpec::rational_son(5, 1.0).unwrap();
    let u = re(0.6);
    let diff = &son5_elementwise(u, 1.0) - &spec.evaluate(u);
    // δ_ab δ_bc in place of δ_ad δ_bc
    let m = ComplexMatrix::from_fn(25, |row, col| {
        let (a, b, cc) = (row / 5, row % 5, col / 5);
        re(if a == b && b == cc { 1.0 } else { 0.0 })
    });
    let want = (&m - &permutation_op(5)).scale(u * u);
    assert!(diff.dist(&want) < 1e-14);
    assert!(diff.max_abs() > 0.1);
}

#[test]
fn plain_lax_coefficients() {
    let one = monodromy_with(
        2,
        &TensorSpace::uniform(2, 1).unwrap(),
        LaxNormalization::Plain,
    )
    .unwrap();
    assert!(one.coefficient(1).dist(&permutation_op(2)) < 1e-15);
    assert!(one.coefficient(2).max_abs() == 0.0);
    let sites = TensorSpace::uniform(2, 2).unwrap();
    let two = monodromy_with(2, &sites, LaxNormalization::Plain).unwrap();
    let full = TensorSpace::uniform(2, 3).unwrap();
    let p1 = full.embed_pair(&permutation_op(2), 0, 1).unwrap();
    let p2 = full.embed_pair(&permutation_op(2), 0, 2).unwrap();
    assert!(two.coefficient(2).dist(&p1.matmul(&p2)) < 1e-15);
    assert!(two.coefficient(1).dist(&(&p1 + &p2)) < 1e-15);
    assert_eq!(two.degree(), 2);
}

#[test]
fn rtt_exchange_relation() {
    let pairs = [
        (re(3.0), re(1.5)),
        (c(2.0, 1.0), re(-2.5)),
        (re(2.0), re(5.0)),
        (c(0.5, 0.5), c(-1.0, 2.0)),
    ];
    for d in [2, 3] {
        let spec = RMatrixSpec::rational_sun(d).unwrap();
        for n in 1..=3 {
            for lax in [LaxNormalization::Traceless, LaxNormalization::Plain] {
                let mono = monodromy_with(d, &TensorSpace::uniform(d, n).unwrap(), lax).unwrap();
                for (u, v) in pairs {
                    let r = rtt_residual(&spec, &mono, u, v).unwrap();
                    assert!(r < 1e-10, "d={d} n={n} {lax:?}: {r}");
                }
            }
        }
    }
}

#[test]
fn monodromy_rejects_wrong_sites() {
    let mixed = TensorSpace::new(vec![2, 3]).unwrap();
    assert_eq!(
        monodromy(2, &mixed).unwrap_err(),
        RttError::AuxMismatch {
            aux: 2,
            site: 1,
            found: 3
        }
    );
    assert!(monodromy(4, &TensorSpace::uniform(4, 1).unwrap()).is_err());
}

#[test]
fn extracted_su2_generators_are_lowering_sums() {
    let sites = TensorSpace::uniform(2, 2).unwrap();
    let mono = monodromy(2, &sites).unwrap();
    let real = su2_generators(&mono).unwrap();
    let s = spin_matrices(1).unwrap();
    let sums = s.site_sums(&sites).unwrap();
    let i = real.level0().generators();
    // I+ = T01 is the sum of site lowering operators
    let ip = &i[0] + &i[1].scale(c(0.0, 1.0));
    let s_minus = &sums[0] - &sums[1].scale(c(0.0, 1.0));
    assert!(ip.dist(&s_minus) < 1e-15);
    assert!(i[2].dist(&sums[2]) < 1e-15);
    let st = real.level0().structure();
    assert!((st.get(0, 1, 2) - c(0.0, -1.0)).norm() < 1e-14);
}

#[test]
fn extracted_generators_satisfy_defining_relations() {
    for n in [1, 2, 3] {
        let mono = monodromy(2, &TensorSpace::uniform(2, n).unwrap()).unwrap();
        let rep = verify_defining(&su2_generators(&mono).unwrap(), 1e-9);
        assert!(rep.passed, "{rep}");
    }
    for n in [2, 3] {
        let mono = monodromy(3, &TensorSpace::uniform(3, n).unwrap()).unwrap();
        let rep = verify_defining(&su3_generators(&mono).unwrap(), 1e-9);
        assert!(rep.passed, "{rep}");
    }
}

#[test]
fn simplified_relations_on_monodromy() {
    let two = su2_generators(&monodromy(2, &TensorSpace::uniform(2, 2).unwrap()).unwrap()).unwrap();
    let rep = verify_simplified(&two, 1e-9).unwrap();
    assert!(rep.passed, "{rep}");
    // both sides of the corrected form vanish at two sites; the grouped one does not
    assert_eq!(rep.info("su2 (J-I+ - I-J+)I3 lhs max"), Some(0.0));
    assert!(rep.info("su2 grouped (J-J+ - I-J+)I3 unit-scale").unwrap() > 0.1);

    for n in [3, 4] {
        let r =
            su2_generators(&monodromy(2, &TensorSpace::uniform(2, n).unwrap()).unwrap()).unwrap();
        let rep = verify_simplified(&r, 1e-9).unwrap();
        assert!(rep.passed, "{rep}");
        assert!((rep.info("su2 (J-I+ - I-J+)I3 kappa").unwrap() - 1.0).abs() < 1e-10);
        assert!(rep.info("su2 grouped (J-J+ - I-J+)I3 best fit").unwrap() > 0.1);
    }

    let s3 = su3_generators(&monodromy(3, &TensorSpace::uniform(3, 3).unwrap()).unwrap()).unwrap();
    let rep = verify_simplified(&s3, 1e-9).unwrap();
    assert!(rep.passed, "{rep}");
    assert!((rep.info("su3 kappa").unwrap() - 0.25).abs() < 1e-10);
    let s2 = su3_generators(&monodromy(3, &TensorSpace::uniform(3, 2).unwrap()).unwrap()).unwrap();
    let rep = verify_simplified(&s2, 1e-9).unwrap();
    assert!(rep.info("su3 unit-scale").unwrap() < 1e-9);
}

#[test]
fn quantum_determinant_su2() {
    for lax in [LaxNormalization::Traceless, LaxNormalization::Plain] {
        for n in 1..=3 {
            let mono = monodromy_with(2, &TensorSpace::uniform(2, n).unwrap(), lax).unwrap();
            let qd = qdet_su2(&mono).unwrap();
            let gap = qd.closed_form_gap();
            // the closed forms assume a traceless first-order coefficient
            match lax {
                LaxNormalization::Traceless => assert!(gap < 1e-10, "n={n}: {gap}"),
                LaxNormalization::Plain => assert!(gap > 0.1, "n={n}: {gap}"),
            }
            let real = su2_generators(&mono).unwrap();
            let ops: Vec<ComplexMatrix> = real
                .level0()
                .generators()
                .iter()
                .chain(real.level1())
                .cloned()
                .collect();
            assert!(qd.centrality(&ops) < 1e-9);
        }
    }
}

#[test]
fn quantum_determinant_su3() {
    for n in 1..=2 {
        let mono = monodromy(3, &TensorSpace::uniform(3, n).unwrap()).unwrap();
        let qd = qdet_su3(&mono).unwrap();
        assert!(
            qd.closed_form_gap() < 1e-10,
            "n={n}: {}",
            qd.closed_form_gap()
        );
        let real = su3_generators(&mono).unwrap();
        let ops: Vec<ComplexMatrix> = real
            .level0()
            .generators()
            .iter()
            .chain(real.level1())
            .cloned()
            .collect();
        assert!(qd.centrality(&ops) < 1e-9);
    }
    assert!(qdet_su3(&monodromy(2, &TensorSpace::uniform(2, 1).unwrap()).unwrap()).is_err());
}

#[test]
fn hamiltonian_densities() {
    let s = RMatrixSpec::rational_sun(2).unwrap();
    assert!(hamiltonian_from_r(&s).unwrap().dist(&permutation_op(2)) < 1e-15);
    for n in [5, 6] {
        let xi = 0.9;
        let k = (n as f64 - 2.0) / 2.0;
        let spec = RMatrixSpec::rational_son(n, xi).unwrap();
        let h = hamiltonian_from_r(&spec).unwrap();
        let id = ComplexMatrix::identity(n * n);
        let want = (&(&a_n_op(n).unwrap() - &permutation_op(n).scale_re(k)) - &id)
            .scale_re(1.0 / (k * xi));
        assert!(h.dist(&want) < 1e-13);
        let num = hamiltonian_from_r_numeric(&spec, 1e-5).unwrap();
        assert!(h.dist(&num) < 1e-7);
    }
    let chain = chain_hamiltonian(&permutation_op(2), 2, 3).unwrap();
    assert_eq!(chain.dim(), 8);
    assert!(chain.is_hermitian(1e-15));
    // ξ = 0 makes Ř(0) vanish
    let sing = RMatrixSpec::rational_son(5, 0.0).unwrap();
    assert_eq!(hamiltonian_from_r(&sing).unwrap_err(), RttError::Singular);
}
