use matcore::{c, kron, re, ComplexMatrix};
use yangian::simplified::MONODROMY_SCALE;
use yangian::*;

const TOL: f64 = 1e-9;

fn single_su2(mu: f64) -> YangianRealization {
    realize_su2(&[1], &[mu], &WScheme::su2_default(), re(0.0)).unwrap()
}

#[test]
fn coproduct_of_two_spins_is_two_site_realization() {
    let d = coproduct_extend(&single_su2(0.3), &single_su2(-1.2)).unwrap();
    // ½ C with C = iε gives the cross term coefficient i/2
    let r = realize_su2(&[1, 1], &[0.3, -1.2], &WScheme::su2_default(), c(0.0, 0.5)).unwrap();
    for (a, b) in d.level1().iter().zip(r.level1()) {
        assert!(a.dist(b) < 1e-15);
    }
    assert!(verify_defining(&d, TOL).passed);
    // Δ(I3) on |↑↑⟩
    assert_eq!(d.level0().generators()[2].get(0, 0), re(1.0));
}

#[test]
fn coproduct_is_coassociative_and_passes() {
    let (a, b, cc) = (single_su2(0.5), single_su2(-0.7), single_su2(1.1));
    let left = coproduct_extend(&coproduct_extend(&a, &b).unwrap(), &cc).unwrap();
    let right = coproduct_extend(&a, &coproduct_extend(&b, &cc).unwrap()).unwrap();
    for (x, y) in left.level1().iter().zip(right.level1()) {
        assert!(x.dist(y) < 1e-14);
    }
    assert!(verify_defining(&left, TOL).passed);

    let s1 = realize_su3(1, &[0.4], &WScheme::su3_default(), 0.0).unwrap();
    let s2 = realize_su3(1, &[-0.9], &WScheme::su3_default(), 0.0).unwrap();
    let d = coproduct_extend(&s1, &s2).unwrap();
    assert!(verify_defining(&d, TOL).passed);
}

#[test]
fn coproduct_rejects_mixed_algebras() {
    let s = realize_su3(1, &[0.4], &WScheme::su3_default(), 0.0).unwrap();
    assert!(matches!(
        coproduct_extend(&single_su2(0.1), &s),
        Err(YangError::AlgebraMismatch { .. })
    ));
}

#[test]
fn su3_coproduct_cross_terms() {
    let s1 = realize_su3(1, &[0.4], &WScheme::su3_default(), 0.0).unwrap();
    let s2 = realize_su3(1, &[-0.9], &WScheme::su3_default(), 0.0).unwrap();
    let fit = su3_coproduct_fit(&s1, &s2).unwrap();
    assert!(fit.residual_plus < 1e-14 && fit.residual_minus < 1e-14);
    let near = |z: matcore::C64, x: f64| (z - re(x)).norm() < 1e-14;
    assert!(
        near(fit.plus[0], -0.5) && near(fit.plus[1], -0.25),
        "{fit:?}"
    );
    assert!(
        near(fit.minus[0], 0.5) && near(fit.minus[1], 0.25),
        "{fit:?}"
    );
}

#[test]
fn su2_simplified_relation() {
    let r = realize_su2(
        &[1, 1, 1],
        &[0.3, -0.8, 0.5],
        &WScheme::su2_default(),
        c(0.0, 0.5),
    )
    .unwrap();
    let rep = verify_simplified(&r, TOL).unwrap();
    assert!(rep.passed, "{rep}");
    let k = rep.info("su2 (J-I+ - I-J+)I3 kappa").unwrap();
    assert!((k - 1.0).abs() < 1e-10, "{rep}");
    // the other grouping misses even after a best fit
    assert!(rep.info("su2 grouped (J-J+ - I-J+)I3 best fit").unwrap() > 0.1);

    let two = realize_su2(&[1, 1], &[0.3, 0.3], &WScheme::su2_default(), re(0.6)).unwrap();
    let rep2 = verify_simplified(&two, TOL).unwrap();
    assert!(rep2.passed);
    // both sides of the corrected form vanish at two sites; the other
    // grouping leaves a nonzero right side
    assert!(rep2.info("su2 (J-I+ - I-J+)I3 lhs max").unwrap() < 1e-15);
    assert!(rep2.info("su2 grouped (J-J+ - I-J+)I3 unit-scale").unwrap() > 0.1);
}

#[test]
fn su3_simplified_relation() {
    let r = realize_su3(3, &[0.2, 0.9, -0.4], &WScheme::su3_default(), 0.25).unwrap();
    let rep = verify_simplified(&r, TOL).unwrap();
    assert!(rep.passed, "{rep}");
    assert!((rep.info("su3 kappa").unwrap() - 0.25).abs() < 1e-10);
    let single = realize_su3(1, &[0.7], &WScheme::su3_default(), 0.0).unwrap();
    let rep1 = verify_simplified(&single, TOL).unwrap();
    assert!(rep1.info("su3 lhs max").unwrap() < 1e-15);
    assert!(rep1.info("su3 unit-scale").unwrap() < 1e-15);
    assert_eq!(MONODROMY_SCALE, 2.0);
}

#[test]
fn so_n_simplified_relations() {
    let r5 = realize_so_n_bilocal(5, 2).unwrap();
    let rep = verify_simplified(&r5, TOL).unwrap();
    assert!(rep.passed, "{rep}");
    assert!((rep.info("so5 [J(E3),J(F3)] kappa").unwrap() - 1.0).abs() < 1e-10);

    let r6 = realize_so_n_bilocal(6, 2).unwrap();
    let rep = verify_simplified(&r6, TOL).unwrap();
    assert!(rep.passed, "{rep}");
    for key in ["so6 [J12,J34]", "so6 [J12,J56]", "so6 [J34,J56]"] {
        assert!(
            (rep.info(&format!("{key} kappa")).unwrap() - 1.0).abs() < 1e-10,
            "{key}"
        );
        assert!(rep.info(&format!("{key} lhs max")).unwrap() > 0.1);
    }
    assert!(rep.info("so6 [J34,J56] variant best fit").unwrap() > 0.01);
}

#[test]
fn so6_right_side_has_eight_terms() {
    use yangian::simplified::{SO6_12_34, SO6_12_56, SO6_34_56};
    for t in [SO6_12_34, SO6_12_56, SO6_34_56] {
        assert_eq!(t.len(), 8);
        assert_eq!(t.iter().map(|x| x.0).sum::<f64>(), 0.0);
    }
    let id = ComplexMatrix::identity(2);
    assert_eq!(kron(&id, &id).dim(), 4);
}
