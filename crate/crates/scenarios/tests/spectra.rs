use proptest::prelude::*;
use scenarios::*;

fn nmr(omega0: f64, gamma: f64, b1: f64, b3: f64, mu1: f64, mu2: f64, h: f64) -> NmrParams {
    NmrParams {
        omega0,
        gamma,
        b1,
        b3,
        mu1,
        mu2,
        h,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn nmr_b1_zero_closed_form(w in 0.2..3.0f64, g in 0.1..2.0f64, b3 in -2.0..2.0f64,
                               mu1 in -2.0..2.0f64, mu2 in -2.0..2.0f64, h in -1.0..1.0f64) {
        let s = nmr_spectrum(&nmr(w, g, 0.0, b3, mu1, mu2, h), 1e-12).unwrap();
        prop_assert!(s.hamiltonian.hermitian_defect() < 1e-12);
        prop_assert!(s.closed_form_gap().unwrap() < 1e-9);
    }

    #[test]
    fn nmr_quartic_generic(w in 0.2..3.0f64, g in 0.1..2.0f64, b1 in -2.0..2.0f64, b3 in -2.0..2.0f64,
                           mu1 in -2.0..2.0f64, mu2 in -2.0..2.0f64, h in -1.0..1.0f64) {
        let p = nmr(w, g, b1, b3, mu1, mu2, h);
        let q = nmr_quartic(&p);
        prop_assert!(q.relative_gap() < 1e-8, "{:?}", q);
        let s = nmr_spectrum(&p, 1e-12).unwrap();
        prop_assert!(q.root_gap(&s.eigenvalues) < 1e-6);
    }

    #[test]
    fn j2_closed_forms(u1 in -2.0..2.0f64, u3 in -2.0..2.0f64, h in -1.0..1.0f64, two_l in 1usize..5) {
        let r = j2_spectrum(u1, u3, h, two_l, 1e-9).unwrap();
        prop_assert!(r.report.passed, "{}", r.report);
        prop_assert!(r.spectrum.hamiltonian.hermitian_defect() < 1e-12);
        prop_assert!(r.spectrum.closed_form_gap().unwrap() < 1e-9);
        if let (Some(a), Some(b)) = (r.sin_phi, r.sin_phi_closed) {
            prop_assert!((a - b).abs() < 1e-9, "{a} vs {b}");
        }
    }

    #[test]
    fn rare_gas_closed_form(a in 0.2..2.0f64, b in -2.0..2.0f64, l in 1usize..4) {
        let s = rare_gas(a, b, l).unwrap();
        prop_assert!(s.hamiltonian.hermitian_defect() < 1e-12);
        prop_assert!(s.closed_form_gap().unwrap() < 1e-9);
    }

    #[test]
    fn rare_gas_compatibility_iff(a in 0.5..2.0f64, b in 0.0..0.5f64, l in 1usize..3,
                                  u3 in 0.5..1.5f64, h in 0.0..0.4f64) {
        let u1 = rare_gas_compatible_u1(a, b, l, u3, h).unwrap();
        prop_assert!(rare_gas_commutator(a, b, l, u1, u3, h).unwrap() < 1e-9);
        prop_assert!(rare_gas_commutator(a, b, l, u1 + 0.1, u3, h).unwrap() > 1e-4);
    }

    #[test]
    fn happer_half_frequencies(k in 1usize..4, x in -3.0..3.0f64) {
        let r = happer_half(k, x).unwrap();
        prop_assert!(r.spectrum.closed_form_gap().unwrap() < 1e-9);
        prop_assert!(r.max_discriminant < 0.0);
    }

    #[test]
    fn xbr_hermitian(a in 0.1..3.0f64, b in 0.1..3.0f64, x in -2.0..2.0f64) {
        let r = extended_breit_rabi(a, b, x).unwrap();
        prop_assert!(r.spectrum.hamiltonian.hermitian_defect() < 1e-12);
    }
}

#[test]
fn nmr_example_spectrum() {
    let s = nmr_spectrum(&nmr(2.0, 1.0, 0.0, 1.0, 1.0, 0.0, 0.0), 1e-12).unwrap();
    let want = [-1.0, -0.5, 0.5, 1.0];
    for (a, b) in s.eigenvalues.iter().zip(want) {
        assert!((a - b).abs() < 1e-12);
    }
    let s = nmr_spectrum(&nmr(0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0), 1e-12).unwrap();
    assert!(s.eigenvalues.iter().all(|e| e.abs() < 1e-14));
}

#[test]
fn oscillation_endpoints() {
    let p = nmr(2.0, 1.0, 0.0, 1.0, 1.0, 0.3, 0.2);
    let w = p.omega();
    let o = nmr_oscillation(
        &p,
        &[
            0.0,
            std::f64::consts::FRAC_PI_2 / w,
            std::f64::consts::PI / w,
        ],
    )
    .unwrap();
    assert!((o.samples[0].1 - 2.0).abs() < 1e-10);
    assert!(o.samples[1].1 < 1e-6);
    assert!((o.samples[2].1 - 2.0).abs() < 1e-6);
    assert!(o.closed_form_gap() < 1e-9);
}

#[test]
fn oscillation_rejects_b1() {
    let p = nmr(2.0, 1.0, 0.5, 1.0, 1.0, 0.0, 0.0);
    assert!(matches!(
        nmr_oscillation(&p, &[0.0]),
        Err(ScenarioError::InvalidParameter(_))
    ));
}

#[test]
fn j2_examples() {
    // no mixing when h = u3
    let r = j2_spectrum(0.8, 0.6, 0.6, 1, 1e-9).unwrap();
    assert!(r.sin_phi.unwrap().abs() < 1e-9);
    // u3 = 0, h = 0: J is S1 + S2 on the spin pair
    let r = j2_spectrum(1.0, 0.0, 0.0, 1, 1e-9).unwrap();
    assert!(r.spectrum.closed_form_gap().unwrap() < 1e-12);
    assert_eq!(r.spectrum.count_near(0.0, 1e-9), 2);
    assert_eq!(r.spectrum.count_near(2.0, 1e-9), 6);
}

#[test]
fn rare_gas_example() {
    let s = rare_gas(1.0, 0.0, 1).unwrap();
    let pred = s.closed_form.as_ref().unwrap();
    let root = (2.0f64 + 0.25).sqrt();
    let want = [-0.5, 1.0, 0.25 + 0.5 * root, 0.25 - 0.5 * root];
    for (p, w) in pred.iter().zip(want) {
        assert!((p.value - w).abs() < 1e-14, "{}", p.label);
    }
    for b in [-1.3, 0.2, 0.9] {
        let s = rare_gas(1.0, b, 2).unwrap();
        let top = s.closed_form.as_ref().unwrap()[0].value;
        assert!(s.count_near(top, 1e-9) >= 7);
    }
    assert!(matches!(
        rare_gas(0.0, 1.0, 1),
        Err(ScenarioError::InvalidParameter(_))
    ));
}

#[test]
fn happer_degenerate_family() {
    for k in 1..=3 {
        for x in [1.0, -1.0] {
            let r = happer(k, x).unwrap();
            assert_eq!(r.degenerate_dim, 2 * k + 1);
            assert_eq!(r.family.len(), 2 * k);
            assert!(r.max_family_residual() < 1e-9);
            assert!(r.spectrum.hamiltonian.hermitian_defect() < 1e-12);
        }
        let r = happer(k, 0.0).unwrap();
        assert!(r.spectrum.closed_form_gap().unwrap() < 1e-9);
    }
    assert!(happer(0, 1.0).is_err());
}

#[test]
fn happer_transitions() {
    for k in 1..=3 {
        let r = happer(k, 1.0).unwrap();
        assert!(r.max_transition_leakage() < 1e-8);
        assert!(r.containment < 1e-8);
        // the unit cross coefficient does not map family to family
        assert!(r.literal_leakage > 0.1);
        for t in &r.transitions {
            for row in &t.rows {
                assert!(
                    row.output[0].1.norm() > 1e-3,
                    "{} {}",
                    t.operator,
                    row.input
                );
            }
        }
    }
}

#[test]
fn xbr_corrected_family() {
    for (a, b) in [(1.0, 1.0), (1.0, 4.0), (2.5, 0.7)] {
        for x in [1.0, -1.0] {
            let r = extended_breit_rabi(a, b, x).unwrap();
            for s in &r.corrected {
                assert!(s.residual < 1e-12, "{a} {b} {x} {}", s.label);
            }
        }
        let plus = extended_breit_rabi(a, b, 1.0).unwrap();
        let minus = extended_breit_rabi(a, b, -1.0).unwrap();
        // (x, m) pairs with (-x, -m)
        for (p, m) in plus.corrected.iter().zip(minus.corrected.iter().rev()) {
            assert!((p.sz1 + m.sz1).abs() < 1e-12);
        }
    }
    assert!(extended_breit_rabi(1.0, -1.0, 1.0).is_err());
}

#[test]
fn xbr_zero_field_conserves_sz() {
    let r = extended_breit_rabi(1.3, 0.4, 0.0).unwrap();
    let sz = {
        let space = matcore::TensorSpace::uniform(2, 3).unwrap();
        let z = matcore::ComplexMatrix::real_diagonal(&[0.5, -0.5]);
        let mut acc = matcore::ComplexMatrix::zeros(8);
        for s in 0..3 {
            acc += space.embed(&z, s).unwrap();
        }
        acc
    };
    assert!(r.spectrum.hamiltonian.comm(&sz).max_abs() < 1e-14);
}

#[test]
fn lipatov_chains() {
    for n in 2..=3 {
        let r = lipatov_chain(n, LipatovSite::So6Vector).unwrap();
        assert!(r.report.passed, "{}", r.report);
        assert!(r.report.residual("[H, I]").unwrap() < 1e-9);
        assert!(r.report.info("[H, J]").is_some());
    }
    let r = lipatov_chain(3, LipatovSite::SpinHalf).unwrap();
    assert_eq!(r.report.info("collapses to identity"), Some(1.0));
    assert!(lipatov_chain(1, LipatovSite::SpinHalf).is_err());
    for (j, want) in [
        (0, (1, 1)),
        (1, (1, 1)),
        (2, (3, 2)),
        (3, (11, 6)),
        (4, (25, 12)),
        (5, (137, 60)),
    ] {
        assert_eq!(harmonic(j), want);
    }
}
