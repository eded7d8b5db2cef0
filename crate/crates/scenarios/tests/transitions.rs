use std::f64::consts::PI;

use proptest::prelude::*;
use scenarios::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn two_spin_reduces_iff_condition(mu in 0.2..3.0f64, lam in 0.2..2.0f64) {
        let nu = lam * lam / mu;
        let r = reduce_two_spin(mu, nu, lam).unwrap();
        prop_assert!(r.leakage < 1e-10);
        prop_assert!(r.y_squared_deviation(0.75) < 1e-10);
        prop_assert!(r.closed_form_gap < 1e-10);
        let broken = reduce_two_spin(mu, nu + 0.1 / mu, lam).unwrap();
        prop_assert!(broken.leakage > 1e-4);
    }

    #[test]
    fn su3_reduces_iff_condition(u in 0.2..3.0f64, lam in 0.2..2.0f64) {
        let v = lam * lam / u;
        let r = reduce_su3(u, v, lam).unwrap();
        prop_assert!(r.leakage < 1e-10);
        prop_assert!(r.closed_form_gap < 1e-10);
        prop_assert!(r.closure_residual < 1e-9);
        let broken = reduce_su3(u, v + 0.1 / u, lam).unwrap();
        prop_assert!(broken.leakage > 1e-4);
    }

    #[test]
    fn sc_direction(lam1 in -2.0..2.0f64, hv in 0.2..2.0f64) {
        let r = sc_transition(lam1, lam1 + hv / 2.0, hv).unwrap();
        prop_assert_eq!(r.direction, Direction::SToP);
        prop_assert!(r.table.row("Phi00").unwrap().image_norm() < 1e-10);
        let row = r.table.row("phi00").unwrap();
        prop_assert!(row.residual < 1e-10);
        prop_assert!((r.s_to_p.re - r.closed.0).abs() < 1e-12);

        let r = sc_transition(lam1, lam1 - hv / 2.0, hv).unwrap();
        prop_assert_eq!(r.direction, Direction::PToS);
        prop_assert!(r.table.row("phi00").unwrap().image_norm() < 1e-10);
        prop_assert!(r.table.row("Phi00").unwrap().residual < 1e-10);
        prop_assert!((r.p_to_s.re - r.closed.1).abs() < 1e-12);
    }

    #[test]
    fn octet_singlet_transitions(h in -2.0..2.0f64, mu2 in -1.0..1.0f64, f in -1.0..1.0f64) {
        prop_assume!(h.abs() > 0.05);
        let r = su3_octet_transition(mu2 - 3.0 * h, mu2, h, f).unwrap();
        let s = 2.0 * 3f64.sqrt() * h;
        let want = [
            ("I+", "pi+", s), ("I-", "pi-", -s),
            ("U+", "K0", -s), ("U-", "K0bar", s),
            ("V+", "K-", -s), ("V-", "K+", -s),
            ("I3", "pi0", -(6f64.sqrt()) * h), ("I8", "eta0", 2.0 * 2f64.sqrt() * h),
        ];
        for (op, out, amp) in want {
            let row = r.table(op).unwrap().row("eta0'").unwrap();
            prop_assert!((row.amplitude(out) - matcore::re(amp)).norm() < 1e-9, "{} {}", op, out);
            prop_assert!((row.image_norm() - amp.abs()).abs() < 1e-9);
        }
        let r = su3_octet_transition(mu2 + 3.0 * h, mu2, h, f).unwrap();
        for t in &r.tables {
            prop_assert!(t.row("eta0'").unwrap().image_norm() < 1e-9, "{}", t.operator);
        }
    }
}

#[test]
fn reduction_examples() {
    let r = reduce_two_spin(1.0, 1.0, 1.0).unwrap();
    assert!(r.y_squared_deviation(0.75) < 1e-12);
    let r = reduce_two_spin(1.0, 1.0, 0.5).unwrap();
    assert!(r.leakage > 0.01);
    // λ = 0 with μ = ν breaks the condition and does leak
    let r = reduce_two_spin(1.0, 1.0, 0.0).unwrap();
    assert!(r.leakage > 0.01);
    let r = reduce_su3(1.0, 1.0, 1.0).unwrap();
    assert!(r.leakage < 1e-12);
    // the sum rule lands on 4/3, not 1/3
    assert!(r.y_squared_deviation(4.0 / 3.0) < 1e-10);
    assert!(r.y_squared_deviation(1.0 / 3.0) > 0.5);
    // u = 0, λ = 0: three copies of the fundamental
    let r = reduce_su3(0.0, 1.0, 0.0).unwrap();
    assert!(r.leakage < 1e-14);
    for b in &r.block_components {
        for (got, want) in b.iter().zip(liegen::su3_generators().generators()) {
            assert!(got.dist(want) < 1e-14);
        }
    }
    assert!(matches!(
        reduce_two_spin(1.0, -1.0, 0.5),
        Err(ScenarioError::InvalidParameter(_))
    ));
    assert!(matches!(
        reduce_two_spin(1.0, 0.0, 0.0),
        Err(ScenarioError::Degenerate(_))
    ));
}

#[test]
fn sc_trivial() {
    let r = sc_transition(0.4, 0.4, 0.0).unwrap();
    assert_eq!(r.direction, Direction::Neither);
}

#[test]
fn octet_trivial_reduces_to_level0() {
    let mu = 0.7;
    let r = su3_octet_transition(mu, mu, 0.0, 0.0).unwrap();
    for (t, t0) in r.tables.iter().zip(&r.level0) {
        for (row, row0) in t.rows.iter().zip(&t0.rows) {
            for (name, z) in &row0.output {
                assert!((row.amplitude(name) - z * mu).norm() < 1e-12);
            }
        }
    }
}

#[test]
fn berry_phases() {
    for theta in [PI / 6.0, PI / 3.0, PI / 2.0] {
        let omega = 2.0 * PI * (1.0 - theta.cos());
        let ph = berry_phase(theta, 1.3, 10_000).unwrap();
        assert!((ph[0].numeric - omega).abs() < 1e-5, "{:?}", ph[0]);
        assert!((ph[1].numeric + omega).abs() < 1e-5);
        assert!(ph[2].numeric.abs() < 1e-6);
        assert!(ph[3].numeric.abs() < 1e-6);
    }
    for p in berry_phase(0.0, 1.0, 1000).unwrap() {
        assert!(p.numeric.abs() < 1e-12);
    }
    assert!(berry_phase(4.0, 1.0, 1000).is_err());
    assert!(berry_phase(1.0, 1.0, 10).is_err());
}

#[test]
fn berry_converges_quadratically() {
    let theta = PI / 3.0;
    let err = |n| (berry_phase(theta, 1.0, n).unwrap()[0].numeric - PI).abs();
    let (e1, e2) = (err(200), err(400));
    assert!(e1 / e2 > 3.0, "{e1} {e2}");
}
