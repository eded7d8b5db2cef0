use matcore::{
    char_poly_coeffs, commutator, hermitian_eigen, kron, poly_eval, ComplexMatrix, TensorSpace, C64,
};
use proptest::prelude::*;

fn matrix(dim: usize) -> impl Strategy<Value = ComplexMatrix> {
    prop::collection::vec((-2.0f64..2.0, -2.0f64..2.0), dim * dim).prop_map(move |v| {
        ComplexMatrix::from_vec(dim, v.into_iter().map(|(a, b)| C64::new(a, b)).collect()).unwrap()
    })
}

fn hermitian(dim: usize) -> impl Strategy<Value = ComplexMatrix> {
    matrix(dim).prop_map(|m| (&m + &m.adjoint()).scale_re(0.5))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn kron_is_associative(a in matrix(2), b in matrix(3), c in matrix(2)) {
        let left = kron(&kron(&a, &b), &c);
        let right = kron(&a, &kron(&b, &c));
        prop_assert!(left.dist(&right) < 1e-13);
    }

    #[test]
    fn kron_trace_factorizes(a in matrix(3), b in matrix(2)) {
        let t = kron(&a, &b).trace();
        prop_assert!((t - a.trace() * b.trace()).norm() < 1e-12);
    }

    #[test]
    fn kron_swap_by_permutation(a in matrix(2), b in matrix(2)) {
        let p = ComplexMatrix::from_fn(4, |r, c| {
            let (i, j) = (c / 2, c % 2);
            if r == j * 2 + i { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) }
        });
        prop_assert!(p.matmul(&kron(&a, &b)).matmul(&p).dist(&kron(&b, &a)) < 1e-13);
    }

    #[test]
    fn commutator_antisymmetry_and_jacobi(a in matrix(4), b in matrix(4), c in matrix(4)) {
        let ab = commutator(&a, &b).unwrap();
        prop_assert!((&ab + &commutator(&b, &a).unwrap()).max_abs() < 1e-12);
        let j = commutator(&a, &commutator(&b, &c).unwrap()).unwrap()
            + commutator(&b, &commutator(&c, &a).unwrap()).unwrap()
            + commutator(&c, &ab).unwrap();
        prop_assert!(j.max_abs() < 1e-10);
    }

    #[test]
    fn eigen_trace_and_reconstruction(a in hermitian(6)) {
        let e = hermitian_eigen(&a, 1e-12).unwrap();
        let sum: f64 = e.values.iter().sum();
        prop_assert!((sum - a.trace().re).abs() < 1e-10 * 6.0 * a.max_abs().max(1.0));
        prop_assert!(e.residual(&a) < 10.0 * 1e-12 * a.max_abs().max(1.0) * 6.0);
        let vv = e.vectors.adjoint().matmul(&e.vectors);
        prop_assert!(vv.dist(&ComplexMatrix::identity(6)) < 1e-12);
    }

    #[test]
    fn char_poly_vanishes_on_spectrum(a in hermitian(5)) {
        let p = char_poly_coeffs(&a);
        let e = hermitian_eigen(&a, 1e-12).unwrap();
        let scale = a.max_abs().max(1.0).powi(5);
        for &lam in &e.values {
            prop_assert!(poly_eval(&p, C64::new(lam, 0.0)).norm() < 1e-8 * scale);
        }
    }

    #[test]
    fn embedded_sites_commute(a in matrix(2), b in matrix(2), i in 0usize..3, j in 0usize..3) {
        prop_assume!(i != j);
        let sp = TensorSpace::uniform(2, 3).unwrap();
        let x = sp.embed(&a, i).unwrap();
        let y = sp.embed(&b, j).unwrap();
        prop_assert!(x.comm(&y).max_abs() < 1e-12);
    }
}

#[test]
fn two_spin_exchange_spectrum() {
    // ½(I + σ·σ) swaps two qubits: eigenvalues −1 once, +1 three times
    let s = [
        ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap(),
        ComplexMatrix::from_vec(
            2,
            vec![
                C64::new(0.0, 0.0),
                C64::new(0.0, -1.0),
                C64::new(0.0, 1.0),
                C64::new(0.0, 0.0),
            ],
        )
        .unwrap(),
        ComplexMatrix::real_diagonal(&[1.0, -1.0]),
    ];
    let mut h = ComplexMatrix::identity(4);
    for x in &s {
        h += kron(x, x);
    }
    let e = hermitian_eigen(&h.scale_re(0.5), 1e-12).unwrap();
    for (got, want) in e.values.iter().zip([-1.0, 1.0, 1.0, 1.0]) {
        assert!((got - want).abs() < 1e-12);
    }
}
