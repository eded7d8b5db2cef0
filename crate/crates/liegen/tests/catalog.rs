use liegen::*;
use matcore::{c, kron, re, ComplexMatrix, C64};
use proptest::prelude::*;

fn close(a: &ComplexMatrix, b: &ComplexMatrix, tol: f64) -> bool {
    a.dist(b) < tol
}

#[test]
fn gell_mann_normalization() {
    let g = gell_mann();
    for a in 0..8 {
        for b in 0..8 {
            let t = g.generators()[a].matmul(&g.generators()[b]).trace();
            let want = if a == b { 2.0 } else { 0.0 };
            assert!((t - re(want)).norm() < 1e-14, "tr(l{a} l{b})");
        }
    }
}

#[test]
fn su3_structure_from_trace_oracle() {
    // f_abc = −(i/4) tr([λa, λb] λc), computed only from the raw matrices
    let l = gell_mann();
    let lam = l.generators();
    let f = su3_generators();
    for a in 0..8 {
        for b in 0..8 {
            for cc in 0..8 {
                let oracle = (c(0.0, -0.25) * lam[a].comm(&lam[b]).matmul(&lam[cc]).trace()).re;
                assert!((oracle - f.structure().f(a, b, cc)).abs() < 1e-13);
            }
        }
    }
    assert!((f.structure().f(0, 1, 2) - 1.0).abs() < 1e-14);
    assert!((f.structure().f(3, 4, 7) - 3f64.sqrt() / 2.0).abs() < 1e-14);
    assert!(f.structure().f_imaginary_part() < 1e-15);
    // Gell-Mann set itself carries 2f
    assert!((l.structure().f(0, 1, 2) - 2.0).abs() < 1e-14);
}

#[test]
fn quark_i_plus_is_single_unit() {
    let q = quark_ladders();
    // only entry (row 1, column 2) in 1-based counting
    for i in 0..3 {
        for j in 0..3 {
            let want = if (i, j) == (0, 1) { 1.0 } else { 0.0 };
            assert_eq!(q.i_plus.get(i, j), re(want));
        }
    }
}

#[test]
fn ladder_relabeling_identities() {
    let lam = gell_mann();
    let x = lam.generators();
    let l = Su3Ladders::from_components(x);
    let i = c(0.0, 1.0);
    assert!(close(&l.i_plus, &(&x[0] + &x[1].scale(i)), 1e-15));
    assert!(close(&l.v_plus, &(&x[3] - &x[4].scale(i)), 1e-15));
    assert!(close(&l.v_minus, &(&x[3] + &x[4].scale(i)), 1e-15));
    // (√3/2) I8 = λ8
    assert!(close(&l.i8.scale_re(3f64.sqrt() / 2.0), &x[7], 1e-15));
}

#[test]
fn su2_structure_is_epsilon() {
    let s = spin_matrices(1).unwrap();
    for a in 0..3 {
        for b in 0..3 {
            for cc in 0..3 {
                let z = s.structure().get(a, b, cc);
                assert!((z - c(0.0, levi_civita(a, b, cc))).norm() < 1e-15);
            }
        }
    }
}

#[test]
fn structure_tensors_are_consistent() {
    let sets = [
        spin_matrices(1).unwrap(),
        spin_matrices(2).unwrap(),
        su3_generators(),
        so_n_generators(5).unwrap(),
        so_n_generators(6).unwrap(),
        so5_cartan_weyl(),
    ];
    for s in &sets {
        assert!(s.closure_residual() < 1e-10, "{}", s.label());
        assert_eq!(s.structure().antisymmetry_defect(), 0.0);
        assert!(s.structure().jacobi_defect() < 1e-10);
    }
}

fn delta(a: usize, b: usize) -> f64 {
    if a == b {
        1.0
    } else {
        0.0
    }
}

#[test]
fn so_n_commutators_match_tensor_formula() {
    for n in [5, 6] {
        let s = so_n_generators(n).unwrap();
        assert_eq!(s.len(), n * (n - 1) / 2);
        // full antisymmetric L with L_ba = −L_ab
        let l = |a: usize, b: usize| -> ComplexMatrix {
            if a == b {
                return ComplexMatrix::zeros(n);
            }
            let (lo, hi, sg) = if a < b { (a, b, 1.0) } else { (b, a, -1.0) };
            s.get(&format!("L{}{}", lo + 1, hi + 1))
                .unwrap()
                .scale_re(sg)
        };
        for g in s.generators() {
            assert!(g.is_hermitian(1e-15));
            assert_eq!(g.trace(), re(0.0));
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    for m in k + 1..n {
                        let lhs = l(i, j).comm(&l(k, m));
                        let mut rhs = ComplexMatrix::zeros(n);
                        for st in 0..n {
                            for t in 0..n {
                                let cst = delta(i, k) * delta(j, st) * delta(m, t)
                                    - delta(i, m) * delta(j, st) * delta(k, t)
                                    - delta(j, k) * delta(i, st) * delta(m, t)
                                    + delta(j, m) * delta(i, st) * delta(k, t);
                                if cst != 0.0 {
                                    rhs += l(st, t).scale(c(0.0, cst));
                                }
                            }
                        }
                        assert!(close(&lhs, &rhs, 1e-14), "[L{i}{j}, L{k}{m}]");
                    }
                }
            }
        }
    }
}

#[test]
fn cartan_weyl_relations() {
    let cw = so5_cartan_weyl();
    let g = |k: &str| cw.get(k).unwrap().clone();
    assert!(close(&g("E3").comm(&g("E+")), &g("E+"), 1e-15));
    for (p, m) in [("E+", "E-"), ("F+", "F-"), ("U+", "U-"), ("V+", "V-")] {
        assert!(close(&g(m), &g(p).adjoint(), 1e-15), "{m} = {p}†");
    }
    // V− reconstructed as E_{−1,2} − E_{−2,1}
    let want = &ComplexMatrix::unit(5, 1, 4) - &ComplexMatrix::unit(5, 0, 3);
    assert!(close(&g("V-"), &want, 1e-15));
}

#[test]
fn so5_first_order_table() {
    // operator entries of the 5×5 first-order array, rows/cols (2,1,0,−1,−2)
    let table: [[(&str, f64); 5]; 5] = [
        [
            ("E3", 1.0),
            ("U+", 1.0),
            ("E+", 1.0),
            ("V+", 1.0),
            ("0", 0.0),
        ],
        [
            ("U-", 1.0),
            ("F3", 1.0),
            ("F+", 1.0),
            ("0", 0.0),
            ("V+", -1.0),
        ],
        [
            ("E-", 1.0),
            ("F-", 1.0),
            ("0", 0.0),
            ("F+", -1.0),
            ("E+", -1.0),
        ],
        [
            ("V-", 1.0),
            ("0", 0.0),
            ("F-", -1.0),
            ("F3", -1.0),
            ("U+", -1.0),
        ],
        [
            ("0", 0.0),
            ("V-", -1.0),
            ("E-", -1.0),
            ("U-", -1.0),
            ("E3", -1.0),
        ],
    ];
    let cw = so5_cartan_weyl();
    let asm = so5_t1_assembly();
    for (r, row) in table.iter().enumerate() {
        for (col, &(name, sign)) in row.iter().enumerate() {
            let want = match cw.get(name) {
                Some(m) => m.scale_re(sign),
                None => ComplexMatrix::zeros(5),
            };
            assert!(close(&asm[r][col], &want, 1e-15), "entry ({r},{col})");
        }
    }
}

#[test]
fn permutation_identities() {
    let s = spin_matrices(1).unwrap();
    let mut p2 = ComplexMatrix::identity(4);
    for g in s.generators() {
        let sigma = g.scale_re(2.0);
        p2 += kron(&sigma, &sigma);
    }
    assert!(close(&permutation_op(2), &p2.scale_re(0.5), 1e-15));

    let lam = gell_mann();
    let mut p3 = ComplexMatrix::identity(9).scale_re(1.0 / 3.0);
    for l in lam.generators() {
        p3 += kron(l, l).scale_re(0.5);
    }
    assert!(close(&permutation_op(3), &p3, 1e-14));
}

#[test]
fn a_n_squares() {
    for n in [5, 6] {
        let a = a_n_op(n).unwrap();
        assert!(close(&a.matmul(&a), &a.scale_re(n as f64), 1e-15));
    }
}

proptest! {
    #[test]
    fn permutation_swaps_product_vectors(
        u in prop::collection::vec(-1.0f64..1.0, 6),
        v in prop::collection::vec(-1.0f64..1.0, 6),
    ) {
        let uc: Vec<C64> = u.chunks(2).map(|p| c(p[0], p[1])).collect();
        let vc: Vec<C64> = v.chunks(2).map(|p| c(p[0], p[1])).collect();
        let p = permutation_op(3);
        let out = p.apply(&matcore::vector::kron_vec(&uc, &vc));
        let want = matcore::vector::kron_vec(&vc, &uc);
        prop_assert!(matcore::vector::max_abs(&matcore::vector::sub(&out, &want)) < 1e-15);
    }
}
