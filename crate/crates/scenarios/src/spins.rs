use liegen::{levi_civita, spin_matrices};
use matcore::{ComplexMatrix, TensorSpace, I};

use crate::ScenarioError;

pub(crate) type Vec3 = [ComplexMatrix; 3];

/// `S_x, S_y, S_z` of spin `two_s/2` on `site`.
pub(crate) fn spin_on(
    space: &TensorSpace,
    site: usize,
    two_s: usize,
) -> Result<Vec3, ScenarioError> {
    let s = spin_matrices(two_s)?.embedded(site, space)?;
    let [x, y, z]: [ComplexMatrix; 3] = s.try_into().expect("three components");
    Ok([x, y, z])
}

pub(crate) fn dot(a: &Vec3, b: &Vec3) -> ComplexMatrix {
    &(&a[0].matmul(&b[0]) + &a[1].matmul(&b[1])) + &a[2].matmul(&b[2])
}

/// `(a × b)_n = ε_nlm a_l b_m`, operator order kept.
pub(crate) fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
    let dim = a[0].dim();
    std::array::from_fn(|n| {
        let mut out = ComplexMatrix::zeros(dim);
        for l in 0..3 {
            for m in 0..3 {
                let e = levi_civita(n, l, m);
                if e != 0.0 {
                    out += a[l].matmul(&b[m]).scale_re(e);
                }
            }
        }
        out
    })
}

pub(crate) fn add(a: &Vec3, b: &Vec3) -> Vec3 {
    std::array::from_fn(|k| &a[k] + &b[k])
}

pub(crate) fn scaled(a: &Vec3, s: f64) -> Vec3 {
    std::array::from_fn(|k| a[k].scale_re(s))
}

pub(crate) fn square(a: &Vec3) -> ComplexMatrix {
    dot(a, a)
}

/// `(S₊, S₋)`.
pub(crate) fn ladders(a: &Vec3) -> (ComplexMatrix, ComplexMatrix) {
    let iy = a[1].scale(I);
    (&a[0] + &iy, &a[0] - &iy)
}
