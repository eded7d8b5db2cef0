use num_complex::Complex64 as C64;

use crate::ComplexMatrix;

/// Coefficients of `det(xI − a)`, highest power first, via the
/// Faddeev-LeVerrier recursion. The leading entry is exactly 1.
pub fn char_poly_coeffs(a: &ComplexMatrix) -> Vec<C64> {
    let n = a.dim();
    let id = ComplexMatrix::identity(n);
    let mut coeffs = vec![C64::new(1.0, 0.0)];
    let mut m = ComplexMatrix::zeros(n);
    for k in 1..=n {
        m = &a.matmul(&m) + &id.scale(coeffs[k - 1]);
        let ck = -a.matmul(&m).trace() / k as f64;
        coeffs.push(ck);
    }
    coeffs
}

/// Horner evaluation, coefficients highest power first.
pub fn poly_eval(coeffs: &[C64], x: C64) -> C64 {
    coeffs
        .iter()
        .fold(C64::new(0.0, 0.0), |acc, &c| acc * x + c)
}

/// All complex roots of a polynomial (highest power first) by
/// Durand-Kerner iteration. Repeated roots converge only to about
/// `sqrt(eps)` relative accuracy.
pub fn poly_roots(coeffs: &[C64]) -> Vec<C64> {
    let lead = coeffs.iter().position(|c| c.norm() > 0.0);
    let Some(lead) = lead else { return Vec::new() };
    let monic: Vec<C64> = coeffs[lead..].iter().map(|c| c / coeffs[lead]).collect();
    let deg = monic.len() - 1;
    if deg == 0 {
        return Vec::new();
    }
    let radius = 1.0 + monic[1..].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let seed = C64::new(0.4, 0.9);
    let mut z: Vec<C64> = (0..deg)
        .map(|k| seed.powu(k as u32) * radius * 0.5)
        .collect();
    for _ in 0..2000 {
        let mut shift: f64 = 0.0;
        for i in 0..deg {
            let mut den = C64::new(1.0, 0.0);
            for j in 0..deg {
                if i != j {
                    den *= z[i] - z[j];
                }
            }
            if den.norm() == 0.0 {
                den = C64::new(1e-300, 0.0);
            }
            let step = poly_eval(&monic, z[i]) / den;
            z[i] -= step;
            shift = shift.max(step.norm());
        }
        if shift <= 1e-15 * radius {
            break;
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::re;

    #[test]
    fn small_cases() {
        assert_eq!(
            char_poly_coeffs(&ComplexMatrix::zeros(2)),
            vec![re(1.0), re(0.0), re(0.0)]
        );
        let s3 = ComplexMatrix::real_diagonal(&[1.0, -1.0]);
        let p = char_poly_coeffs(&s3);
        assert!(
            (p[0] - re(1.0)).norm() < 1e-15
                && p[1].norm() < 1e-15
                && (p[2] + re(1.0)).norm() < 1e-15
        );
    }

    #[test]
    fn roots_of_cubic() {
        // (x−1)(x+2)(x−3) = x³ − 2x² − 5x + 6
        let mut r: Vec<f64> = poly_roots(&[re(1.0), re(-2.0), re(-5.0), re(6.0)])
            .iter()
            .map(|z| z.re)
            .collect();
        r.sort_by(f64::total_cmp);
        for (got, want) in r.iter().zip([-2.0, 1.0, 3.0]) {
            assert!((got - want).abs() < 1e-12);
        }
    }
}
