use matcore::vector::{kron_vec, normalized};
use matcore::{hermitian_eigen, ComplexMatrix, TensorSpace, C64};
use yangian::VerificationReport;

use crate::spins::{add, cross, dot, ladders, scaled, spin_on, square, Vec3};
use crate::{Predicted, ScenarioError, SpectrumResult};

/// Spin sites `(½, ½, l)` with `J = Σ u_i S_i + ih Σ_{i<j} S_i × S_j`
/// and `u₂ = u₁ + u₃`. Returns the space, the three site spins and `J`.
pub fn j2_operator(
    u1: f64,
    u3: f64,
    h: f64,
    two_l: usize,
) -> Result<(TensorSpace, [Vec3; 3], Vec3), ScenarioError> {
    if two_l == 0 {
        return Err(ScenarioError::InvalidParameter("l must be positive".into()));
    }
    let space = TensorSpace::new(vec![2, 2, two_l + 1])?;
    let s = [
        spin_on(&space, 0, 1)?,
        spin_on(&space, 1, 1)?,
        spin_on(&space, 2, two_l)?,
    ];
    let u = [u1, u1 + u3, u3];
    let mut j = scaled(&s[0], u[0]);
    for k in 1..3 {
        j = add(&j, &scaled(&s[k], u[k]));
    }
    for a in 0..3 {
        for b in a + 1..3 {
            let x = cross(&s[a], &s[b]);
            j = std::array::from_fn(|m| &j[m] + &x[m].scale(matcore::I * h));
        }
    }
    Ok((space, s, j))
}

#[derive(Clone, Debug)]
pub struct J2Result {
    /// Spectrum of `J²`.
    pub spectrum: SpectrumResult,
    /// `sin φ` read off the upper eigenvector of the `l` doublet.
    pub sin_phi: Option<f64>,
    /// `2√L(u₃² − h²)/√P`; `None` when the doublet is degenerate.
    pub sin_phi_closed: Option<f64>,
    pub report: VerificationReport,
}

fn closed_eigenvalues(u1: f64, u3: f64, h: f64, two_l: usize) -> (Vec<Predicted>, f64) {
    let l = two_l as f64 / 2.0;
    let ll = l * (l + 1.0);
    let u2 = u1 + u3;
    let common = 0.75 * (u1 * u1 + u2 * u2) + ll * u3 * u3 + 0.5 * u1 * u2 - h * h * (ll + 0.25);
    let p = (2.0 * u1 * u1 - u3 * u3 - h * h * (2.0 * ll - 0.5)).powi(2)
        + 4.0 * ll * (u3 * u3 - h * h).powi(2);
    let base = u1 * u1 + (ll + 0.25) * u3 * u3 - h * h * (ll + 0.5);
    let mut out = vec![Predicted::new(
        "l+1",
        common + l * (u2 * u3 + u1 * u3),
        two_l + 3,
    )];
    if two_l >= 2 {
        out.push(Predicted::new(
            "l-1",
            common - (l + 1.0) * (u1 * u3 + u2 * u3),
            two_l - 1,
        ));
    }
    out.push(Predicted::new("l+", base + 0.5 * p.sqrt(), two_l + 1));
    out.push(Predicted::new("l-", base - 0.5 * p.sqrt(), two_l + 1));
    (out, p)
}

/// `Φ¹`: the triplet coupled with `l` to `|l, l⟩`; `Φ²`: the singlet times
/// `|l, l⟩`. Phases put a positive weight on `|1,1⟩|l, l−1⟩`.
fn doublet(s: &[Vec3; 3], two_l: usize) -> (Vec<C64>, Vec<C64>) {
    let up = matcore::vector::basis(2, 0);
    let dn = matcore::vector::basis(2, 1);
    let orb = |k: usize| matcore::vector::basis(two_l + 1, k);
    let t11 = kron_vec(&up, &up);
    let t10 = normalized(&matcore::vector::add(
        &kron_vec(&up, &dn),
        &kron_vec(&dn, &up),
    ));
    let s00 = normalized(&matcore::vector::sub(
        &kron_vec(&up, &dn),
        &kron_vec(&dn, &up),
    ));
    let a = kron_vec(&t11, &orb(1));
    let b = kron_vec(&t10, &orb(0));
    let g = add(&add(&s[0], &s[1]), &s[2]);
    let (gp, _) = ladders(&g);
    let top = kron_vec(&t11, &orb(0));
    let p = matcore::vector::vdot(&top, &gp.apply(&a));
    let q = matcore::vector::vdot(&top, &gp.apply(&b));
    let phi1 = normalized(&matcore::vector::sub(
        &matcore::vector::scale(&a, q),
        &matcore::vector::scale(&b, p),
    ));
    (phi1, kron_vec(&s00, &orb(0)))
}

/// Spectrum of `J²` on `½ ⊗ ½ ⊗ l` under `u₂ = u₁ + u₃`, with the closed
/// forms, the `l` doublet mixing angle and the symmetry commutators.
pub fn j2_spectrum(
    u1: f64,
    u3: f64,
    h: f64,
    two_l: usize,
    tol: f64,
) -> Result<J2Result, ScenarioError> {
    let (_, s, j) = j2_operator(u1, u3, h, two_l)?;
    let j2 = square(&j);
    let mut report = VerificationReport::new("j2", tol);
    report.check("hermitian defect", j2.hermitian_defect());
    let total = add(&add(&s[0], &s[1]), &s[2]);
    let i2 = square(&total);
    report.check("[I^2, J^2]", i2.comm(&j2).max_abs());
    report.check("[J^2, I_z]", j2.comm(&total[2]).max_abs());
    report.note("[J^2, J_z]", j2.comm(&j[2]).max_abs());

    let (phi1, phi2) = doublet(&s, two_l);
    let cols = [phi1, phi2];
    let block = ComplexMatrix::from_fn(2, |r, c| {
        matcore::vector::vdot(&cols[r], &j2.apply(&cols[c]))
    });
    let mut worst: f64 = 0.0;
    for k in 0..2 {
        let img = j2.apply(&cols[k]);
        let back =
            matcore::vector::combo(&[(block.get(0, k), &cols[0]), (block.get(1, k), &cols[1])]);
        worst = worst.max(matcore::vector::norm(&matcore::vector::sub(&img, &back)));
    }
    report.check("doublet closure", worst);

    let (closed, p) = closed_eigenvalues(u1, u3, h, two_l);
    let ll = two_l as f64 / 2.0 * (two_l as f64 / 2.0 + 1.0);
    let (sin_phi, sin_phi_closed) = if p.sqrt() > 1e-12 {
        let e = hermitian_eigen(&block, 1e-14)?;
        let v = e.vector(1);
        let ph = if v[0].norm() > 1e-14 {
            v[0] / v[0].norm()
        } else {
            v[1] / v[1].norm()
        };
        let (x, y) = ((v[0] / ph).re, (v[1] / ph).re);
        (
            Some(2.0 * x * y),
            Some(2.0 * ll.sqrt() * (u3 * u3 - h * h) / p.sqrt()),
        )
    } else {
        (None, None)
    };

    if two_l == 1 {
        // the (φ′, φ) basis where the doublet block is written out explicitly
        let u2 = u1 + u3;
        let a =
            0.75 * (u1 * u1 + u2 * u2 + u3 * u3) + 0.5 * u1 * u2 - u2 * u3 - u1 * u3 - 1.75 * h * h;
        let d = 0.75 * (u1 - u2).powi(2) + 0.75 * u3 * u3 - 0.75 * h * h;
        let off = 3f64.sqrt() / 2.0 * (u3 * u3 - h * h);
        let want = ComplexMatrix::from_real_rows(&[&[a, off], &[off, d]])?;
        // φ′ = −Φ¹ and φ = −Φ² here, so the block is unchanged
        report.check("spin-1/2 block", block.dist(&want));
    }

    let spectrum = SpectrumResult::diagonalize(j2, tol.max(1e-12))?.with_closed_form(closed);
    Ok(J2Result {
        spectrum,
        sin_phi,
        sin_phi_closed,
        report,
    })
}

/// `H = −a L·S₁ − b S₁·S₂` on `½ ⊗ ½ ⊗ l`.
fn rare_gas_h(a: f64, b: f64, two_l: usize) -> Result<ComplexMatrix, ScenarioError> {
    let space = TensorSpace::new(vec![2, 2, two_l + 1])?;
    let s1 = spin_on(&space, 0, 1)?;
    let s2 = spin_on(&space, 1, 1)?;
    let l = spin_on(&space, 2, two_l)?;
    Ok(&dot(&l, &s1).scale_re(-a) - &dot(&s1, &s2).scale_re(b))
}

/// Spectrum of the rare-gas spin Hamiltonian for integer `l ≥ 1`.
pub fn rare_gas(a: f64, b: f64, l: usize) -> Result<SpectrumResult, ScenarioError> {
    if a == 0.0 {
        return Err(ScenarioError::InvalidParameter("a must be nonzero".into()));
    }
    if l == 0 {
        return Err(ScenarioError::InvalidParameter(
            "l must be at least 1".into(),
        ));
    }
    let h = rare_gas_h(a, b, 2 * l)?;
    let lf = l as f64;
    let ll = lf * (lf + 1.0);
    let root = (ll * a * a + (a / 2.0 - b).powi(2)).sqrt();
    Ok(
        SpectrumResult::diagonalize(h, 1e-13)?.with_closed_form(vec![
            Predicted::new("l+1", -0.5 * (lf * a + b / 2.0), 2 * l + 3),
            Predicted::new("l-1", 0.5 * ((lf + 1.0) * a - b / 2.0), 2 * l - 1),
            Predicted::new("l+", (a + b) / 4.0 + 0.5 * root, 2 * l + 1),
            Predicted::new("l-", (a + b) / 4.0 - 0.5 * root, 2 * l + 1),
        ]),
    )
}

/// The `u₁ ≥ 0` for which `J²` commutes with the rare-gas Hamiltonian:
/// `u₁² = (1 − λ)(u₃² − h²) + h²(L + ¼)` with `λ = b/a`. `None` when the
/// right side is negative.
pub fn rare_gas_compatible_u1(a: f64, b: f64, l: usize, u3: f64, h: f64) -> Option<f64> {
    let ll = (l * (l + 1)) as f64;
    let sq = (1.0 - b / a) * (u3 * u3 - h * h) + h * h * (ll + 0.25);
    (sq >= 0.0).then(|| sq.sqrt())
}

/// `‖[H, J²]‖_max` for the rare-gas `H` and the `J²` of [`j2_operator`].
pub fn rare_gas_commutator(
    a: f64,
    b: f64,
    l: usize,
    u1: f64,
    u3: f64,
    h: f64,
) -> Result<f64, ScenarioError> {
    let ham = rare_gas_h(a, b, 2 * l)?;
    let (_, _, j) = j2_operator(u1, u3, h, 2 * l)?;
    Ok(ham.comm(&square(&j)).max_abs())
}
