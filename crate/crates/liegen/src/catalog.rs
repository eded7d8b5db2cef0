use matcore::{c, re, ComplexMatrix, C64};

use crate::{AlgebraLabel, GeneratorSet, LieError};

/// Spin-`two_s/2` matrices `S1, S2, S3`, basis `m = s, s−1, …, −s`.
pub fn spin_matrices(two_s: usize) -> Result<GeneratorSet, LieError> {
    if two_s == 0 {
        return Err(LieError::InvalidSpin);
    }
    let d = two_s + 1;
    let s = two_s as f64 / 2.0;
    let m = |k: usize| s - k as f64;
    let mut sp = ComplexMatrix::zeros(d);
    for k in 1..d {
        let mk = m(k);
        sp = sp.with_entry(k - 1, k, re((s * (s + 1.0) - mk * (mk + 1.0)).sqrt()));
    }
    let sm = sp.adjoint();
    let s1 = (&sp + &sm).scale_re(0.5);
    let s2 = (&sp - &sm).scale(c(0.0, -0.5));
    let s3 = ComplexMatrix::real_diagonal(&(0..d).map(m).collect::<Vec<_>>());
    GeneratorSet::new(
        AlgebraLabel::Su2 { two_s },
        vec![s1, s2, s3],
        ["S1", "S2", "S3"].map(String::from).to_vec(),
    )
}

fn gell_mann_matrices() -> Vec<ComplexMatrix> {
    let z = re(0.0);
    let o = re(1.0);
    let i = c(0.0, 1.0);
    let m = |v: [C64; 9]| ComplexMatrix::from_vec(3, v.to_vec()).expect("3x3 literal");
    let r3 = 1.0 / 3f64.sqrt();
    vec![
        m([z, o, z, o, z, z, z, z, z]),
        m([z, -i, z, i, z, z, z, z, z]),
        m([o, z, z, z, -o, z, z, z, z]),
        m([z, z, o, z, z, z, o, z, z]),
        m([z, z, -i, z, z, z, i, z, z]),
        m([z, z, z, z, z, o, z, o, z]),
        m([z, z, z, z, z, -i, z, i, z]),
        ComplexMatrix::real_diagonal(&[r3, r3, -2.0 * r3]),
    ]
}

/// The eight Gell-Mann matrices `λ_1 … λ_8`, `tr(λ_a λ_b) = 2δ_ab`.
/// Their structure tensor is `2i·f` because `[λ_a, λ_b] = 2i f_abc λ_c`.
pub fn gell_mann() -> GeneratorSet {
    GeneratorSet::new(
        AlgebraLabel::Su3,
        gell_mann_matrices(),
        (1..=8).map(|k| format!("l{k}")).collect(),
    )
    .expect("Gell-Mann matrices are orthogonal")
}

/// Fundamental su(3) generators `F_μ = λ_μ / 2`, so `c = i f` with the
/// usual `f_123 = 1`.
pub fn su3_generators() -> GeneratorSet {
    GeneratorSet::new(
        AlgebraLabel::Su3,
        gell_mann_matrices()
            .iter()
            .map(|l| l.scale_re(0.5))
            .collect(),
        (1..=8).map(|k| format!("F{k}")).collect(),
    )
    .expect("F basis is orthogonal")
}

/// Ladder relabeling of eight su(3) components `X_1 … X_8`:
/// `I± = X1 ± iX2`, `U± = X6 ± iX7`, `V± = X4 ∓ iX5` (note the flipped
/// sign on V), `I3 = X3`, `I8` with `(√3/2)·I8 = X8`.
#[derive(Clone, Debug)]
pub struct Su3Ladders {
    pub i_plus: ComplexMatrix,
    pub i_minus: ComplexMatrix,
    pub u_plus: ComplexMatrix,
    pub u_minus: ComplexMatrix,
    pub v_plus: ComplexMatrix,
    pub v_minus: ComplexMatrix,
    pub i3: ComplexMatrix,
    pub i8: ComplexMatrix,
}

impl Su3Ladders {
    pub const NAMES: [&'static str; 8] = ["I+", "I-", "U+", "U-", "V+", "V-", "I3", "I8"];

    pub fn from_components(x: &[ComplexMatrix]) -> Self {
        assert_eq!(x.len(), 8, "su(3) needs eight components");
        let i = c(0.0, 1.0);
        Self {
            i_plus: &x[0] + &x[1].scale(i),
            i_minus: &x[0] - &x[1].scale(i),
            u_plus: &x[5] + &x[6].scale(i),
            u_minus: &x[5] - &x[6].scale(i),
            v_plus: &x[3] - &x[4].scale(i),
            v_minus: &x[3] + &x[4].scale(i),
            i3: x[2].clone(),
            i8: x[7].scale_re(2.0 / 3f64.sqrt()),
        }
    }

    /// In the order of [`Su3Ladders::NAMES`].
    pub fn as_array(&self) -> [&ComplexMatrix; 8] {
        [
            &self.i_plus,
            &self.i_minus,
            &self.u_plus,
            &self.u_minus,
            &self.v_plus,
            &self.v_minus,
            &self.i3,
            &self.i8,
        ]
    }

    pub fn get(&self, name: &str) -> Option<&ComplexMatrix> {
        Self::NAMES
            .iter()
            .position(|n| *n == name)
            .map(|k| self.as_array()[k])
    }
}

/// The explicit quark-basis ladder matrices (basis u, d, s):
/// single matrix units for the raising operators, `I3 = diag(1, −1, 0)`
/// and hypercharge `Y = diag(1, 1, −2)/3`.
#[derive(Clone, Debug)]
pub struct QuarkLadders {
    pub i_plus: ComplexMatrix,
    pub u_plus: ComplexMatrix,
    pub v_plus: ComplexMatrix,
    pub i3: ComplexMatrix,
    pub y: ComplexMatrix,
}

pub fn quark_ladders() -> QuarkLadders {
    QuarkLadders {
        i_plus: ComplexMatrix::unit(3, 0, 1),
        u_plus: ComplexMatrix::unit(3, 1, 2),
        v_plus: ComplexMatrix::unit(3, 2, 0),
        i3: ComplexMatrix::real_diagonal(&[1.0, -1.0, 0.0]),
        y: ComplexMatrix::real_diagonal(&[1.0 / 3.0, 1.0 / 3.0, -2.0 / 3.0]),
    }
}

/// so(n) generators `L_ab` (a < b, lexicographic), named `L12`, `L13`, …
pub fn so_n_generators(n: usize) -> Result<GeneratorSet, LieError> {
    if n != 5 && n != 6 {
        return Err(LieError::UnsupportedN(n));
    }
    let mut gens = Vec::new();
    let mut names = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let l = ComplexMatrix::zeros(n)
                .with_entry(a, b, c(0.0, -1.0))
                .with_entry(b, a, c(0.0, 1.0));
            gens.push(l);
            names.push(format!("L{}{}", a + 1, b + 1));
        }
    }
    GeneratorSet::new(AlgebraLabel::So(n), gens, names)
}

/// Basis labels of the 5-dimensional so(5) module, in storage order.
pub const SO5_LABELS: [i32; 5] = [-2, -1, 0, 1, 2];

fn so5_unit(a: i32, b: i32) -> ComplexMatrix {
    ComplexMatrix::unit(5, (a + 2) as usize, (b + 2) as usize)
}

/// `X_ab = E_ab − E_{−b,−a}` on the labeled basis (−2, …, 2).
pub fn cartan_weyl_entry(a: i32, b: i32) -> ComplexMatrix {
    &so5_unit(a, b) - &so5_unit(-b, -a)
}

/// The ten Cartan-Weyl operators of so(5) as matrix-unit differences.
/// `V−` is taken as the conjugate transpose of `V+`.
pub fn so5_cartan_weyl() -> GeneratorSet {
    let x = cartan_weyl_entry;
    let table = [
        ("E3", x(2, 2)),
        ("F3", x(1, 1)),
        ("E+", x(2, 0)),
        ("E-", x(0, 2)),
        ("F+", x(1, 0)),
        ("F-", x(0, 1)),
        ("U+", x(2, 1)),
        ("U-", x(1, 2)),
        ("V+", x(2, -1)),
        ("V-", x(-1, 2)),
    ];
    let (names, gens): (Vec<String>, Vec<ComplexMatrix>) =
        table.into_iter().map(|(n, m)| (n.to_string(), m)).unzip();
    GeneratorSet::new(AlgebraLabel::So(5), gens, names).expect("Cartan-Weyl units are orthogonal")
}

/// The 5×5 operator array `X_ab` with rows and columns in label order
/// (2, 1, 0, −1, −2). Subtracting `3/2·δ_ab` and scaling by ξ gives the
/// first-order monodromy coefficient in this basis.
pub fn so5_t1_assembly() -> Vec<Vec<ComplexMatrix>> {
    let order = [2, 1, 0, -1, -2];
    order
        .iter()
        .map(|&a| order.iter().map(|&b| cartan_weyl_entry(a, b)).collect())
        .collect()
}
