use std::f64::consts::PI;

use clap::Subcommand;
use scenarios::*;

use crate::{Algebra, Common, JsonReport, UsageError};

#[derive(Debug, Subcommand)]
pub enum ScenarioCmd {
    /// Block reduction of a two-site level-1 operator.
    #[command(allow_negative_numbers = true)]
    Reduce {
        /// su2 (two spins) or su3 (two quarks).
        #[arg(long, value_enum, default_value_t = Algebra::Su2)]
        algebra: Algebra,
        /// First site weight (u for su3).
        #[arg(long, default_value_t = 1.0)]
        mu: f64,
        /// Second site weight (v for su3).
        #[arg(long, default_value_t = 1.0)]
        nu: f64,
        #[arg(long, default_value_t = 1.0)]
        lam: f64,
        #[command(flatten)]
        common: Common,
    },
    /// NMR singlet-triplet spectrum.
    #[command(allow_negative_numbers = true)]
    Nmr {
        #[arg(long, default_value_t = 2.0)]
        omega0: f64,
        #[arg(long, default_value_t = 1.0)]
        gamma: f64,
        #[arg(long, default_value_t = 0.0)]
        b1: f64,
        #[arg(long, default_value_t = 1.0)]
        b3: f64,
        #[arg(long, default_value_t = 1.0)]
        mu1: f64,
        #[arg(long, default_value_t = 0.0)]
        mu2: f64,
        #[arg(long, default_value_t = 0.0)]
        h: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Berry phases of the driven two-spin states (default tol 1e-5).
    #[command(allow_negative_numbers = true)]
    Berry {
        #[arg(long, default_value_t = PI / 3.0)]
        theta: f64,
        #[arg(long, default_value_t = 1.0)]
        omega0: f64,
        #[arg(long, default_value_t = 10_000)]
        steps: usize,
        #[command(flatten)]
        common: Common,
    },
    /// S-wave / P-wave transitions.
    #[command(allow_negative_numbers = true)]
    Sc {
        #[arg(long, default_value_t = 0.0)]
        lam1: f64,
        #[arg(long, default_value_t = 0.5)]
        lam2: f64,
        #[arg(long, default_value_t = 1.0)]
        hv: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Octet transitions of the quark-antiquark singlet.
    #[command(allow_negative_numbers = true)]
    Octet {
        #[arg(long, default_value_t = -1.5)]
        mu1: f64,
        #[arg(long, default_value_t = 0.0)]
        mu2: f64,
        #[arg(long, default_value_t = 0.5)]
        h: f64,
        #[arg(long, default_value_t = 0.0)]
        f: f64,
        #[command(flatten)]
        common: Common,
    },
    /// J^2 on spin 1/2 x spin 1/2 x l.
    #[command(allow_negative_numbers = true)]
    Jsq {
        #[arg(long, default_value_t = 1.0)]
        u1: f64,
        #[arg(long, default_value_t = 1.0)]
        u3: f64,
        #[arg(long, default_value_t = 0.0)]
        h: f64,
        /// Twice l.
        #[arg(long, default_value_t = 1)]
        two_l: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Rare-gas spin Hamiltonian and its compatible J^2.
    #[command(allow_negative_numbers = true)]
    Raregas {
        #[arg(long, default_value_t = 1.0)]
        a: f64,
        #[arg(long, default_value_t = 0.0)]
        b: f64,
        #[arg(long, default_value_t = 1)]
        l: usize,
        #[arg(long, default_value_t = 1.0)]
        u3: f64,
        #[arg(long, default_value_t = 0.3)]
        h: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Happer degeneracy (S = 1) or the S = 1/2 frequencies.
    #[command(allow_negative_numbers = true)]
    Happer {
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 1.0)]
        x: f64,
        /// 2 for S = 1, 1 for S = 1/2.
        #[arg(long, default_value_t = 2)]
        two_s: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Three-spin extended Breit-Rabi model.
    #[command(allow_negative_numbers = true)]
    Xbr {
        #[arg(long, default_value_t = 1.0)]
        a: f64,
        #[arg(long, default_value_t = 1.0)]
        b: f64,
        #[arg(long, default_value_t = 1.0)]
        x: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Open Lipatov chain.
    Lipatov {
        #[arg(long, default_value_t = 2)]
        sites: usize,
        /// 1 for spin 1/2; omit for SO(6) vector sites.
        #[arg(long)]
        two_s: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Haldane-Shastry H2 and its Yangian symmetry.
    Hs {
        #[arg(long, default_value_t = 4)]
        sites: usize,
        #[command(flatten)]
        common: Common,
    },
}

impl ScenarioCmd {
    pub fn common(&self) -> &Common {
        use ScenarioCmd::*;
        match self {
            Reduce { common, .. }
            | Nmr { common, .. }
            | Berry { common, .. }
            | Sc { common, .. }
            | Octet { common, .. }
            | Jsq { common, .. }
            | Raregas { common, .. }
            | Happer { common, .. }
            | Xbr { common, .. }
            | Lipatov { common, .. }
            | Hs { common, .. } => common,
        }
    }
}

fn table_lines(rep: &mut JsonReport, t: &TransitionTable) {
    for row in &t.rows {
        let terms: Vec<String> = row
            .output
            .iter()
            .map(|(s, z)| format!("({:+.6}{:+.6}i) {s}", z.re, z.im))
            .collect();
        let rhs = if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        };
        rep.lines.push(format!(
            "{} {} -> {rhs}   [outside {:.1e}]",
            t.operator, row.input, row.residual
        ));
    }
}

pub fn run(cmd: &ScenarioCmd) -> Result<JsonReport, UsageError> {
    let tol = cmd.common().tol.unwrap_or(1e-9);
    match cmd {
        ScenarioCmd::Reduce {
            algebra,
            mu,
            nu,
            lam,
            ..
        } => {
            let mut rep = JsonReport::new("scenario reduce");
            rep.param("algebra", format!("{algebra:?}").to_lowercase());
            rep.param("mu", mu);
            rep.param("nu", nu);
            rep.param("lam", lam);
            let (r, scalar) = match algebra {
                Algebra::Su2 => (reduce_two_spin(*mu, *nu, *lam)?, 0.75),
                Algebra::Su3 => (reduce_su3(*mu, *nu, *lam)?, 1.0 / 3.0),
                _ => return Err(UsageError("reduce supports su2 and su3".into())),
            };
            rep.check("off-block leakage", r.leakage, tol);
            rep.check(
                format!("sum Y^2 - {scalar:.4}"),
                r.y_squared_deviation(scalar),
                tol,
            );
            rep.check("blocks vs rescaled generators", r.closed_form_gap, tol);
            rep.check("block closure", r.closure_residual, tol);
            rep.note("|mu nu - lam^2|", r.condition_gap);
            rep.note("sum Y^2 (0,0) entry", r.y_squared.get(0, 0).re);
            rep.note("rho re", r.rho.re);
            rep.note("rho im", r.rho.im);
            Ok(rep)
        }
        ScenarioCmd::Nmr {
            omega0,
            gamma,
            b1,
            b3,
            mu1,
            mu2,
            h,
            ..
        } => {
            let p = NmrParams {
                omega0: *omega0,
                gamma: *gamma,
                b1: *b1,
                b3: *b3,
                mu1: *mu1,
                mu2: *mu2,
                h: *h,
            };
            let mut rep = JsonReport::new("scenario nmr");
            for (k, v) in [
                ("omega0", omega0),
                ("gamma", gamma),
                ("b1", b1),
                ("b3", b3),
                ("mu1", mu1),
                ("mu2", mu2),
                ("h", h),
            ] {
                rep.param(k, v);
            }
            let s = nmr_spectrum(&p, 1e-12)?;
            rep.check("hermitian defect", s.hamiltonian.hermitian_defect(), 1e-12);
            if let Some(g) = s.closed_form_gap() {
                rep.check("B1 = 0 closed form", g, tol);
            }
            let q = nmr_quartic(&p);
            rep.check(
                "quartic coefficients (relative)",
                q.relative_gap(),
                tol.max(1e-8),
            );
            rep.note("omega", p.omega());
            rep.spectrum("H", &s.eigenvalues);
            Ok(rep)
        }
        ScenarioCmd::Berry {
            theta,
            omega0,
            steps,
            common,
        } => {
            let tol = common.tol.unwrap_or(1e-5);
            let mut rep = JsonReport::new("scenario berry");
            rep.param("theta", theta);
            rep.param("omega0", omega0);
            rep.param("steps", steps);
            for ph in berry_phase(*theta, *omega0, *steps)? {
                rep.check(
                    format!("{} numeric - closed", ph.label),
                    (ph.numeric - ph.closed).abs(),
                    tol,
                );
                rep.note(format!("{} phase", ph.label), ph.numeric);
            }
            Ok(rep)
        }
        ScenarioCmd::Sc { lam1, lam2, hv, .. } => {
            let mut rep = JsonReport::new("scenario sc");
            rep.param("lam1", lam1);
            rep.param("lam2", lam2);
            rep.param("hv", hv);
            let r = sc_transition(*lam1, *lam2, *hv)?;
            rep.check(
                "<Phi|G phi> - closed",
                (r.s_to_p.re - r.closed.0).abs() + r.s_to_p.im.abs(),
                tol,
            );
            rep.check(
                "<phi|G Phi> - closed",
                (r.p_to_s.re - r.closed.1).abs() + r.p_to_s.im.abs(),
                tol,
            );
            for row in &r.table.rows {
                rep.check(
                    format!("G {} outside the pair", row.input),
                    row.residual,
                    tol,
                );
            }
            rep.lines.push(format!("direction: {:?}", r.direction));
            table_lines(&mut rep, &r.table);
            Ok(rep)
        }
        ScenarioCmd::Octet { mu1, mu2, h, f, .. } => {
            let mut rep = JsonReport::new("scenario octet");
            rep.param("mu1", mu1);
            rep.param("mu2", mu2);
            rep.param("h", h);
            rep.param("f", f);
            let r = su3_octet_transition(*mu1, *mu2, *h, *f)?;
            let singlet0 = r
                .level0
                .iter()
                .filter_map(|t| t.row("eta0'"))
                .map(|x| x.image_norm())
                .fold(0.0, f64::max);
            rep.check("level-0 annihilates the singlet", singlet0, tol);
            let on_singlet = r
                .tables
                .iter()
                .filter_map(|t| t.row("eta0'"))
                .map(|x| x.image_norm())
                .fold(0.0, f64::max);
            rep.note("largest level-1 image of the singlet", on_singlet);
            if (mu1 - mu2 - 3.0 * h).abs() < 1e-12 {
                rep.check("mu1-mu2 = 3h: singlet annihilated", on_singlet, tol);
            }
            for t in &r.tables {
                if let Some(row) = t.row("eta0'") {
                    table_lines(
                        &mut rep,
                        &TransitionTable {
                            operator: t.operator.clone(),
                            rows: vec![row.clone()],
                        },
                    );
                }
            }
            Ok(rep)
        }
        ScenarioCmd::Jsq {
            u1, u3, h, two_l, ..
        } => {
            let mut rep = JsonReport::new("scenario jsq");
            rep.param("u1", u1);
            rep.param("u3", u3);
            rep.param("h", h);
            rep.param("two_l", two_l);
            let r = j2_spectrum(*u1, *u3, *h, *two_l, tol)?;
            rep.absorb("", &r.report);
            if let Some(g) = r.spectrum.closed_form_gap() {
                rep.check("closed-form eigenvalues", g, tol);
            }
            if let (Some(a), Some(b)) = (r.sin_phi, r.sin_phi_closed) {
                rep.check("sin(phi) - closed", (a - b).abs(), tol);
                rep.note("sin(phi)", a);
            }
            rep.spectrum("J^2", &r.spectrum.eigenvalues);
            Ok(rep)
        }
        ScenarioCmd::Raregas { a, b, l, u3, h, .. } => {
            let mut rep = JsonReport::new("scenario raregas");
            for (k, v) in [("a", a), ("b", b), ("u3", u3), ("h", h)] {
                rep.param(k, v);
            }
            rep.param("l", l);
            let s = rare_gas(*a, *b, *l)?;
            rep.check(
                "closed-form eigenvalues",
                s.closed_form_gap().unwrap_or(f64::MAX),
                tol,
            );
            let i2 = {
                let space = matcore::TensorSpace::new(vec![2, 2, 2 * l + 1])?;
                let mut total = matcore::ComplexMatrix::zeros(space.total_dim());
                let gens = [
                    liegen::spin_matrices(1)?,
                    liegen::spin_matrices(1)?,
                    liegen::spin_matrices(2 * l)?,
                ];
                let mut comps = vec![matcore::ComplexMatrix::zeros(space.total_dim()); 3];
                for (site, g) in gens.iter().enumerate() {
                    for (k, m) in g.generators().iter().enumerate() {
                        comps[k] += space.embed(m, site)?;
                    }
                }
                for m in &comps {
                    total += m.matmul(m);
                }
                total
            };
            rep.check("[H, I^2]", s.hamiltonian.comm(&i2).max_abs(), tol);
            match rare_gas_compatible_u1(*a, *b, *l, *u3, *h) {
                Some(u1) => {
                    rep.note("compatible u1", u1);
                    rep.check(
                        "[H, J^2] at the compatible u1",
                        rare_gas_commutator(*a, *b, *l, u1, *u3, *h)?,
                        tol,
                    );
                }
                None => rep
                    .lines
                    .push("no real u1 makes J^2 commute with H here".into()),
            }
            rep.spectrum("H", &s.eigenvalues);
            Ok(rep)
        }
        ScenarioCmd::Happer { k, x, two_s, .. } => {
            let mut rep = JsonReport::new("scenario happer");
            rep.param("k", k);
            rep.param("x", x);
            rep.param("two_s", two_s);
            match two_s {
                2 => {
                    let r = happer(*k, *x)?;
                    rep.check(
                        "hermitian defect",
                        r.spectrum.hamiltonian.hermitian_defect(),
                        1e-12,
                    );
                    rep.note("dim E(-1/2)", r.degenerate_dim as f64);
                    if x.abs() == 1.0 {
                        rep.check(
                            "|dim E(-1/2) - (2K+1)|",
                            (r.degenerate_dim as f64 - (2 * k + 1) as f64).abs(),
                            0.5,
                        );
                        rep.check(
                            "family residual and overlap deficit",
                            r.max_family_residual(),
                            tol,
                        );
                    }
                    if let (0.0, Some(g)) = (*x, r.spectrum.closed_form_gap()) {
                        rep.check("x = 0 coupled spectrum", g, tol);
                    }
                    rep.check(
                        "J+- off-family leakage",
                        r.max_transition_leakage(),
                        tol.max(1e-8),
                    );
                    rep.check("J+- eigenspace containment", r.containment, tol.max(1e-8));
                    rep.note("leakage with unit cross term", r.literal_leakage);
                    for t in &r.transitions {
                        table_lines(&mut rep, t);
                    }
                    rep.spectrum("H", &r.spectrum.eigenvalues);
                }
                1 => {
                    let r = happer_half(*k, *x)?;
                    rep.check(
                        "omega_m spectrum",
                        r.spectrum.closed_form_gap().unwrap_or(f64::MAX),
                        tol,
                    );
                    rep.check(
                        "largest discriminant (must be < 0)",
                        r.max_discriminant,
                        0.0,
                    );
                    for (m, w) in &r.omega {
                        rep.note(format!("omega m={m}"), *w);
                    }
                    rep.spectrum("H", &r.spectrum.eigenvalues);
                }
                _ => return Err(UsageError("--two-s must be 1 or 2".into())),
            }
            Ok(rep)
        }
        ScenarioCmd::Xbr { a, b, x, .. } => {
            let mut rep = JsonReport::new("scenario xbr");
            rep.param("a", a);
            rep.param("b", b);
            rep.param("x", x);
            let r = extended_breit_rabi(*a, *b, *x)?;
            rep.check(
                "hermitian defect",
                r.spectrum.hamiltonian.hermitian_defect(),
                1e-12,
            );
            if x.abs() == 1.0 {
                for s in &r.printed {
                    rep.check(
                        format!("stated m={} eigen residual", s.label),
                        s.residual,
                        tol,
                    );
                    rep.note(format!("stated m={} <S1z>", s.label), s.sz1);
                }
                for s in &r.corrected {
                    rep.note(format!("rebuilt m={} eigen residual", s.label), s.residual);
                    rep.note(format!("rebuilt m={} <S1z>", s.label), s.sz1);
                }
            }
            rep.spectrum("H", &r.spectrum.eigenvalues);
            Ok(rep)
        }
        ScenarioCmd::Lipatov { sites, two_s, .. } => {
            let site = match two_s {
                Some(t) => LipatovSite::from_two_s(*t)?,
                None => LipatovSite::So6Vector,
            };
            let mut rep = JsonReport::new("scenario lipatov");
            rep.param("sites", sites);
            rep.param("site", format!("{site:?}"));
            let r = lipatov_chain(*sites, site)?;
            rep.absorb("", &r.report);
            for j in 0..=5 {
                let (n, d) = harmonic(j);
                rep.lines.push(format!("h({j}) = {n}/{d}"));
            }
            Ok(rep)
        }
        ScenarioCmd::Hs { sites, .. } => {
            let mut rep = JsonReport::new("scenario hs");
            rep.param("sites", sites);
            let (h, r) = yangian::haldane_shastry_h2(*sites, cmd.common().tol.unwrap_or(1e-8))?;
            rep.check("hermitian defect", h.hermitian_defect(), 1e-12);
            rep.absorb("", &r);
            Ok(rep)
        }
    }
}
