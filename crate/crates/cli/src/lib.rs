//! Command-line front end: verification runs, scenarios and the full
//! acceptance suite, printed as text or as a JSON report.

pub mod report;
mod scenario;
pub mod suite;

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use matcore::{c, TensorSpace, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use report::{JsonReport, Note, Residual, Spectrum, SCHEMA_VERSION};
pub use scenario::ScenarioCmd;
pub use suite::{run_criterion, run_suite, Criterion, CriterionResult, SuiteConfig, CRITERIA};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "yangcheck",
    about = "Yangian realizations, R-matrices and their applications, checked numerically"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Tolerance for asserted residuals (default 1e-9; the suite uses
    /// per-criterion defaults unless this is given).
    #[arg(long)]
    pub tol: Option<f64>,
    /// Seed for randomized parameter draws.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Print the JSON report instead of text.
    #[arg(long)]
    pub json: bool,
    /// Also write the JSON report to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl Common {
    fn tol(&self) -> f64 {
        self.tol.unwrap_or(1e-9)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Algebra {
    Su2,
    Su3,
    So5,
    So6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Family {
    Sun,
    Son,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generator catalog: closure and structure-constant checks.
    Generators {
        #[arg(long, value_enum, default_value_t = Algebra::Su2)]
        algebra: Algebra,
        /// Twice the spin for su2.
        #[arg(long, default_value_t = 1)]
        two_s: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Defining relations of a multi-site realization.
    #[command(allow_negative_numbers = true)]
    Verify {
        #[arg(long, value_enum, default_value_t = Algebra::Su2)]
        algebra: Algebra,
        #[arg(long, default_value_t = 2)]
        sites: usize,
        /// Site parameters, comma separated; drawn from the seed if absent.
        #[arg(long, value_delimiter = ',')]
        mu: Option<Vec<f64>>,
        /// su2 coupling as "re,im".
        #[arg(long, value_parser = parse_complex, default_value = "0,0.5")]
        coupling: C64,
        /// su3 coupling.
        #[arg(long, default_value_t = 0.25)]
        h: f64,
        /// Also check the simplified relations.
        #[arg(long)]
        simplified: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Yang-Baxter and RTT residuals.
    Rtt {
        #[arg(long, value_enum, default_value_t = Family::Sun)]
        family: Family,
        /// Auxiliary dimension.
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 1.0)]
        xi: f64,
        #[arg(long, default_value_t = 2)]
        sites: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Quantum determinant: series against closed forms, centrality.
    Qdet {
        #[arg(long, value_enum, default_value_t = Algebra::Su2)]
        algebra: Algebra,
        #[arg(long, default_value_t = 2)]
        sites: usize,
        #[command(flatten)]
        common: Common,
    },
    /// One application scenario.
    Scenario {
        #[command(subcommand)]
        which: ScenarioCmd,
    },
    /// The full acceptance battery.
    Suite {
        /// Run only criteria matching an id, key or group; repeatable.
        #[arg(long)]
        only: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
}

/// `"re,im"` or a plain real number.
pub fn parse_complex(s: &str) -> Result<C64, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let num = |t: &str| {
        t.parse::<f64>()
            .map_err(|e| format!("bad number {t:?}: {e}"))
    };
    match parts.as_slice() {
        [r] => Ok(c(num(r)?, 0.0)),
        [r, i] => Ok(c(num(r)?, num(i)?)),
        _ => Err(format!("expected \"re,im\", got {s:?}")),
    }
}

/// A usage-level failure: bad flags or parameters outside a model's domain.
#[derive(Debug)]
pub struct UsageError(pub String);

impl<E: std::error::Error> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

fn generators(algebra: Algebra, two_s: usize, common: &Common) -> Result<JsonReport, UsageError> {
    let set = match algebra {
        Algebra::Su2 => liegen::spin_matrices(two_s)?,
        Algebra::Su3 => liegen::su3_generators(),
        Algebra::So5 => liegen::so_n_generators(5)?,
        Algebra::So6 => liegen::so_n_generators(6)?,
    };
    let tol = common.tol();
    let mut rep = JsonReport::new("generators");
    rep.param("algebra", set.label());
    rep.param("count", set.len());
    rep.param("dim", set.dim());
    rep.check("closure", set.closure_residual(), tol);
    rep.check(
        "structure antisymmetry",
        set.structure().antisymmetry_defect(),
        tol,
    );
    rep.check("jacobi", set.structure().jacobi_defect(), tol);
    let herm = set
        .generators()
        .iter()
        .map(|g| g.hermitian_defect())
        .fold(0.0, f64::max);
    rep.note("hermitian defect", herm);
    let cas = set.casimir();
    let scalar = cas.get(0, 0).re;
    rep.check(
        "casimir is scalar",
        cas.dist(&matcore::ComplexMatrix::identity(set.dim()).scale_re(scalar)),
        tol,
    );
    rep.note("casimir", scalar);
    rep.lines
        .push(format!("generators: {}", set.names().join(" ")));
    Ok(rep)
}

fn draw_mu(seed: u64, n: usize) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| rng.gen_range(-2.0..2.0)).collect()
}

#[allow(clippy::too_many_arguments)]
fn verify(
    algebra: Algebra,
    sites: usize,
    mu: Option<Vec<f64>>,
    coupling: C64,
    h: f64,
    simplified: bool,
    common: &Common,
) -> Result<JsonReport, UsageError> {
    if sites == 0 {
        return Err(usage("--sites must be positive"));
    }
    let tol = common.tol();
    let mu = mu.unwrap_or_else(|| draw_mu(common.seed, sites));
    let real = match algebra {
        Algebra::Su2 => yangian::realize_su2(
            &vec![1; sites],
            &mu,
            &yangian::WScheme::su2_default(),
            coupling,
        )?,
        Algebra::Su3 => yangian::realize_su3(sites, &mu, &yangian::WScheme::su3_default(), h)?,
        Algebra::So5 => yangian::realize_so_n_bilocal(5, sites)?,
        Algebra::So6 => yangian::realize_so_n_bilocal(6, sites)?,
    };
    let mut rep = JsonReport::new("verify");
    rep.param("algebra", format!("{algebra:?}").to_lowercase());
    rep.param("sites", sites);
    if matches!(algebra, Algebra::Su2 | Algebra::Su3) {
        rep.param("mu", format!("{mu:?}"));
    }
    match algebra {
        Algebra::Su2 => rep.param("coupling", format!("{},{}", coupling.re, coupling.im)),
        Algebra::Su3 => rep.param("h", h),
        _ => {}
    }
    rep.absorb("", &yangian::verify_defining(&real, tol));
    if simplified {
        rep.absorb("simplified ", &yangian::verify_simplified(&real, tol)?);
    }
    Ok(rep)
}

fn rtt_cmd(
    family: Family,
    n: usize,
    xi: f64,
    sites: usize,
    common: &Common,
) -> Result<JsonReport, UsageError> {
    let tol = common.tol.unwrap_or(1e-10);
    let spec = match family {
        Family::Sun => rtt::RMatrixSpec::rational_sun(n)?,
        Family::Son => rtt::RMatrixSpec::rational_son(n, xi)?,
    };
    let mut rep = JsonReport::new("rtt");
    rep.param("family", format!("{family:?}").to_lowercase());
    rep.param("n", n);
    if family == Family::Son {
        rep.param("xi", xi);
    }
    let pts = [-2.0, -1.0, 0.0, 1.0, 2.0];
    let mut ybe: f64 = 0.0;
    for &u in &pts {
        for &v in &pts {
            ybe = ybe.max(rtt::ybe_residual(&spec, c(u, 0.1), c(v, -0.2)));
        }
    }
    rep.check("yang-baxter, 5x5 grid", ybe, tol);
    if family == Family::Sun {
        rep.param("sites", sites);
        let mono = rtt::monodromy(n, &TensorSpace::uniform(n, sites)?)?;
        let pairs = [
            (c(3.0, 0.0), c(1.5, 0.0)),
            (c(2.0, 1.0), c(-2.5, 0.0)),
            (c(0.5, 0.5), c(-1.0, 2.0)),
        ];
        let mut worst: f64 = 0.0;
        for (u, v) in pairs {
            worst = worst.max(rtt::rtt_residual(&spec, &mono, u, v)?);
        }
        rep.check("RTT", worst, tol);
    }
    Ok(rep)
}

fn qdet_cmd(algebra: Algebra, sites: usize, common: &Common) -> Result<JsonReport, UsageError> {
    let tol = common.tol.unwrap_or(1e-10);
    let d = match algebra {
        Algebra::Su2 => 2,
        Algebra::Su3 => 3,
        _ => return Err(usage("qdet supports su2 and su3")),
    };
    let mono = rtt::monodromy(d, &TensorSpace::uniform(d, sites)?)?;
    let (qd, real) = if d == 2 {
        (rtt::qdet_su2(&mono)?, rtt::su2_generators(&mono)?)
    } else {
        (rtt::qdet_su3(&mono)?, rtt::su3_generators(&mono)?)
    };
    let ops: Vec<_> = real
        .level0()
        .generators()
        .iter()
        .chain(real.level1())
        .cloned()
        .collect();
    let mut rep = JsonReport::new("qdet");
    rep.param("algebra", format!("{algebra:?}").to_lowercase());
    rep.param("sites", sites);
    rep.check("closed forms", qd.closed_form_gap(), tol);
    rep.check(
        "centrality",
        qd.centrality(&ops),
        common.tol.unwrap_or(1e-9),
    );
    for (k, cn) in qd.series.iter().enumerate() {
        rep.note(format!("C{k} trace / dim"), cn.trace().re / cn.dim() as f64);
    }
    Ok(rep)
}

fn suite_cmd(only: &[String], common: &Common) -> Result<(JsonReport, Vec<String>), UsageError> {
    for f in only {
        if !CRITERIA.iter().any(|c| c.matches(f)) {
            return Err(usage(format!("--only {f:?} matches no criterion")));
        }
    }
    let cfg = SuiteConfig {
        seed: common.seed,
        tol: common.tol,
    };
    let results = run_suite(&cfg, only);
    let mut rep = JsonReport::new("suite");
    rep.param("seed", common.seed);
    if let Some(t) = common.tol {
        rep.param("tol", t);
    }
    if !only.is_empty() {
        rep.param("only", only.join(","));
    }
    let mut lines = Vec::new();
    for r in &results {
        let tag = format!("{:02} {}", r.criterion.id, r.criterion.key);
        for x in &r.report.residuals {
            rep.residuals.push(Residual {
                name: format!("{tag}: {}", x.name),
                ..x.clone()
            });
        }
        for n in &r.report.notes {
            rep.note(format!("{tag}: {}", n.name), n.value);
        }
        lines.push(r.line());
    }
    let passed = results.iter().filter(|r| r.passed()).count();
    lines.push(format!("{passed}/{} criteria pass", results.len()));
    Ok((rep, lines))
}

fn check_common(common: &Common) -> Result<(), UsageError> {
    match common.tol {
        Some(t) if !(t > 0.0) => Err(usage("--tol must be positive")),
        _ => Ok(()),
    }
}

/// Parse `argv` (program name first), run, print, and return the exit
/// code: 0 when every asserted check passes, 1 when one fails, 2 on a
/// usage error.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let start = Instant::now();
    let outcome = dispatch(&cli.command);
    let (mut rep, summary, common) = match outcome {
        Ok(x) => x,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            return EXIT_USAGE;
        }
    };
    rep.wall_time_ms = start.elapsed().as_millis() as u64;
    if let Some(path) = &common.out {
        if let Err(e) = std::fs::write(path, rep.to_json()) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return EXIT_USAGE;
        }
    }
    // a closed pipe (e.g. `| head`) is not an error worth reporting
    let mut out = std::io::stdout().lock();
    let _ = if common.json {
        writeln!(out, "{}", rep.to_json())
    } else if summary.is_empty() {
        write!(out, "{}", rep.to_text())
    } else {
        summary.iter().try_for_each(|l| writeln!(out, "{l}"))
    };
    if rep.passed() {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

fn dispatch(cmd: &Command) -> Result<(JsonReport, Vec<String>, Common), UsageError> {
    let plain = |r: Result<JsonReport, UsageError>, common: &Common| {
        r.map(|x| (x, Vec::new(), common.clone()))
    };
    match cmd {
        Command::Generators {
            algebra,
            two_s,
            common,
        } => {
            check_common(common)?;
            plain(generators(*algebra, *two_s, common), common)
        }
        Command::Verify {
            algebra,
            sites,
            mu,
            coupling,
            h,
            simplified,
            common,
        } => {
            check_common(common)?;
            plain(
                verify(
                    *algebra,
                    *sites,
                    mu.clone(),
                    *coupling,
                    *h,
                    *simplified,
                    common,
                ),
                common,
            )
        }
        Command::Rtt {
            family,
            n,
            xi,
            sites,
            common,
        } => {
            check_common(common)?;
            plain(rtt_cmd(*family, *n, *xi, *sites, common), common)
        }
        Command::Qdet {
            algebra,
            sites,
            common,
        } => {
            check_common(common)?;
            plain(qdet_cmd(*algebra, *sites, common), common)
        }
        Command::Scenario { which } => {
            let common = which.common();
            check_common(common)?;
            plain(scenario::run(which), common)
        }
        Command::Suite { only, common } => {
            check_common(common)?;
            let (rep, lines) = suite_cmd(only, common)?;
            Ok((rep, lines, common.clone()))
        }
    }
}
