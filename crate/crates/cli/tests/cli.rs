use std::process::Command;

use cli::{run, run_criterion, JsonReport, SuiteConfig, CRITERIA, EXIT_FAIL, EXIT_OK, EXIT_USAGE};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_yangcheck"))
}

fn json_of(args: &[&str]) -> (JsonReport, i32) {
    let out = bin().args(args).arg("--json").output().unwrap();
    let rep: JsonReport = serde_json::from_slice(&out.stdout).expect("valid json report");
    (rep, out.status.code().unwrap())
}

fn argv(s: &str) -> Vec<String> {
    std::iter::once("yangcheck")
        .chain(s.split_whitespace())
        .map(String::from)
        .collect()
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(argv("verify --algebra su2 --sites 2 --tol 1e-9")),
        EXIT_OK
    );
    assert_eq!(run(argv("scenario berry --theta 0")), EXIT_OK);
    assert_eq!(run(argv("scenario xbr --a 1 --b 4")), EXIT_FAIL);
    assert_eq!(run(argv("verify --algebra su7")), EXIT_USAGE);
    assert_eq!(run(argv("verify --algebra su2 --tol -1")), EXIT_USAGE);
    assert_eq!(run(argv("suite --only nothing")), EXIT_USAGE);
    assert_eq!(run(argv("scenario lipatov --two-s 2")), EXIT_USAGE);
    assert_eq!(run(argv("--help")), EXIT_OK);
}

#[test]
fn tight_tolerance_fails() {
    assert_eq!(run(argv("suite --only rtt --tol 1e-15")), EXIT_FAIL);
    assert_eq!(run(argv("suite --only rtt")), EXIT_OK);
}

#[test]
fn json_round_trip() {
    let (rep, code) = json_of(&[
        "verify",
        "--algebra",
        "su2",
        "--sites",
        "2",
        "--tol",
        "1e-9",
    ]);
    assert_eq!(code, 0);
    assert_eq!(rep.schema_version, "1");
    assert!(rep.passed());
    assert!(!rep.residuals.is_empty());
    let back: JsonReport = serde_json::from_str(&rep.to_json()).unwrap();
    assert_eq!(back, rep);
}

#[test]
fn nmr_example_spectrum() {
    let (rep, code) = json_of(&[
        "scenario", "nmr", "--b1", "0", "--omega0", "2", "--gamma", "1", "--b3", "1", "--mu1", "1",
        "--mu2", "0", "--h", "0",
    ]);
    assert_eq!(code, 0);
    let ev = &rep.spectra.unwrap()[0].eigenvalues;
    for (a, b) in ev.iter().zip([-1.0, -0.5, 0.5, 1.0]) {
        assert!((a - b).abs() < 1e-9, "{ev:?}");
    }
}

#[test]
fn same_seed_same_report() {
    let strip = |mut r: JsonReport| {
        r.wall_time_ms = 0;
        r
    };
    let (a, _) = json_of(&["verify", "--algebra", "su3", "--sites", "2", "--seed", "5"]);
    let (b, _) = json_of(&["verify", "--algebra", "su3", "--sites", "2", "--seed", "5"]);
    assert_eq!(strip(a), strip(b));
    let cfg = SuiteConfig { seed: 3, tol: None };
    let c = &CRITERIA[0];
    assert_eq!(
        strip(run_criterion(c, &cfg).report),
        strip(run_criterion(c, &cfg).report)
    );
}

#[test]
fn out_file_matches_stdout() {
    let path = std::env::temp_dir().join(format!("yangcheck-{}.json", std::process::id()));
    let out = bin()
        .args(["scenario", "sc", "--json", "--out"])
        .arg(&path)
        .output()
        .unwrap();
    let file: JsonReport = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let printed: JsonReport = serde_json::from_slice(&out.stdout).unwrap();
    let _ = std::fs::remove_file(&path);
    assert_eq!(file, printed);
}
