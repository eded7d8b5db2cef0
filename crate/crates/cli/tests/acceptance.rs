//! One PASS/FAIL line per acceptance criterion.
//!
//! Runs without the libtest harness so the lines always reach stdout.
//! Criteria 7 and 15 fail as stated; their checks are kept as written and
//! the run only errors if they start passing, or if anything else fails.

use cli::{run_suite, SuiteConfig};

const KNOWN_RED: [u8; 2] = [7, 15];

fn main() {
    let mut unexpected = Vec::new();
    for seed in [0u64, 11] {
        println!("acceptance, seed {seed}");
        for r in run_suite(&SuiteConfig { seed, tol: None }, &[]) {
            let red = KNOWN_RED.contains(&r.criterion.id);
            let tag = if red && !r.passed() {
                "  (known deviation)"
            } else {
                ""
            };
            println!("{}{tag}", r.line());
            if r.passed() == red {
                unexpected.push(format!("seed {seed}: criterion {}", r.criterion.id));
            }
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: 14 pass, 2 known deviations");
    } else {
        eprintln!(
            "acceptance: unexpected outcome for {}",
            unexpected.join(", ")
        );
        std::process::exit(1);
    }
}
