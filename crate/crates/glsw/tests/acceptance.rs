//! One line per acceptance criterion, with its runtime.

use std::process::ExitCode;
use std::time::Instant;

use gls_core::suites::{run_criterion, SuiteConfig};

const TITLES: [&str; 10] = [
    "catalog null roots and forms",
    "BC1 Coxeter matrix, root series and defect",
    "translation engine and g-vector formula",
    "BC1 one-parameter family",
    "BC1 stability",
    "folding isometry and Ext by presentation",
    "canonical decomposition",
    "tubes and tiers",
    "rank-eta bricks in general types",
    "dimension count",
];

fn main() -> ExitCode {
    let cfg = SuiteConfig::default();
    let mut failed = 0;
    for (k, title) in TITLES.iter().enumerate() {
        let n = k as u32 + 1;
        let start = Instant::now();
        let checks = run_criterion(n, &cfg);
        let secs = start.elapsed().as_secs_f64();
        let ok = !checks.is_empty() && checks.iter().all(|c| c.passed);
        println!(
            "criterion {n:2} {} {title} ({} checks, {secs:.2} s)",
            if ok { "PASS" } else { "FAIL" },
            checks.len()
        );
        for c in checks.iter().filter(|c| !c.passed) {
            println!("    failed: {} {}", c.name, c.detail);
        }
        failed += usize::from(!ok);
    }
    println!(
        "acceptance: {} of {} criteria passed",
        TITLES.len() - failed,
        TITLES.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
