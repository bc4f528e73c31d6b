//! Runs every acceptance suite with default budgets and seed, printing one
//! line per criterion. Exits nonzero if any criterion fails.

use postnikov::suites::{run, SUITES};
use postnikov::DEFAULT_SEED;
use postnikov_core::Budgets;
use std::time::Instant;

fn main() {
    let b = Budgets::default();
    let mut failed = 0;
    for (name, criterion) in SUITES {
        let start = Instant::now();
        let r = run(name, &b, DEFAULT_SEED).expect("known suite");
        let secs = start.elapsed().as_secs_f64();
        let verdict = if r.passed { "PASS" } else { "FAIL" };
        println!(
            "criterion {criterion} ({name}): {verdict} ({} checks, {} failed, {secs:.2}s)",
            r.checks, r.failed
        );
        for f in &r.failures {
            println!("    {f}");
        }
        if name == "soundness" {
            println!("    unknown rate {}", r.details["unknown_rate"]);
        }
        failed += usize::from(!r.passed);
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
