//! Runs the twelve acceptance criteria and prints one line per criterion.
//!
//! `SHEARER_SEED` overrides the default seed.

use std::process::ExitCode;
use std::time::Instant;

use shearer::verify::{run_one, DEFAULT_SEED};

fn main() -> ExitCode {
    let seed = std::env::var("SHEARER_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SEED);
    println!("\nrunning 12 acceptance criteria (seed {seed})");
    let mut failed = Vec::new();
    for id in 1..=12 {
        let start = Instant::now();
        let outcome = run_one(id, seed).expect("criteria are numbered 1 to 12");
        println!("{} ({:.1}s)", outcome.line(), start.elapsed().as_secs_f64());
        if !outcome.passed {
            failed.push(id);
        }
    }
    let passed = 12 - failed.len();
    if failed.is_empty() {
        println!("\nacceptance result: ok. 12 passed; 0 failed\n");
        ExitCode::SUCCESS
    } else {
        println!("\nacceptance result: FAILED. {passed} passed; {} failed {failed:?}\n", failed.len());
        ExitCode::FAILURE
    }
}
