//! Runs selected acceptance criteria, or all of them.
//!
//! cargo run --release --example verify -- 3 8 11

use shearer::verify::{run_all, run_one, DEFAULT_SEED};

fn main() {
    let ids: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let outcomes = if ids.is_empty() {
        run_all(DEFAULT_SEED)
    } else {
        ids.iter().filter_map(|&id| run_one(id, DEFAULT_SEED)).collect()
    };
    for o in &outcomes {
        println!("{}", o.line());
    }
}
