//! Shearer's point process from both block-factor constructions.
//!
//! cargo run --release --example simulate [seed]

use shearer::rational::Rational;
use shearer::sim::{
    check_hard_core, estimate_avoidance, estimate_intensity, sample_continuous_shearer, sample_discrete_shearer,
    test_r_dependence, RandomSeed, Region, SimParams,
};

fn main() -> shearer::Result<()> {
    let seed: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(42);
    let quarter = Rational::ratio(1, 4);

    let d = sample_discrete_shearer(1, &quarter, 30, seed)?;
    let line: String = d.y_bits[1..].iter().map(|&b| if b { '#' } else { '.' }).collect();
    println!("k=1, ρ=1/4:  {line}  ({} violations)", check_hard_core(&d));
    let c = sample_continuous_shearer(&quarter, 12.0, seed)?;
    println!("continuous: ξ has {} points, η = {:.3?}", c.xi.len(), c.eta);

    let seed = RandomSeed::new(seed);
    let reps = 20_000;
    let cont = SimParams::Continuous { rho: quarter.clone(), t: Rational::integer(10) };
    let disc = SimParams::Discrete { k: 1, rho: quarter.clone(), n: 10 };
    let iv = |a, b| Region::Interval { lo: Rational::integer(a), hi: Rational::integer(b) };
    let rows = [
        ("intensity, continuous", estimate_intensity(&cont, reps, seed)?),
        ("intensity, k=1", estimate_intensity(&disc, reps, seed)?),
        ("avoidance [0,10]", estimate_avoidance(&cont, &iv(0, 10), reps, seed)?),
        ("avoidance {1..10}", estimate_avoidance(&disc, &Region::Sites { lo: 1, hi: 10 }, reps, seed)?),
        ("covariance [0,4] [5,9]", test_r_dependence(&cont, &iv(0, 4), &iv(5, 9), reps, seed)?),
    ];
    println!("\n{:<24} {:>10} {:>10} {:>10} {:>7}", "", "estimate", "exact", "std err", "σ");
    for (name, r) in rows {
        println!(
            "{name:<24} {:>10.6} {:>10.6} {:>10.2e} {:>7.2}",
            r.estimate,
            r.oracle.unwrap_or(f64::NAN),
            r.std_error,
            r.sigma_distance.unwrap_or(f64::NAN)
        );
    }
    Ok(())
}
