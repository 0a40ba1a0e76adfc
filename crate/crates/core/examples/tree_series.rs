//! The tree operator, D(n) and partial sums of the one-sided tree series.
//!
//! cargo run --release --example tree_series

use shearer::trees::{
    closed_form_P, enumerate_D, enumerate_d_by_egf, fixed_point_iterate, ratio_max, series_vs_free_energy_report,
    truncated_P, Case, Kind, QConvention, DEFAULT_MAX_ITER, DIVERGENCE_THRESHOLD,
};
use shearer::Rational;

fn main() -> shearer::Result<()> {
    for case in [Case::Continuous, Case::Discrete(1), Case::Discrete(2)] {
        let (m, h) = ratio_max(case, Kind::NonRoot)?;
        let d: Vec<String> = (1..=6).map(|n| enumerate_D(case, n).map(|d| d.to_string())).collect::<Result<_, _>>()?;
        assert_eq!(enumerate_D(case, 6)?, enumerate_d_by_egf(case, 6)?);
        println!("{case:?}: max μ/h(μ) = {h:.8} at μ = {m:.6}; D(1..6) = {}", d.join(", "));
    }

    println!();
    for rho in [0.2, 0.3, 0.36, 0.37, 0.4] {
        let r = fixed_point_iterate(Case::Continuous, rho, 1e-12, DEFAULT_MAX_ITER, DIVERGENCE_THRESHOLD)?;
        println!("ρ={rho:<5} {:?} after {} steps, μ = {:?}", r.status, r.iterations, r.mu);
    }

    println!();
    for n in [3, 6, 9] {
        println!("P_{n}(0.2) = {:.10}", truncated_P(Case::Continuous, 0.2, n)?);
    }
    println!("closed form, Q = ρμ: {:.10}", closed_form_P(Case::Continuous, 0.2, QConvention::RhoMu)?);
    println!("closed form, Q = μ:  {:.10}", closed_form_P(Case::Continuous, 0.2, QConvention::Mu)?);

    let rep = series_vs_free_energy_report(&Rational::ratio(1, 5), &Rational::integer(200), 9, 5e-3)?;
    println!("\n-log Z(-0.2, [0,200]) / 200 = {:.10}", rep.exact_density);
    for e in &rep.entries {
        println!("  {:<20} {:.10}  within 5e-3: {}", e.name, e.value, e.matches_exact);
    }
    Ok(())
}
