//! Exact partition functions at negative activity and their first roots.
//!
//! cargo run --release --example partition_functions

use shearer::exact::{
    continuous_cond_ratio, continuous_partition_eval, continuous_smallest_root, discrete_partition_eval,
    discrete_partition_polynomial, discrete_smallest_root, verify_deletion_contraction,
};
use shearer::Rational;

fn main() -> shearer::Result<()> {
    let rho: Rational = "1/5".parse()?;

    let coeffs: Vec<String> = discrete_partition_polynomial(1, 6).coeffs().iter().map(|c| c.to_string()).collect();
    println!("Z(z, {{1..6}}) for k = 1 has coefficients {}", coeffs.join(", "));
    for n in [1, 5, 10, 20] {
        let z = discrete_partition_eval(1, n, &rho)?;
        println!("k=1 n={n:>2}  Z(-1/5) = {:.12}", z.to_f64());
    }

    println!("\nfirst root of n -> Z(-ρ, {{1..n}}), k = 2 (tends to 4/27 = {:.6})", 4.0 / 27.0);
    for n in [5, 20, 80] {
        let b = discrete_smallest_root(2, n, 1e-12)?;
        println!("n={n:>3}  ρ_n ∈ [{:.12}, {:.12}]", b.lo.to_f64(), b.hi.to_f64());
    }

    println!("\ncontinuous: first root of ρ -> Z(-ρ, [0, t]) (tends to 1/e)");
    for t in [1, 2, 5, 10] {
        let b = continuous_smallest_root(&Rational::integer(t), 1e-12)?;
        println!("t={t:>2}  RootC = {:.12}", b.midpoint());
    }

    let t = Rational::integer(20);
    let z = continuous_partition_eval(&rho, &t)?;
    println!("\nZ(-1/5, [0, 20]) = {:.15e}", z.to_f64());
    let s = Rational::ratio(1, 2);
    let cond = continuous_cond_ratio(&rho, &s, &t)?;
    println!("Z(-1/5, [0, 20.5]) / Z(-1/5, [0, 20]) = {:.12}", cond.to_f64());
    println!("deletion-contraction at (1/5, 20, 1/2): {}", verify_deletion_contraction(&rho, &t, &s)?);
    Ok(())
}
