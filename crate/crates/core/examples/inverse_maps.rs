//! Inverse branches, free energies and the k → ∞ scaling.
//!
//! cargo run --release --example inverse_maps

use shearer::inverse::{
    free_energy_continuous_candidates, free_energy_discrete, inv_c, inv_k, prior_bounds, scaling_table,
    singularity_discrete, DEFAULT_TOL,
};

fn main() -> shearer::Result<()> {
    for k in 1..=4 {
        let x = inv_k(k, 0.05, DEFAULT_TOL)?;
        println!(
            "k={k}  ρ*={:.8}  InvK(0.05)={:.12}  free energy={:.12}",
            singularity_discrete(k),
            x.value,
            free_energy_discrete(k, 0.05)?
        );
    }

    let y = inv_c(0.2, DEFAULT_TOL)?;
    let c = free_energy_continuous_candidates(0.2)?;
    println!("\nInvC(0.2) = {:.12} (residual {:.1e})", y.value, y.residual);
    println!("candidates at 0.2: polynomial {:.8}, inverse {:.8}", c.polynomial_form, c.inverse_form);

    println!("\n{:>6} {:>14} {:>14}", "k", "(k+1)ρ*_k", "(k+1)InvK");
    for row in scaling_table(&[1, 10, 100, 1000, 10000], 0.3)? {
        println!("{:>6} {:>14.10} {:>14.10}", row.k, row.scaled_singularity, row.scaled_inverse);
    }

    println!();
    for b in prior_bounds(3) {
        let k = b.k.map(|k| k.to_string()).unwrap_or_default();
        println!("{:<10} {:>2} {:<20} {:.8} < {:.8}", b.case, k, b.method, b.value, b.singularity);
    }
    Ok(())
}
