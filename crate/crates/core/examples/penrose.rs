//! Ursell coefficients against one-sided singleton trees.
//!
//! cargo run --release --example penrose

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use shearer::cluster::{build_cluster, penrose_check, PointConfiguration};

fn main() -> shearer::Result<()> {
    let triangle = PointConfiguration::from_json(r#"["0", "2/5", "4/5"]"#)?;
    let g = build_cluster(&triangle)?;
    println!("edges {:?}", g.edges());
    println!("{}", serde_json::to_string(&penrose_check(&triangle)?).unwrap());

    let interior = PointConfiguration::from_json(r#"["0", "-3/10", "3/10"]"#)?;
    println!("first point in the middle: {}", serde_json::to_string(&penrose_check(&interior)?).unwrap());

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    println!("\n n  configs  failures  failures with first point at an end");
    for n in 2..=7 {
        let (mut fails, mut fails_end) = (0, 0);
        for _ in 0..200 {
            let c = PointConfiguration::random(n, &mut rng);
            if !penrose_check(&c)?.identity_holds {
                fails += 1;
                fails_end += usize::from(c.root_is_extremal());
            }
        }
        println!("{n:>2}  {:>7}  {fails:>8}  {fails_end:>8}", 200);
    }
    Ok(())
}
