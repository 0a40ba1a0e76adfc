//! Building a table and writing it as CSV and JSON.
//!
//! cargo run --release --example tables

use shearer::exact::discrete_partition_eval;
use shearer::table::{float, Format, Table};
use shearer::Rational;

fn main() -> shearer::Result<()> {
    let rho = Rational::ratio(1, 5);
    let mut t = Table::new(["n", "z", "z_float"]);
    for n in 0..6 {
        let z = discrete_partition_eval(2, n, &rho)?;
        t.push([n.to_string(), z.to_string(), float(z.to_f64())]);
    }
    let csv = t.render(Format::Csv)?;
    print!("{csv}");
    println!("{}", t.render(Format::Json)?);
    assert_eq!(Table::parse(&csv, Format::Csv)?.render(Format::Csv)?, csv);
    Ok(())
}
