// Decimal samples of Rel(G, p) for external plotting.
//
// `cargo run --example plot_data > wagner.csv`

use hamrel::cli::plot_samples;
use hamrel::constructions::named_graph;
use hamrel::{rel_factoring, Result};

pub fn run_example() -> Result<()> {
    let poly = rel_factoring(&named_graph("wagner")?);
    println!("p,rel");
    for (p, rel) in plot_samples(&poly, 21, 6)? {
        println!("{p},{rel}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
