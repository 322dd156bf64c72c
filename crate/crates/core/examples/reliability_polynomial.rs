// Pathset counts of a small graph, three ways, and the polynomial at a few points.
//
// `cargo run --example reliability_polynomial`

use hamrel::relpoly::{rel_bruteforce, rel_factoring, spanning_tree_count};
use hamrel::{Multigraph, Result};
use num_rational::BigRational;

pub fn run_example() -> Result<()> {
    // cycle on 6 vertices with its long diagonal
    let g = Multigraph::cycle(6)?.with_edges([(0, 3)])?;
    let poly = rel_factoring(&g);
    assert_eq!(poly, rel_bruteforce(&g)?);
    assert_eq!(poly.count(5), &spanning_tree_count(&g));

    println!("graph      {g}");
    println!("N_i        {poly}");
    println!("table row  {:?}", poly.descending(6).iter().map(|c| c.to_string()).collect::<Vec<_>>());
    println!("power form {}", poly.to_power());
    for (a, b) in [(1, 4), (1, 2), (9, 10)] {
        let p = BigRational::new(a.into(), b.into());
        println!("Rel({p}) = {}", poly.evaluate(&p)?);
    }
    println!("json       {}", poly.to_json());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
