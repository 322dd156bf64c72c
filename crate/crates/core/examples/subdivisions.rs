// Named base graphs and their balanced subdivisions.
//
// `cargo run --example subdivisions`

use hamrel::constructions::{named_graph, umr_subdivision, NAMED_GRAPHS};
use hamrel::hamiltonian::find_hamiltonian_cycle;
use hamrel::{rel_factoring, Result};

pub fn run_example() -> Result<()> {
    println!("catalog: {NAMED_GRAPHS}");
    for name in ["monma-base", "k4", "k33", "wagner", "petersen"] {
        let g = named_graph(name)?;
        println!("{name:10} n={} m={} N={}", g.vertex_count(), g.edge_count(), rel_factoring(&g));
    }
    for extra in 1..=3 {
        let row: Vec<String> = (6..=14)
            .map(|n| {
                let g = umr_subdivision(n, n + extra).expect("valid size");
                let mark = if find_hamiltonian_cycle(&g).is_some() { 'H' } else { '.' };
                format!("{n}{mark}")
            })
            .collect();
        println!("m = n+{extra}: {}", row.join(" "));
    }
    let g = umr_subdivision(11, 13)?;
    let desc = rel_factoring(&g).descending(11);
    println!("UMR(11,13) top of table row {:?}", desc.iter().map(ToString::to_string).collect::<Vec<_>>());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
