// Cycle-plus-chord graphs up to isomorphism.
//
// `cargo run --release --example enumerate_chords -- 12 3`

use std::time::Instant;

use hamrel::{dedupe_isomorphic, enumerate_hamiltonian, enumerate_hd, Multigraph, Result};

pub fn run_example() -> Result<()> {
    for (n, c) in [(8, 1), (8, 2), (11, 2), (9, 3)] {
        println!("cycle {n} + {c} chords: {} graphs", enumerate_hamiltonian(n, c)?.len());
    }
    for n in [6, 9, 12] {
        println!("diametrical family n = {n}: {} graphs", enumerate_hd(n)?.len());
    }
    let same = [
        Multigraph::cycle(6)?.with_edges([(0, 2)])?,
        Multigraph::cycle(6)?.with_edges([(3, 5)])?,
        Multigraph::cycle(6)?.with_edges([(0, 3)])?,
    ];
    println!("dedupe keeps {} of {}", dedupe_isomorphic(&same)?.len(), same.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    let [n, c] = args[..] else {
        return run_example();
    };
    let start = Instant::now();
    let graphs = enumerate_hamiltonian(n, c)?;
    for g in &graphs {
        println!("{}", g.to_graph6()?);
    }
    eprintln!("{} graphs in {:.2?}", graphs.len(), start.elapsed());
    Ok(())
}
