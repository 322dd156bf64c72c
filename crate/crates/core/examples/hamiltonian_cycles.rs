// Cycle search, sufficient conditions, and two-chord classification.
//
// `cargo run --example hamiltonian_cycles`

use hamrel::constructions::{named_graph, umr_subdivision};
use hamrel::hamiltonian::{classify_two_chord, degree_obstruction, find_hamiltonian_cycle, ore_condition};
use hamrel::{Multigraph, Result};

pub fn run_example() -> Result<()> {
    for name in ["wagner", "petersen", "k33"] {
        let g = named_graph(name)?;
        match find_hamiltonian_cycle(&g) {
            Some(c) => println!("{name:9} ore={} cycle {c}", ore_condition(&g)),
            None => println!("{name:9} ore={} no cycle", ore_condition(&g)),
        }
    }

    let sub = umr_subdivision(9, 11)?;
    println!("subdivided K4 on 9 vertices: obstruction={} cycle={:?}", degree_obstruction(&sub), find_hamiltonian_cycle(&sub).is_some());

    // crossing, shared-endpoint and nested chord pairs on C10
    for chords in [[(0, 5), (2, 7)], [(0, 4), (4, 7)], [(1, 4), (6, 9)]] {
        let g = Multigraph::cycle(10)?.with_edges(chords)?;
        let cycle = find_hamiltonian_cycle(&g).expect("contains C10");
        let std_cycle = hamrel::hamiltonian::HamCycle::new(&g, (0..10).collect())?;
        let class = classify_two_chord(&g, &std_cycle)?;
        println!("{chords:?}: {} {} (search found {})", class.kind, class.vector, cycle);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
