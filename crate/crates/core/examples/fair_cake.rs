// Evenly spread diametrical chords and their exact positions.
//
// `cargo run --example fair_cake`

use hamrel::constructions::{fcg, fcg_positions, optimal_cpath_vector};
use hamrel::hamiltonian::{classify_two_chord, HamCycle};
use hamrel::{rel_factoring, Result};

pub fn run_example() -> Result<()> {
    for ((p, q), (u, v)) in fcg_positions(16, 3)? {
        println!("positions ({p}, {q}) -> chord ({u}, {v})");
    }
    let g = fcg(16, 3)?;
    println!("FCG(16,3) descending {:?}", rel_factoring(&g).descending(16).iter().map(ToString::to_string).collect::<Vec<_>>());

    // two chords on n = 4k land on the balanced gap vector
    for n in [8, 12, 16, 20] {
        let g = fcg(n, 2)?;
        let class = classify_two_chord(&g, &HamCycle::new(&g, (0..n).collect())?)?;
        println!("FCG({n},2): {} {}", class.kind, class.vector);
        assert_eq!(class.vector, optimal_cpath_vector(n)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
