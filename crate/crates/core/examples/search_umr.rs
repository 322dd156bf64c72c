// Finding the uniformly most reliable graph among candidates.
//
// `cargo run --release --example search_umr`

use hamrel::constructions::{complement_family, matching_complement};
use hamrel::{canonical_form, enumerate_hamiltonian, search_umr, Result};

pub fn run_example() -> Result<()> {
    let report = search_umr(&enumerate_hamiltonian(11, 2)?)?;
    print!("{report}");

    // 13 edges on 6 vertices: K6 minus two independent edges wins
    let report = search_umr(&enumerate_hamiltonian(6, 7)?)?;
    print!("{report}");
    assert_eq!(canonical_form(&report.dominant[0].graph)?, canonical_form(&matching_complement(6, 2)?)?);

    let pair = [complement_family("g1", 8)?, complement_family("g2", 8)?];
    print!("{}", search_umr(&pair)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
