// Factoring against subset enumeration and the matrix-tree theorem on a
// seeded random corpus.
//
// `cargo run --release --example oracle_check -- 42 1000`

use hamrel::corpus::oracle_check;
use hamrel::relpoly::Factoring;

pub fn run_example() -> hamrel::Result<()> {
    check(0, 100)
}

fn check(seed: u64, count: usize) -> hamrel::Result<()> {
    let engine = Factoring::default();
    let summary = oracle_check(&engine, seed, count, 16);
    println!("seed {seed}: {} graphs, {} mismatches, {:?}", summary.graphs, summary.mismatches.len(), engine.stats());
    assert!(summary.mismatches.is_empty());
    Ok(())
}

#[allow(dead_code)]
fn main() -> hamrel::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().expect("integer"));
    match (args.next(), args.next()) {
        (Some(seed), count) => check(seed, count.unwrap_or(1000) as usize),
        _ => run_example(),
    }
}
