// Crossing certificates: two hamiltonian graphs of equal size neither of
// which is more reliable everywhere.
//
// `cargo run --release --example nonexistence -- 10`

use hamrel::{verify_nonexistence, Result};

pub fn run_example() -> Result<()> {
    for n in [6, 7, 8] {
        let cert = verify_nonexistence(n)?;
        println!("{cert}");
        assert!(cert.certified());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    match std::env::args().nth(1) {
        Some(n) => {
            println!("{}", verify_nonexistence(n.parse().expect("n must be an integer"))?);
            Ok(())
        }
        None => run_example(),
    }
}
