// Coefficient order versus the exact sign of Rel(A) - Rel(B) on (0, 1).
//
// `cargo run --example compare_polynomials`

use hamrel::constructions::complement_family;
use hamrel::{compare_on_unit_interval, dominates, rel_factoring, ComparisonVerdict, Result};

pub fn run_example() -> Result<()> {
    let a = rel_factoring(&complement_family("g1", 6)?);
    let b = rel_factoring(&complement_family("g2", 6)?);
    println!("A = {a}");
    println!("B = {b}");
    println!("coefficients: {:?}", dominates(&a, &b)?);

    let verdict = compare_on_unit_interval(&a, &b)?;
    println!("unit interval: {verdict}");
    if let ComparisonVerdict::Crossing { intervals, .. } = &verdict {
        for iv in intervals {
            println!("  root near p = {:.6}, width {}", iv.midpoint_f64(), iv.width());
        }
    }
    assert!(verdict.is_crossing());
    assert_eq!(compare_on_unit_interval(&b, &a)?, verdict.swapped());
    println!("{}", serde_json::to_string(&verdict).expect("verdict serializes"));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
