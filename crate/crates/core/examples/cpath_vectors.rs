// The two-chord family: closed-form coefficients and the balanced optimum.
//
// `cargo run --example cpath_vectors -- 18`

use hamrel::constructions::{coeffs_type_a, coeffs_type_b, cpath_vectors, d_measure, optimal_cpath_vector};
use hamrel::Result;

pub fn run_example() -> Result<()> {
    scan(11)
}

fn scan(n: usize) -> Result<()> {
    let best = optimal_cpath_vector(n)?;
    println!("n = {n}, balanced vector {best}, (N_m-2, tau) = {:?}", coeffs_type_a(best));
    let mut all = cpath_vectors(n);
    all.sort_by_key(|&v| std::cmp::Reverse(coeffs_type_a(v)));
    for v in all.iter().take(6) {
        let (g, f) = coeffs_type_a(*v);
        println!("  {v} D={} N_m-2={g} tau={f}", d_measure(*v).0);
    }
    let top = coeffs_type_a(best);
    assert!(all.iter().all(|&v| {
        let (g, f) = coeffs_type_a(v);
        g <= top.0 && f <= top.1
    }));
    // the nested placement of the same gaps always loses
    if let Some(v) = all.iter().find(|v| v.components()[1] >= 2 && v.components()[3] >= 2) {
        println!("  nested {v}: {:?} vs crossing {:?}", coeffs_type_b(*v), coeffs_type_a(*v));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    match std::env::args().nth(1) {
        Some(n) => scan(n.parse().expect("n must be an integer")),
        None => run_example(),
    }
}
