// graph6 and edge-list round trips, canonical codes, and simple operations.
//
// `cargo run --example graph_formats`

use hamrel::constructions::named_graph;
use hamrel::{canonical_form, Multigraph, Result};

pub fn run_example() -> Result<()> {
    let w = named_graph("wagner")?;
    let g6 = w.to_graph6()?;
    println!("wagner graph6 {g6}");
    assert_eq!(Multigraph::from_graph6(&g6)?, w);

    let text = w.to_edge_list();
    assert_eq!(Multigraph::from_edge_list(&text)?, w);
    println!("edge list header: {}", text.lines().next().unwrap_or(""));

    let shuffled = w.relabel(&[3, 7, 1, 0, 5, 2, 6, 4])?;
    assert_eq!(canonical_form(&w)?, canonical_form(&shuffled)?);
    println!("relabeled copy has the same canonical code");

    let p = named_graph("petersen")?;
    println!("petersen: lambda={} connected={} complement m={}", p.edge_connectivity(), p.is_connected(), p.complement().edge_count());

    // multigraphs are fine for reliability but have no graph6 form
    let multi = Multigraph::new(2, [(0, 1), (0, 1)])?;
    println!("double edge simple? {} graph6 -> {:?}", multi.is_simple(), multi.to_graph6().map_err(|e| e.to_string()));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
