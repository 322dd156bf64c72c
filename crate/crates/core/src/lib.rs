//! Exact all-terminal reliability polynomials, with tools for searching
//! uniformly most reliable hamiltonian graphs.

pub mod analysis;
pub mod canon;
pub mod cli;
pub mod constructions;
pub mod corpus;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod hamiltonian;
pub mod relpoly;

pub use analysis::{reproduce_table, search_umr, verify_nonexistence, TableId, UmrOutcome, UmrReport};
pub use canon::{canonical_form, canonical_labeling, canonical_multigraph_code, CanonicalCode};
pub use enumeration::{dedupe_isomorphic, enumerate_hamiltonian, enumerate_hd};
pub use error::{Error, Result};
pub use graph::{EdgeRef, Multigraph};
pub use relpoly::{
    compare_on_unit_interval, dominates, rel_bruteforce, rel_factoring, spanning_tree_count, CoefficientOrder,
    ComparisonVerdict, PowerPoly, RelPoly,
};
