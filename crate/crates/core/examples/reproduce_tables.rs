// Regenerates the coefficient tables from scratch.
//
// `cargo run --release --example reproduce_tables -- T3 T4`

use std::time::Instant;

use hamrel::analysis::{reproduce_rows, TableId};

pub fn run_example() -> hamrel::Result<()> {
    run(&[TableId::T2, TableId::T3], 16)
}

fn run(tables: &[TableId], max_n: usize) -> hamrel::Result<()> {
    for &table in tables {
        let start = Instant::now();
        let rows = reproduce_rows(table, |n| n <= max_n)?;
        for row in &rows {
            println!("{table} {row}");
        }
        println!("{table}: {} rows in {:.2?}", rows.len(), start.elapsed());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> hamrel::Result<()> {
    let tables: Vec<TableId> = std::env::args().skip(1).map(|a| a.parse()).collect::<hamrel::Result<_>>()?;
    if tables.is_empty() {
        return run_example();
    }
    run(&tables, usize::MAX)
}
