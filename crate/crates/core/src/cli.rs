//! Command-line front end. `main` only forwards to [`run`].

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::json;

use crate::analysis::{
    reproduce_rows_with, search_umr_with, vector_text, verify_nonexistence_with, TableId, UmrReport,
};
use crate::constructions::{
    complement_family, fcg, graph_from_cpath_vector, named_graph, umr_subdivision, CPathVector,
};
use crate::corpus::oracle_check;
use crate::enumeration::{enumerate_hamiltonian, enumerate_hd};
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::hamiltonian::ChordKind;
use crate::relpoly::{compare_on_unit_interval, dominates, Factoring, FactoringConfig, RelPoly};

#[derive(Debug, Parser)]
#[command(name = "hamrel", version, about = "Exact reliability polynomials of hamiltonian graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub config: RunConfig,
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Output format (each subcommand picks its own default).
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Worker threads; 0 lets the pool decide.
    #[arg(long, global = true, env = "HAMREL_THREADS", default_value_t = 0)]
    pub threads: usize,
    /// Maximum memo entries of the factoring engine; 0 disables the memo.
    #[arg(long, global = true, default_value_t = FactoringConfig::default().memo_limit)]
    pub memo_limit: usize,
    /// Seed for randomized corpora (`oracle-check` only).
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Graph6,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reliability polynomial of each graph in a graph6 or edge-list file.
    Relpoly {
        /// Input file, `-` for stdin.
        input: PathBuf,
    },
    /// Build a graph from one of the constructions.
    Construct {
        #[command(subcommand)]
        kind: Construct,
    },
    /// Non-isomorphic cycle-plus-chords graphs.
    Enumerate {
        #[command(subcommand)]
        kind: Enumerate,
    },
    /// Uniformly most reliable graphs among candidates.
    SearchUmr {
        /// graph6 or edge-list input; omit when using --hamiltonian or --hd.
        input: Option<PathBuf>,
        /// Enumerate candidates as `N C`: cycle on N vertices plus C chords.
        #[arg(long, num_args = 2, value_names = ["N", "C"], conflicts_with_all = ["input", "hd"])]
        hamiltonian: Option<Vec<usize>>,
        /// Enumerate the diametrical family on N vertices.
        #[arg(long, value_name = "N", conflicts_with = "input")]
        hd: Option<usize>,
    },
    /// Regenerate a stored coefficient table and compare row by row.
    VerifyTable {
        /// T2, T3 or T4.
        table: String,
        /// Skip rows with more vertices than this.
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Certify that a complement pair on n vertices has crossing reliabilities.
    VerifyNonexistence {
        #[arg(long)]
        n: usize,
    },
    /// Compare two graphs exactly on (0, 1).
    Compare {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Decimal samples of Rel(G, p) as CSV.
    PlotData {
        input: PathBuf,
        /// Number of evenly spaced sample points including both ends.
        #[arg(long, default_value_t = 101)]
        samples: usize,
        /// Digits after the decimal point.
        #[arg(long, default_value_t = 8)]
        precision: usize,
    },
    /// Cross-check factoring against subset enumeration on random multigraphs.
    OracleCheck {
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 16)]
        max_edges: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    /// wagner, petersen, k4, k33, monma-base, k<n>, c<n>.
    Named { name: String },
    /// Cycle plus c evenly spread diametrical chords.
    Fcg {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        c: usize,
    },
    /// Subdivision of a base graph with m - n in 1..=3.
    Umr {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// g1, g2, g3, g4 or matching-complement.
    Complement {
        name: String,
        #[arg(long)]
        n: usize,
    },
    /// Cycle plus two chords with the given gap vector.
    Cpath {
        /// Four gaps, e.g. 3,3,3,2.
        #[arg(long, value_delimiter = ',', num_args = 4)]
        vector: Vec<usize>,
        /// a, a-hat or b.
        #[arg(long, default_value = "a")]
        kind: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum Enumerate {
    Hamiltonian {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        c: usize,
    },
    Hd {
        #[arg(long)]
        n: usize,
    },
}

/// Outcome of a command that ran to completion.
enum Status {
    Ok,
    /// A verification did not hold; exit code 2.
    Mismatch,
}

/// Parses `args` (program name first), runs the command, and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if cli.config.threads > 0 {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.config.threads).build_global();
    }
    let mut out: Vec<u8> = Vec::new();
    let status = execute(&cli, &mut out);
    let written = match &cli.config.output {
        Some(path) => fs::write(path, &out).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => io::stdout().write_all(&out).map_err(|e| format!("cannot write output: {e}")),
    };
    if let Err(msg) = written {
        eprintln!("error: {msg}");
        return 1;
    }
    match status {
        Ok(Status::Ok) => 0,
        Ok(Status::Mismatch) => 2,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn execute(cli: &Cli, out: &mut Vec<u8>) -> Result<Status> {
    let cfg = &cli.config;
    let engine = Factoring::new(FactoringConfig {
        memo_limit: cfg.memo_limit,
        ..FactoringConfig::default()
    });
    match &cli.command {
        Command::Relpoly { input } => {
            let format = pick(cfg.format, Format::Text, &[Format::Json, Format::Csv, Format::Text])?;
            for (i, g) in read_graphs(input)?.iter().enumerate() {
                let poly = engine.compute(g);
                let desc = poly.descending(g.vertex_count());
                match format {
                    Format::Json => {
                        let v = json!({
                            "n": g.vertex_count(),
                            "m": g.edge_count(),
                            "N": strings(poly.counts()),
                            "descending": strings(&desc),
                        });
                        line(out, v)
                    }
                    Format::Csv => line(out, crate::relpoly::descending_csv_row(&label(g, i), &desc)),
                    _ => line(out, format!("{} n={} m={} N={poly} descending {}", label(g, i), g.vertex_count(), g.edge_count(), vector_text(&desc))),
                }
            }
        }
        Command::Construct { kind } => {
            let g = match kind {
                Construct::Named { name } => named_graph(name)?,
                Construct::Fcg { n, c } => fcg(*n, *c)?,
                Construct::Umr { n, m } => umr_subdivision(*n, *m)?,
                Construct::Complement { name, n } => complement_family(name, *n)?,
                Construct::Cpath { vector, kind } => {
                    let v = CPathVector::new([vector[0], vector[1], vector[2], vector[3]]);
                    graph_from_cpath_vector(v, parse_kind(kind)?)?
                }
            };
            write_graphs(out, std::slice::from_ref(&g), pick(cfg.format, Format::Graph6, &[Format::Graph6, Format::Text, Format::Json, Format::Csv])?)?;
        }
        Command::Enumerate { kind } => {
            let graphs = match kind {
                Enumerate::Hamiltonian { n, c } => enumerate_hamiltonian(*n, *c)?,
                Enumerate::Hd { n } => enumerate_hd(*n)?,
            };
            match pick(cfg.format, Format::Graph6, &[Format::Graph6, Format::Text, Format::Json])? {
                Format::Json => {
                    let (n, chords) = match kind {
                        Enumerate::Hamiltonian { n, c } => (*n, *c),
                        Enumerate::Hd { n } => (*n, 3),
                    };
                    let g6: Vec<String> = graphs.iter().map(Multigraph::to_graph6).collect::<Result<_>>()?;
                    line(out, json!({ "n": n, "chords": chords, "count": graphs.len(), "graphs": g6 }));
                }
                f => write_graphs(out, &graphs, f)?,
            }
        }
        Command::SearchUmr { input, hamiltonian, hd } => {
            let graphs = match (input, hamiltonian, hd) {
                (Some(path), _, _) => read_graphs(path)?,
                (None, Some(nc), _) => enumerate_hamiltonian(nc[0], nc[1])?,
                (None, None, Some(n)) => enumerate_hd(*n)?,
                _ => return Err(Error::InvalidParameter("give an input file, --hamiltonian N C, or --hd N".into())),
            };
            let report = search_umr_with(&engine, &graphs)?;
            write_report(out, &report, pick(cfg.format, Format::Text, &[Format::Text, Format::Json, Format::Csv])?);
        }
        Command::VerifyTable { table, max_n } => {
            let table: TableId = table.parse()?;
            let limit = max_n.unwrap_or(usize::MAX);
            let rows = reproduce_rows_with(&engine, table, |n| n <= limit)?;
            match pick(cfg.format, Format::Text, &[Format::Text, Format::Json, Format::Csv])? {
                Format::Json => line(out, serde_json::to_string(&rows).expect("rows serialize")),
                Format::Csv => {
                    line(out, "row,status,actual,expected");
                    for r in &rows {
                        let status = if r.matches { "MATCH" } else { "MISMATCH" };
                        line(out, format!("{},{status},{},{}", r.label, r.actual.join(" "), r.expected.join(" ")));
                    }
                }
                _ => {
                    for r in &rows {
                        line(out, r);
                    }
                }
            }
            if !rows.iter().all(|r| r.matches) {
                return Ok(Status::Mismatch);
            }
        }
        Command::VerifyNonexistence { n } => {
            let cert = verify_nonexistence_with(&engine, *n)?;
            match pick(cfg.format, Format::Text, &[Format::Text, Format::Json])? {
                Format::Json => line(out, serde_json::to_string(&cert).expect("certificate serializes")),
                _ => line(out, &cert),
            }
            if !cert.certified() {
                return Ok(Status::Mismatch);
            }
        }
        Command::Compare { a, b } => {
            let ga = single_graph(a)?;
            let gb = single_graph(b)?;
            let (pa, pb) = (engine.compute(&ga), engine.compute(&gb));
            let verdict = compare_on_unit_interval(&pa, &pb)?;
            let order = dominates(&pa, &pb)?;
            match pick(cfg.format, Format::Text, &[Format::Text, Format::Json])? {
                Format::Json => line(out, json!({ "a": pa, "b": pb, "coefficients": order, "unit_interval": verdict })),
                _ => {
                    line(out, format!("a N={pa}"));
                    line(out, format!("b N={pb}"));
                    line(out, format!("coefficients: {order:?}"));
                    line(out, &verdict);
                }
            }
        }
        Command::PlotData { input, samples, precision } => {
            pick(cfg.format, Format::Csv, &[Format::Csv])?;
            if *samples < 2 {
                return Err(Error::InvalidParameter("--samples must be at least 2".into()));
            }
            let g = single_graph(input)?;
            let poly = engine.compute(&g);
            for (p, rel) in plot_samples(&poly, *samples, *precision)? {
                line(out, format!("{p},{rel}"));
            }
        }
        Command::OracleCheck { count, max_edges } => {
            let summary = oracle_check(&engine, cfg.seed, *count, *max_edges);
            match pick(cfg.format, Format::Text, &[Format::Text, Format::Json])? {
                Format::Json => line(out, serde_json::to_string(&summary).expect("summary serializes")),
                _ => line(
                    out,
                    format!("seed {} graphs {} mismatches {:?}", summary.seed, summary.graphs, summary.mismatches),
                ),
            }
            if !summary.mismatches.is_empty() {
                return Ok(Status::Mismatch);
            }
        }
    }
    Ok(Status::Ok)
}

fn pick(requested: Option<Format>, default: Format, allowed: &[Format]) -> Result<Format> {
    let f = requested.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        let names: Vec<String> = allowed.iter().map(|a| format!("{a:?}").to_lowercase()).collect();
        Err(Error::InvalidParameter(format!(
            "format {f:?} is not available here; use one of {}",
            names.join(", ")
        )))
    }
}

fn line(out: &mut Vec<u8>, text: impl std::fmt::Display) {
    writeln!(out, "{text}").expect("writing to memory");
}

fn strings(v: &[BigUint]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn label(g: &Multigraph, i: usize) -> String {
    g.to_graph6().unwrap_or_else(|_| format!("g{i}"))
}

fn parse_kind(s: &str) -> Result<ChordKind> {
    match s.to_ascii_lowercase().as_str() {
        "a" => Ok(ChordKind::A),
        "a-hat" | "ahat" => Ok(ChordKind::AHat),
        "b" => Ok(ChordKind::B),
        _ => Err(Error::UnknownName {
            name: s.to_string(),
            catalog: "a, a-hat, b".into(),
        }),
    }
}

fn write_graphs(out: &mut Vec<u8>, graphs: &[Multigraph], format: Format) -> Result<()> {
    for g in graphs {
        match format {
            Format::Graph6 => line(out, g.to_graph6()?),
            Format::Json => line(
                out,
                json!({ "n": g.vertex_count(), "m": g.edge_count(), "edges": g.edges(), "graph6": g.to_graph6().ok() }),
            ),
            Format::Csv => {
                for (u, v) in g.edges() {
                    line(out, format!("{u},{v}"));
                }
            }
            Format::Text => out.extend_from_slice(g.to_edge_list().as_bytes()),
        }
    }
    Ok(())
}

fn write_report(out: &mut Vec<u8>, report: &UmrReport, format: Format) {
    match format {
        Format::Json => line(out, serde_json::to_string(report).expect("report serializes")),
        Format::Csv => {
            line(out, "role,index,graph,descending");
            let rows = report
                .dominant
                .iter()
                .map(|c| ("dominant", c))
                .chain(report.pareto_front.iter().map(|c| ("front", c)));
            for (role, c) in rows {
                line(out, format!("{role},{},{},{}", c.index, label(&c.graph, c.index), strings(&c.descending).join(" ")));
            }
        }
        _ => out.extend_from_slice(report.to_string().as_bytes()),
    }
}

fn read_text(path: &PathBuf) -> Result<String> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Error::InvalidParameter(format!("cannot read stdin: {e}")))?;
    } else {
        text = fs::read_to_string(path)
            .map_err(|e| Error::InvalidParameter(format!("cannot read {}: {e}", path.display())))?;
    }
    Ok(text)
}

/// graph6 (one graph per line) or a single edge list, told apart by the
/// first content line: an edge-list header has two fields.
pub fn parse_graphs(text: &str) -> Result<Vec<Multigraph>> {
    let mut content = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let first = content
        .next()
        .ok_or_else(|| Error::InvalidParameter("input holds no graph".into()))?;
    if first.split_whitespace().count() == 2 {
        return Ok(vec![Multigraph::from_edge_list(text)?]);
    }
    std::iter::once(first).chain(content).map(Multigraph::from_graph6).collect()
}

fn read_graphs(path: &PathBuf) -> Result<Vec<Multigraph>> {
    parse_graphs(&read_text(path)?)
}

fn single_graph(path: &PathBuf) -> Result<Multigraph> {
    let mut graphs = read_graphs(path)?;
    if graphs.len() != 1 {
        return Err(Error::InvalidParameter(format!(
            "{} holds {} graphs, expected one",
            path.display(),
            graphs.len()
        )));
    }
    Ok(graphs.remove(0))
}

/// `(p, Rel(G, p))` at `samples` evenly spaced points, both rounded
/// half away from zero to `precision` decimals from the exact value.
pub fn plot_samples(poly: &RelPoly, samples: usize, precision: usize) -> Result<Vec<(String, String)>> {
    let last = BigInt::from(samples - 1);
    (0..samples)
        .map(|k| {
            let p = BigRational::new(BigInt::from(k), last.clone());
            let rel = poly.evaluate(&p)?;
            Ok((decimal(&p, precision), decimal(&rel, precision)))
        })
        .collect()
}

/// Exact rational rounded to `digits` decimals.
pub fn decimal(x: &BigRational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = x * BigRational::from_integer(scale.clone());
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let rounded = if scaled.is_negative() {
        -(-scaled + half).floor()
    } else {
        (scaled + half).floor()
    }
    .to_integer();
    let sign = if rounded.is_negative() { "-" } else { "" };
    let abs = rounded.abs();
    let (int, frac) = (&abs / &scale, &abs % &scale);
    if digits == 0 {
        return format!("{sign}{int}");
    }
    let frac = if frac.is_zero() { "0".repeat(digits) } else { format!("{frac:0>digits$}") };
    format!("{sign}{int}.{frac}")
}
