//! Most-reliable-graph search, table regeneration, and crossing certificates.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::{complement_family, fcg_positions};
use crate::enumeration::{enumerate_hamiltonian, enumerate_hd};
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::hamiltonian::{find_hamiltonian_cycle, ore_condition, HamCycle};
use crate::relpoly::{compare_on_unit_interval, dominates, CoefficientOrder, ComparisonVerdict, Factoring, RelPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UmrOutcome {
    UniqueDominant,
    /// Several graphs share the dominant polynomial.
    MultipleDominant,
    NoDominant,
}

/// How dominance was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DecidedBy {
    Coefficients,
    UnitInterval,
}

#[derive(Debug, Clone, Serialize)]
pub struct Candidate {
    /// Position in the input list.
    pub index: usize,
    #[serde(serialize_with = "as_graph6")]
    pub graph: Multigraph,
    pub poly: RelPoly,
    #[serde(serialize_with = "as_strings")]
    pub descending: Vec<BigUint>,
}

fn as_graph6<S: serde::Serializer>(g: &Multigraph, s: S) -> std::result::Result<S::Ok, S::Error> {
    match g.to_graph6() {
        Ok(text) => s.serialize_str(&text),
        Err(_) => s.serialize_str(&g.to_edge_list()),
    }
}

fn as_strings<S: serde::Serializer>(v: &[BigUint], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

#[derive(Debug, Clone, Serialize)]
pub struct CrossingWitness {
    pub first: usize,
    pub second: usize,
    pub verdict: ComparisonVerdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct UmrReport {
    pub n: usize,
    pub m: usize,
    pub candidates: usize,
    pub outcome: UmrOutcome,
    pub decided_by: Option<DecidedBy>,
    /// Dominant graphs; empty for `NoDominant`.
    pub dominant: Vec<Candidate>,
    /// Maximal elements of the coefficient order, largest descending vector first.
    pub pareto_front: Vec<Candidate>,
    /// Input indices of a crossing pair, present for `NoDominant`.
    pub witness: Option<CrossingWitness>,
}

impl UmrReport {
    /// The descending vector shared by the dominant graphs.
    pub fn best_vector(&self) -> Option<&[BigUint]> {
        self.dominant.first().map(|c| c.descending.as_slice())
    }
}

impl fmt::Display for UmrReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let outcome = match self.outcome {
            UmrOutcome::UniqueDominant => "unique dominant",
            UmrOutcome::MultipleDominant => "multiple dominant",
            UmrOutcome::NoDominant => "no dominant",
        };
        writeln!(f, "n={} m={} candidates={} outcome: {outcome}", self.n, self.m, self.candidates)?;
        for c in &self.dominant {
            writeln!(f, "  dominant #{} {} {}", c.index, vector_text(&c.descending), c.graph)?;
        }
        if let Some(w) = &self.witness {
            writeln!(f, "  front size {}", self.pareto_front.len())?;
            writeln!(f, "  #{} vs #{}: {}", w.first, w.second, w.verdict)?;
        }
        Ok(())
    }
}

pub(crate) fn vector_text(v: &[BigUint]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(","))
}

/// Finds the uniformly most reliable graphs of a candidate list.
pub fn search_umr(graphs: &[Multigraph]) -> Result<UmrReport> {
    search_umr_with(&Factoring::default(), graphs)
}

pub fn search_umr_with(engine: &Factoring, graphs: &[Multigraph]) -> Result<UmrReport> {
    let first = graphs.first().ok_or(Error::EmptyCandidates)?;
    let (n, m) = (first.vertex_count(), first.edge_count());
    if let Some(g) = graphs.iter().find(|g| (g.vertex_count(), g.edge_count()) != (n, m)) {
        return Err(Error::MixedShapes {
            expected: (n, m),
            found: (g.vertex_count(), g.edge_count()),
        });
    }
    let cands: Vec<Candidate> = graphs
        .par_iter()
        .enumerate()
        .map(|(index, g)| {
            let poly = engine.compute(g);
            Candidate {
                index,
                graph: g.clone(),
                descending: poly.descending(n),
                poly,
            }
        })
        .collect();

    // maximal vectors under the coefficient order, one slot per distinct vector
    let mut front: Vec<Vec<usize>> = Vec::new();
    for (i, c) in cands.iter().enumerate() {
        let mut beaten = false;
        let mut k = 0;
        while k < front.len() {
            let rep = &cands[front[k][0]];
            match dominates(&rep.poly, &c.poly)? {
                CoefficientOrder::Dominates if rep.poly == c.poly => {
                    front[k].push(i);
                    beaten = true;
                    break;
                }
                CoefficientOrder::Dominates => {
                    beaten = true;
                    break;
                }
                CoefficientOrder::Dominated => {
                    front.swap_remove(k);
                }
                CoefficientOrder::Incomparable => k += 1,
            }
        }
        if !beaten {
            front.push(vec![i]);
        }
    }
    for group in &mut front {
        group.sort_by(|&a, &b| tie_order(&cands[a], &cands[b]));
    }
    front.sort_by(|a, b| cands[b[0]].descending.cmp(&cands[a[0]].descending));

    let pick = |idx: &[usize]| idx.iter().map(|&i| cands[i].clone()).collect::<Vec<_>>();
    let pareto_front = pick(&front.iter().map(|g| g[0]).collect::<Vec<_>>());
    let outcome_for = |group: &[usize]| {
        if group.len() == 1 {
            UmrOutcome::UniqueDominant
        } else {
            UmrOutcome::MultipleDominant
        }
    };
    let mut report = UmrReport {
        n,
        m,
        candidates: cands.len(),
        outcome: UmrOutcome::NoDominant,
        decided_by: None,
        dominant: Vec::new(),
        pareto_front,
        witness: None,
    };
    if front.len() == 1 {
        report.outcome = outcome_for(&front[0]);
        report.decided_by = Some(DecidedBy::Coefficients);
        report.dominant = pick(&front[0]);
        return Ok(report);
    }

    // coefficients are only a sufficient test; settle the front exactly
    let reps: Vec<&RelPoly> = front.iter().map(|g| &cands[g[0]].poly).collect();
    let pairs: Vec<(usize, usize)> = (0..reps.len())
        .flat_map(|a| (a + 1..reps.len()).map(move |b| (a, b)))
        .collect();
    let verdicts: Vec<ComparisonVerdict> = pairs
        .par_iter()
        .map(|&(a, b)| compare_on_unit_interval(reps[a], reps[b]))
        .collect::<Result<_>>()?;
    if let Some(k) = verdicts.iter().position(ComparisonVerdict::is_crossing) {
        let (a, b) = pairs[k];
        report.witness = Some(CrossingWitness {
            first: cands[front[a][0]].index,
            second: cands[front[b][0]].index,
            verdict: verdicts[k].clone(),
        });
        return Ok(report);
    }
    // no crossings: the front is a chain on (0, 1) and has a top
    let mut wins = vec![0usize; reps.len()];
    for (&(a, b), v) in pairs.iter().zip(&verdicts) {
        match v {
            ComparisonVerdict::FirstDominates => wins[a] += 1,
            ComparisonVerdict::SecondDominates => wins[b] += 1,
            _ => {}
        }
    }
    let top = (0..reps.len()).max_by_key(|&k| (wins[k], std::cmp::Reverse(k))).expect("front is not empty");
    report.outcome = outcome_for(&front[top]);
    report.decided_by = Some(DecidedBy::UnitInterval);
    report.dominant = pick(&front[top]);
    Ok(report)
}

// ties keep a deterministic order independent of the input order
fn tie_order(a: &Candidate, b: &Candidate) -> Ordering {
    a.graph.edges().cmp(b.graph.edges()).then(a.index.cmp(&b.index))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TableId {
    T2,
    T3,
    T4,
}

impl FromStr for TableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "T2" | "T2-FCG" => Ok(TableId::T2),
            "T3" => Ok(TableId::T3),
            "T4" => Ok(TableId::T4),
            _ => Err(Error::UnknownName {
                name: s.to_string(),
                catalog: "T2, T3, T4".to_string(),
            }),
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

const TABLE2: &str = include_str!("../data/table2.txt");
const TABLE3: &str = include_str!("../data/table3.txt");
const TABLE4: &str = include_str!("../data/table4.txt");

#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub label: String,
    pub expected: Vec<String>,
    pub actual: Vec<String>,
    pub matches: bool,
}

impl fmt::Display for TableRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.matches { "MATCH" } else { "MISMATCH" };
        write!(f, "{} {status} [{}]", self.label, self.actual.join(","))?;
        if !self.matches {
            write!(f, " expected [{}]", self.expected.join(","))?;
        }
        Ok(())
    }
}

fn fixture_rows(text: &str) -> impl Iterator<Item = Vec<usize>> + '_ {
    text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).map(|l| {
        l.split_whitespace()
            .map(|t| t.parse().expect("fixture tables hold integers"))
            .collect()
    })
}

/// The fixed rows of a table, as `(n, m)` pairs (`(n, c)` for `T2`).
pub fn table_keys(table: TableId) -> Vec<(usize, usize)> {
    let text = match table {
        TableId::T2 => TABLE2,
        TableId::T3 => TABLE3,
        TableId::T4 => TABLE4,
    };
    let mut keys: Vec<(usize, usize)> = fixture_rows(text).map(|r| (r[0], r[1])).collect();
    keys.dedup();
    keys
}

/// Regenerates every row of a table and compares with the stored row.
pub fn reproduce_table(table: TableId) -> Result<Vec<TableRow>> {
    reproduce_rows(table, |_| true)
}

/// Like `reproduce_table`, restricted to rows whose `n` passes `keep`.
pub fn reproduce_rows(table: TableId, keep: impl Fn(usize) -> bool) -> Result<Vec<TableRow>> {
    reproduce_rows_with(&Factoring::default(), table, keep)
}

pub fn reproduce_rows_with(engine: &Factoring, table: TableId, keep: impl Fn(usize) -> bool) -> Result<Vec<TableRow>> {
    match table {
        TableId::T2 => {
            let mut out = Vec::new();
            for row in fixture_rows(TABLE2).filter(|r| keep(r[0])) {
                let (n, c, cut) = (row[0], row[1], row[2]);
                let ((p, q), (u, v)) = fcg_positions(n, c)?[cut - 1];
                let actual = vec![p, q, u, v];
                out.push(TableRow {
                    label: format!("FCG({n},{c}) cut {cut}"),
                    expected: row[3..].iter().map(ToString::to_string).collect(),
                    actual: actual.iter().map(ToString::to_string).collect(),
                    matches: actual == row[3..],
                });
            }
            Ok(out)
        }
        TableId::T3 | TableId::T4 => {
            let text = if table == TableId::T3 { TABLE3 } else { TABLE4 };
            let mut out = Vec::new();
            for row in fixture_rows(text).filter(|r| keep(r[0])) {
                let (n, m) = (row[0], row[1]);
                let graphs = if table == TableId::T3 {
                    enumerate_hamiltonian(n, m - n)?
                } else {
                    enumerate_hd(n)?
                };
                let report = search_umr_with(engine, &graphs)?;
                let actual: Vec<String> = match report.best_vector() {
                    Some(v) => v.iter().map(ToString::to_string).collect(),
                    None => vec!["none".to_string()],
                };
                let expected: Vec<String> = row[2..].iter().map(ToString::to_string).collect();
                let family = if table == TableId::T3 { "H" } else { "H_D" };
                out.push(TableRow {
                    label: format!("{family}({n},{m})"),
                    matches: actual == expected,
                    expected,
                    actual,
                });
            }
            Ok(out)
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MemberCheck {
    pub name: String,
    #[serde(serialize_with = "as_graph6")]
    pub graph: Multigraph,
    pub ore: bool,
    pub cycle: Option<HamCycle>,
    pub poly: RelPoly,
}

/// Two hamiltonian graphs of equal size whose reliabilities cross.
#[derive(Debug, Clone, Serialize)]
pub struct NonexistenceCertificate {
    pub n: usize,
    pub m: usize,
    pub members: [MemberCheck; 2],
    pub verdict: ComparisonVerdict,
}

impl NonexistenceCertificate {
    /// Both members hamiltonian and the verdict a crossing.
    pub fn certified(&self) -> bool {
        self.members.iter().all(|c| c.cycle.is_some()) && self.verdict.is_crossing()
    }
}

impl fmt::Display for NonexistenceCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={} m={}", self.n, self.m)?;
        for c in &self.members {
            let ham = match &c.cycle {
                Some(cyc) => format!("hamiltonian {cyc}"),
                None => "not hamiltonian".to_string(),
            };
            writeln!(f, "  {} ore={} {ham} {}", c.name, c.ore, c.poly)?;
        }
        writeln!(f, "  {} vs {}: {}", self.members[0].name, self.members[1].name, self.verdict)?;
        write!(f, "  {}", if self.certified() { "CERTIFIED" } else { "NOT CERTIFIED" })
    }
}

/// The crossing pair `g1, g2` (even `n >= 6`) or `g3, g4` (odd `n >= 7`).
pub fn verify_nonexistence(n: usize) -> Result<NonexistenceCertificate> {
    verify_nonexistence_with(&Factoring::default(), n)
}

pub fn verify_nonexistence_with(engine: &Factoring, n: usize) -> Result<NonexistenceCertificate> {
    let names = if n % 2 == 0 { ["g1", "g2"] } else { ["g3", "g4"] };
    let check = |name: &str| -> Result<MemberCheck> {
        let graph = complement_family(name, n)?;
        Ok(MemberCheck {
            name: name.to_string(),
            ore: ore_condition(&graph),
            cycle: find_hamiltonian_cycle(&graph),
            poly: engine.compute(&graph),
            graph,
        })
    };
    let members = [check(names[0])?, check(names[1])?];
    let verdict = compare_on_unit_interval(&members[0].poly, &members[1].poly)?;
    Ok(NonexistenceCertificate {
        n,
        m: members[0].graph.edge_count(),
        members,
        verdict,
    })
}
