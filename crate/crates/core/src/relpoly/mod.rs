//! All-terminal reliability polynomials.
//!
//! A graph with `m` edges, each operational independently with probability
//! `p`, stays connected with probability `sum_i N_i p^i (1-p)^(m-i)`, where
//! `N_i` counts the connected spanning subgraphs with exactly `i` edges.
//! [`RelPoly`] stores that pathset-count vector exactly.

mod compare;
mod factoring;
mod oracle;
mod power;

pub use compare::{compare_on_unit_interval, dominates, CoefficientOrder, ComparisonVerdict, RootInterval};
pub use factoring::{rel_factoring, Factoring, FactoringConfig, FactoringStats, PivotPolicy};
pub use oracle::{rel_bruteforce, spanning_tree_count, BRUTE_FORCE_EDGE_LIMIT};
pub use power::PowerPoly;

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact pathset counts `N_0..=N_m` of a graph with `m` edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RelPoly {
    counts: Vec<BigUint>,
}

impl RelPoly {
    /// Builds from `N_0..=N_m`; the edge count is `counts.len() - 1`.
    pub fn from_counts(counts: Vec<BigUint>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::InvalidParameter("pathset vector needs at least N_0".into()));
        }
        Ok(RelPoly { counts })
    }

    pub fn from_u64s(counts: &[u64]) -> Result<Self> {
        Self::from_counts(counts.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub(crate) fn from_counting_poly(m: usize, mut poly: Vec<BigUint>) -> Self {
        debug_assert!(poly.len() <= m + 1);
        poly.resize(m + 1, BigUint::zero());
        RelPoly { counts: poly }
    }

    pub fn edge_count(&self) -> usize {
        self.counts.len() - 1
    }

    /// `N_0..=N_m`.
    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn count(&self, i: usize) -> &BigUint {
        &self.counts[i]
    }

    pub fn is_zero(&self) -> bool {
        self.counts.iter().all(Zero::is_zero)
    }

    /// Exact value at `p`, which must lie in `[0, 1]`.
    pub fn evaluate(&self, p: &BigRational) -> Result<BigRational> {
        if p < &BigRational::zero() || p > &BigRational::one() {
            return Err(Error::ProbabilityOutOfRange(p.to_string()));
        }
        let q = BigRational::one() - p;
        let m = self.edge_count();
        let mut total = BigRational::zero();
        for (i, c) in self.counts.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = p.pow(i as i32) * q.pow((m - i) as i32);
            total += term * BigRational::from_integer(BigInt::from(c.clone()));
        }
        Ok(total)
    }

    /// Table layout: `[N_m, N_{m-1}, ..., N_{n-1}]` for a graph on `n` vertices.
    pub fn descending(&self, n: usize) -> Vec<BigUint> {
        let low = n.saturating_sub(1).min(self.edge_count());
        self.counts[low..].iter().rev().cloned().collect()
    }

    /// Same polynomial in the monomial basis `sum_k a_k p^k`.
    pub fn to_power(&self) -> PowerPoly {
        let m = self.edge_count();
        let mut coeffs = vec![BigInt::zero(); m + 1];
        for (i, c) in self.counts.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let c = BigInt::from(c.clone());
            let mut binom = BigInt::one();
            for j in 0..=m - i {
                let term = &c * &binom;
                if j % 2 == 0 {
                    coeffs[i + j] += term;
                } else {
                    coeffs[i + j] -= term;
                }
                binom = binom * BigInt::from(m - i - j) / BigInt::from(j + 1);
            }
        }
        PowerPoly::new(coeffs)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("RelPoly serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidParameter(format!("RelPoly JSON: {e}")))
    }
}

impl fmt::Display for RelPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

#[derive(Serialize, Deserialize)]
struct RelPolyJson {
    m: usize,
    #[serde(rename = "N")]
    counts: Vec<String>,
}

impl Serialize for RelPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RelPolyJson {
            m: self.edge_count(),
            counts: self.counts.iter().map(ToString::to_string).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RelPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = RelPolyJson::deserialize(d)?;
        if raw.counts.len() != raw.m + 1 {
            return Err(D::Error::custom(format!(
                "expected {} counts for m = {}, found {}",
                raw.m + 1,
                raw.m,
                raw.counts.len()
            )));
        }
        let counts = raw
            .counts
            .iter()
            .map(|s| s.parse::<BigUint>().map_err(|e| D::Error::custom(format!("`{s}`: {e}"))))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(RelPoly { counts })
    }
}

/// Comma-separated descending vector, the row layout of the coefficient tables.
pub fn descending_csv_row(label: &str, descending: &[BigUint]) -> String {
    let mut row = String::from(label);
    for c in descending {
        row.push(',');
        row.push_str(&c.to_string());
    }
    row
}
