//! Ordering reliability polynomials: coefficient-wise and on `(0, 1)`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Serialize, Serializer};

use super::{PowerPoly, RelPoly};
use crate::error::{Error, Result};

/// Coefficient-wise comparison of pathset vectors of equal length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CoefficientOrder {
    /// Every `N_i` of the first is at least that of the second (equality included).
    Dominates,
    /// The second strictly dominates the first.
    Dominated,
    Incomparable,
}

pub fn dominates(a: &RelPoly, b: &RelPoly) -> Result<CoefficientOrder> {
    check_lengths(a, b)?;
    let pairs = || a.counts().iter().zip(b.counts());
    if pairs().all(|(x, y)| x >= y) {
        Ok(CoefficientOrder::Dominates)
    } else if pairs().all(|(x, y)| x <= y) {
        Ok(CoefficientOrder::Dominated)
    } else {
        Ok(CoefficientOrder::Incomparable)
    }
}

fn check_lengths(a: &RelPoly, b: &RelPoly) -> Result<()> {
    if a.edge_count() != b.edge_count() {
        return Err(Error::EdgeCountMismatch {
            left: a.edge_count(),
            right: b.edge_count(),
        });
    }
    Ok(())
}

/// Open interval with rational endpoints containing exactly one root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootInterval {
    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo < x && x < &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint_f64(&self) -> f64 {
        let mid = (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2));
        ratio_to_f64(&mid)
    }
}

pub(crate) fn ratio_to_f64(x: &BigRational) -> f64 {
    // display-only conversion; decisions never use it
    let scale = BigInt::from(1u64 << 53);
    let scaled = (x * BigRational::from_integer(scale.clone())).round().to_integer();
    let num: f64 = scaled.to_string().parse().unwrap_or(f64::NAN);
    num / (1u64 << 53) as f64
}

impl fmt::Display for RootInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lo, self.hi)
    }
}

impl Serialize for RootInterval {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [fraction(&self.lo), fraction(&self.hi)].serialize(s)
    }
}

fn fraction(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ComparisonVerdict {
    /// `Rel(A, p) >= Rel(B, p)` on all of `[0, 1]`, not identically equal.
    FirstDominates,
    SecondDominates,
    Equal,
    /// The difference changes sign once inside each interval.
    Crossing {
        intervals: Vec<RootInterval>,
        first_larger_near_zero: bool,
    },
}

impl ComparisonVerdict {
    pub fn is_crossing(&self) -> bool {
        matches!(self, ComparisonVerdict::Crossing { .. })
    }

    /// The verdict with the arguments swapped.
    pub fn swapped(&self) -> ComparisonVerdict {
        match self {
            ComparisonVerdict::FirstDominates => ComparisonVerdict::SecondDominates,
            ComparisonVerdict::SecondDominates => ComparisonVerdict::FirstDominates,
            ComparisonVerdict::Equal => ComparisonVerdict::Equal,
            ComparisonVerdict::Crossing {
                intervals,
                first_larger_near_zero,
            } => ComparisonVerdict::Crossing {
                intervals: intervals.clone(),
                first_larger_near_zero: !first_larger_near_zero,
            },
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            ComparisonVerdict::FirstDominates => "FIRST_DOMINATES",
            ComparisonVerdict::SecondDominates => "SECOND_DOMINATES",
            ComparisonVerdict::Equal => "EQUAL",
            ComparisonVerdict::Crossing { .. } => "CROSSING",
        }
    }
}

impl fmt::Display for ComparisonVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())?;
        if let ComparisonVerdict::Crossing {
            intervals,
            first_larger_near_zero,
        } = self
        {
            let near_zero = if *first_larger_near_zero { "first" } else { "second" };
            write!(f, " ({near_zero} larger near 0)")?;
            for iv in intervals {
                write!(f, " {iv}")?;
            }
        }
        Ok(())
    }
}

/// Sign behavior of `Rel(A, p) - Rel(B, p)` on `(0, 1)`, decided exactly.
/// Touching roots (even multiplicity) do not break dominance.
pub fn compare_on_unit_interval(a: &RelPoly, b: &RelPoly) -> Result<ComparisonVerdict> {
    check_lengths(a, b)?;
    let diff = a.to_power().sub(&b.to_power());
    if diff.is_zero() {
        return Ok(ComparisonVerdict::Equal);
    }
    let roots = diff.isolate_unit_roots();
    let mut intervals = Vec::new();
    for (lo, hi) in roots {
        if diff.sign_at(&lo) != diff.sign_at(&hi) {
            intervals.push(RootInterval { lo, hi });
        }
    }
    let probe = match intervals.first() {
        Some(iv) => iv.lo.clone(),
        None => nonroot_point(&diff),
    };
    let positive = diff.sign_at(&probe) == Ordering::Greater;
    Ok(if !intervals.is_empty() {
        ComparisonVerdict::Crossing {
            intervals: intervals.into_iter().map(|iv| narrow(&diff, iv)).collect(),
            first_larger_near_zero: positive,
        }
    } else if positive {
        ComparisonVerdict::FirstDominates
    } else {
        ComparisonVerdict::SecondDominates
    })
}

fn nonroot_point(f: &PowerPoly) -> BigRational {
    let mut k = 2i64;
    loop {
        let x = BigRational::new(BigInt::one(), BigInt::from(k));
        if f.sign_at(&x) != Ordering::Equal {
            return x;
        }
        k += 1;
    }
}

/// Bisects a sign-change interval to width below `2^-20`.
fn narrow(f: &PowerPoly, mut iv: RootInterval) -> RootInterval {
    let limit = BigRational::new(BigInt::one(), BigInt::from(1u64 << 20));
    let two = BigRational::from_integer(BigInt::from(2));
    let lo_sign = f.sign_at(&iv.lo);
    while iv.width() >= limit {
        let mid = (&iv.lo + &iv.hi) / &two;
        match f.sign_at(&mid) {
            Ordering::Equal => {
                // exact rational root: keep a tight interval around it
                let eps = &limit / &two;
                return RootInterval {
                    lo: &mid - &eps,
                    hi: &mid + eps,
                };
            }
            s if s == lo_sign => iv.lo = mid,
            _ => iv.hi = mid,
        }
    }
    iv
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(v: &[u64]) -> RelPoly {
        RelPoly::from_u64s(v).unwrap()
    }

    #[test]
    fn coefficient_order() {
        let a = rel(&[0, 0, 3, 4, 1]);
        let b = rel(&[0, 0, 2, 4, 1]);
        let c = rel(&[0, 0, 1, 5, 1]);
        assert_eq!(dominates(&a, &b).unwrap(), CoefficientOrder::Dominates);
        assert_eq!(dominates(&b, &a).unwrap(), CoefficientOrder::Dominated);
        assert_eq!(dominates(&a, &a).unwrap(), CoefficientOrder::Dominates);
        assert_eq!(dominates(&a, &c).unwrap(), CoefficientOrder::Incomparable);
        assert!(dominates(&a, &rel(&[0, 1])).is_err());
    }

    #[test]
    fn equal_and_dominated() {
        let a = rel(&[0, 0, 3, 4, 1]);
        let b = rel(&[0, 0, 2, 4, 1]);
        assert_eq!(compare_on_unit_interval(&a, &a).unwrap(), ComparisonVerdict::Equal);
        assert_eq!(compare_on_unit_interval(&a, &b).unwrap(), ComparisonVerdict::FirstDominates);
        assert_eq!(compare_on_unit_interval(&b, &a).unwrap(), ComparisonVerdict::SecondDominates);
    }

    #[test]
    fn crossing_found_and_located() {
        // difference (in the N basis) [0, 0, 1, -1, 0]: p^2 (1-p)^2 - p^3 (1-p)
        // = p^2 (1-p) (1 - 2p), sign change at 1/2
        let a = rel(&[0, 0, 2, 3, 1]);
        let b = rel(&[0, 0, 1, 4, 1]);
        let v = compare_on_unit_interval(&a, &b).unwrap();
        let ComparisonVerdict::Crossing {
            intervals,
            first_larger_near_zero,
        } = &v
        else {
            panic!("expected crossing, got {v}");
        };
        assert!(first_larger_near_zero);
        assert_eq!(intervals.len(), 1);
        assert!(intervals[0].contains(&BigRational::new(1.into(), 2.into())));
        assert_eq!(compare_on_unit_interval(&b, &a).unwrap(), v.swapped());
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(json["verdict"], "crossing");
        assert!(json["intervals"][0][0].as_str().unwrap().contains('/'));
    }

    #[test]
    fn touching_root_is_not_a_crossing() {
        // difference p^2 (1-p)^2 (1 - 2p)^2 >= 0: expand in the N basis of m = 6
        // (1-2p)^2 = (1-p)^2 - 2p(1-p) + p^2, so the N-difference is [0,0,1,-2,1,0,0]
        let a = rel(&[0, 0, 5, 3, 6, 6, 1]);
        let b = rel(&[0, 0, 4, 5, 5, 6, 1]);
        assert_eq!(compare_on_unit_interval(&a, &b).unwrap(), ComparisonVerdict::FirstDominates);
    }
}
