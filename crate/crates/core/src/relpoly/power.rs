//! Integer polynomials in the monomial basis and Sturm root isolation.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `sum_k a_k p^k` with integer coefficients, lowest degree first.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PowerPoly {
    coeffs: Vec<BigInt>,
}

impl PowerPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PowerPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("non-zero polynomial")
    }

    pub fn sub(&self, other: &PowerPoly) -> PowerPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).cloned().unwrap_or_default();
                match other.coeffs.get(i) {
                    Some(b) => a - b,
                    None => a,
                }
            })
            .collect();
        PowerPoly::new(coeffs)
    }

    pub fn neg(&self) -> PowerPoly {
        PowerPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn derivative(&self) -> PowerPoly {
        PowerPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Sign of the value at `x`, computed without forming fractions.
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        // Horner on num/den leaves den^d * f(x), and den > 0
        let (num, den) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        acc.sign_ordering()
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides by the positive content.
    pub fn primitive(&self) -> PowerPoly {
        if self.is_zero() {
            return self.clone();
        }
        let g = self.content();
        PowerPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Pseudo-division: `lc(d)^(deg self - deg d + 1) * self = q * d + r`.
    pub fn pseudo_div(&self, d: &PowerPoly) -> (PowerPoly, PowerPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let Some(sd) = self.degree() else {
            return (PowerPoly::new(Vec::new()), PowerPoly::new(Vec::new()));
        };
        if sd < dd {
            return (PowerPoly::new(Vec::new()), self.clone());
        }
        let lc = d.leading().clone();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); sd - dd + 1];
        for step in (0..=sd - dd).rev() {
            let top = r[step + dd].clone();
            for c in q.iter_mut() {
                *c *= &lc;
            }
            for c in r.iter_mut() {
                *c *= &lc;
            }
            q[step] += &top;
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[step + i] -= &top * dc;
            }
        }
        (PowerPoly::new(q), PowerPoly::new(r))
    }

    /// Exact quotient; `d` must divide `self` in `Z[x]` after scaling by the
    /// content, which holds when `d` is primitive and a factor.
    pub fn exact_div(&self, d: &PowerPoly) -> PowerPoly {
        let (q, r) = self.pseudo_div(d);
        debug_assert!(r.is_zero(), "not a factor");
        let scale = d.leading().pow((self.degree().unwrap_or(0) + 1 - d.degree().unwrap_or(0)) as u32);
        PowerPoly::new(q.coeffs.into_iter().map(|c| c / &scale).collect())
    }

    /// Primitive greatest common divisor with positive leading coefficient.
    pub fn gcd(&self, other: &PowerPoly) -> PowerPoly {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let (_, r) = a.pseudo_div(&b);
            a = b;
            b = r.primitive();
        }
        if !a.is_zero() && a.leading().is_negative() {
            a = a.neg();
        }
        a
    }

    /// The product of the distinct irreducible factors, up to a constant.
    pub fn squarefree(&self) -> PowerPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.primitive();
        }
        let g = self.gcd(&self.derivative());
        self.primitive().exact_div(&g).primitive()
    }

    /// Removes every factor `p` and `p - 1`.
    pub fn strip_endpoint_roots(&self) -> PowerPoly {
        let mut f = self.primitive();
        while f.degree().unwrap_or(0) > 0 && f.coeffs[0].is_zero() {
            f.coeffs.remove(0);
        }
        let p_minus_one = PowerPoly::from_i64s(&[-1, 1]);
        while f.degree().unwrap_or(0) > 0 && f.coeffs.iter().sum::<BigInt>().is_zero() {
            f = f.exact_div(&p_minus_one);
        }
        f
    }

    fn sturm_sequence(&self) -> Vec<PowerPoly> {
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let len = seq.len();
            let (a, b) = (&seq[len - 2], &seq[len - 1]);
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            let (_, r) = a.pseudo_div(b);
            if r.is_zero() {
                break;
            }
            // pseudo-division multiplied by lc(b)^k; undo that sign
            let k = a.degree().unwrap_or(0) - b.degree().unwrap_or(0) + 1;
            let flip = b.leading().is_negative() && k % 2 == 1;
            let r = r.primitive();
            seq.push(if flip { r } else { r.neg() });
        }
        seq
    }

    /// Real roots in `(0, 1)` as disjoint isolating intervals with rational
    /// endpoints strictly inside `(0, 1)`, none of them a root. Each interval
    /// holds exactly one distinct root, and the list is increasing.
    pub fn isolate_unit_roots(&self) -> Vec<(BigRational, BigRational)> {
        if self.is_zero() {
            return Vec::new();
        }
        let f = self.strip_endpoint_roots().squarefree();
        if f.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let sturm = f.sturm_sequence();
        let changes = |x: &BigRational| sign_changes(&sturm, x);
        let zero = BigRational::zero();
        let one = BigRational::one();
        let mut out = Vec::new();
        let mut pending = vec![(zero.clone(), one.clone(), changes(&zero), changes(&one))];
        while let Some((lo, hi, vlo, vhi)) = pending.pop() {
            let count = vlo - vhi;
            if count == 0 {
                continue;
            }
            if count == 1 && lo > zero && hi < one {
                out.push((lo, hi));
                continue;
            }
            let mid = split_point(&f, &lo, &hi);
            let vmid = changes(&mid);
            pending.push((lo, mid.clone(), vlo, vmid));
            pending.push((mid, hi, vmid, vhi));
        }
        out.sort();
        out
    }
}

/// A point strictly between `lo` and `hi` where `f` does not vanish,
/// preferring the midpoint.
fn split_point(f: &PowerPoly, lo: &BigRational, hi: &BigRational) -> BigRational {
    let width = hi - lo;
    let mut k = 2;
    loop {
        for j in 1..k {
            let x = lo + &width * BigRational::new(BigInt::from(j), BigInt::from(k));
            if f.sign_at(&x) != Ordering::Equal {
                return x;
            }
        }
        k += 1;
    }
}

fn sign_changes(seq: &[PowerPoly], x: &BigRational) -> i64 {
    let mut last = Ordering::Equal;
    let mut count = 0;
    for p in seq {
        let s = p.sign_at(x);
        if s == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

impl fmt::Display for PowerPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match k {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => {}
                _ => write!(f, "{mag}*")?,
            }
            match k {
                0 => {}
                1 => write!(f, "p")?,
                _ => write!(f, "p^{k}")?,
            }
        }
        Ok(())
    }
}
