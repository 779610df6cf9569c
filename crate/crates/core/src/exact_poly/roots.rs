//! Sturm-chain root counting with multiplicities.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::intpoly::{square_free_decomposition, sturm_like_chain, IntPoly};
use super::polynomial::Polynomial;
use super::rational::{format_rational, Rational};
use crate::error::{Error, Result};

/// One end of an interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    Unbounded,
    Closed(Rational),
    Open(Rational),
}

impl Bound {
    fn value(&self) -> Option<&Rational> {
        match self {
            Bound::Unbounded => None,
            Bound::Closed(v) | Bound::Open(v) => Some(v),
        }
    }
}

/// A real interval with independently open, closed or infinite ends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lower: Bound,
    upper: Bound,
}

impl Interval {
    pub fn new(lower: Bound, upper: Bound) -> Result<Self> {
        if let (Some(a), Some(b)) = (lower.value(), upper.value()) {
            if a > b {
                return Err(Error::InvalidInterval(format!(
                    "lower end {a} exceeds upper end {b}"
                )));
            }
        }
        Ok(Interval { lower, upper })
    }

    /// `[a, b]`.
    pub fn closed(a: Rational, b: Rational) -> Result<Self> {
        Self::new(Bound::Closed(a), Bound::Closed(b))
    }

    /// `(a, b)`.
    pub fn open(a: Rational, b: Rational) -> Result<Self> {
        Self::new(Bound::Open(a), Bound::Open(b))
    }

    /// `(-inf, inf)`.
    pub fn real_line() -> Self {
        Interval {
            lower: Bound::Unbounded,
            upper: Bound::Unbounded,
        }
    }

    /// `(-inf, a]`.
    pub fn at_most(a: Rational) -> Self {
        Interval {
            lower: Bound::Unbounded,
            upper: Bound::Closed(a),
        }
    }

    /// `[b, inf)`.
    pub fn at_least(b: Rational) -> Self {
        Interval {
            lower: Bound::Closed(b),
            upper: Bound::Unbounded,
        }
    }

    /// `(-inf, a)`.
    pub fn below(a: Rational) -> Self {
        Interval {
            lower: Bound::Unbounded,
            upper: Bound::Open(a),
        }
    }

    pub fn lower(&self) -> &Bound {
        &self.lower
    }

    pub fn upper(&self) -> &Bound {
        &self.upper
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let lower_ok = match &self.lower {
            Bound::Unbounded => true,
            Bound::Closed(a) => a <= x,
            Bound::Open(a) => a < x,
        };
        let upper_ok = match &self.upper {
            Bound::Unbounded => true,
            Bound::Closed(b) => x <= b,
            Bound::Open(b) => x < b,
        };
        lower_ok && upper_ok
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.lower {
            Bound::Unbounded => write!(f, "(-inf")?,
            Bound::Closed(a) => write!(f, "[{}", format_rational(a))?,
            Bound::Open(a) => write!(f, "({}", format_rational(a))?,
        }
        f.write_str(", ")?;
        match &self.upper {
            Bound::Unbounded => write!(f, "inf)"),
            Bound::Closed(b) => write!(f, "{}]", format_rational(b)),
            Bound::Open(b) => write!(f, "{})", format_rational(b)),
        }
    }
}

/// Exact root counts (with multiplicity) of a polynomial against a region.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootLocationReport {
    pub degree: usize,
    pub total_real_roots_with_multiplicity: usize,
    pub roots_in_region_with_multiplicity: usize,
    pub all_roots_in_region: bool,
}

impl RootLocationReport {
    fn new(degree: usize, total: usize, in_region: usize) -> Self {
        debug_assert!(in_region <= total && total <= degree);
        RootLocationReport {
            degree,
            total_real_roots_with_multiplicity: total,
            roots_in_region_with_multiplicity: in_region,
            all_roots_in_region: in_region == degree,
        }
    }
}

/// Precomputed square-free factors and their Sturm chains, reusable across
/// many interval queries on the same polynomial.
#[derive(Clone, Debug)]
pub struct RootCounter {
    degree: usize,
    factors: Vec<(usize, Vec<IntPoly>)>,
}

impl RootCounter {
    pub fn new(p: &Polynomial) -> Result<Self> {
        let degree = p.degree().ok_or(Error::ZeroPolynomial)?;
        let ip = IntPoly::from_rational(p);
        let factors = square_free_decomposition(&ip)
            .into_iter()
            .map(|(m, f)| {
                let df = f.derivative();
                (m, sturm_like_chain(&f, &df))
            })
            .collect();
        Ok(RootCounter { degree, factors })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Real roots with multiplicity.
    pub fn total_real_roots(&self) -> usize {
        self.count(&Interval::real_line())
    }

    /// Roots in `interval`, with multiplicity.
    pub fn count(&self, interval: &Interval) -> usize {
        self.factors
            .iter()
            .map(|(m, chain)| m * distinct_roots(chain, interval))
            .sum()
    }

    /// Roots in the union of pairwise disjoint intervals.
    pub fn count_union(&self, intervals: &[Interval]) -> usize {
        intervals.iter().map(|i| self.count(i)).sum()
    }

    pub fn report(&self, interval: &Interval) -> RootLocationReport {
        RootLocationReport::new(self.degree, self.total_real_roots(), self.count(interval))
    }

    pub fn report_union(&self, intervals: &[Interval]) -> RootLocationReport {
        RootLocationReport::new(
            self.degree,
            self.total_real_roots(),
            self.count_union(intervals),
        )
    }
}

enum Point<'a> {
    NegInf,
    PosInf,
    At(&'a Rational),
}

fn variations(chain: &[IntPoly], at: Point<'_>) -> usize {
    let mut count = 0;
    let mut last = Ordering::Equal;
    for p in chain {
        let s = match at {
            Point::NegInf => p.sign_at_neg_inf(),
            Point::PosInf => p.sign_at_pos_inf(),
            Point::At(x) => p.sign_at(x),
        };
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

/// Distinct roots of the square-free `chain[0]` inside `interval`.
fn distinct_roots(chain: &[IntPoly], interval: &Interval) -> usize {
    let f = &chain[0];
    let is_root = |x: &Rational| f.sign_at(x) == Ordering::Equal;

    if let (Some(a), Some(b)) = (interval.lower.value(), interval.upper.value()) {
        if a == b {
            let closed = matches!(interval.lower, Bound::Closed(_))
                && matches!(interval.upper, Bound::Closed(_));
            return usize::from(closed && is_root(a));
        }
    }

    // V(lo) - V(hi) counts roots in the half-open (lo, hi].
    let v_lo = match &interval.lower {
        Bound::Unbounded => variations(chain, Point::NegInf),
        Bound::Closed(a) | Bound::Open(a) => variations(chain, Point::At(a)),
    };
    let v_hi = match &interval.upper {
        Bound::Unbounded => variations(chain, Point::PosInf),
        Bound::Closed(b) | Bound::Open(b) => variations(chain, Point::At(b)),
    };
    let mut n = v_lo as isize - v_hi as isize;
    if let Bound::Closed(a) = &interval.lower {
        if is_root(a) {
            n += 1;
        }
    }
    if let Bound::Open(b) = &interval.upper {
        if is_root(b) {
            n -= 1;
        }
    }
    debug_assert!(n >= 0);
    n.max(0) as usize
}

/// Square-free part `p / gcd(p, p')`, monic.
pub fn square_free_part(p: &Polynomial) -> Result<Polynomial> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ip = IntPoly::from_rational(p);
    let product = square_free_decomposition(&ip)
        .into_iter()
        .fold(Polynomial::one(), |acc, (_, f)| &acc * &f.to_rational());
    Ok(product.monic())
}

/// Counts the roots of `p` (with multiplicity) inside `interval`.
pub fn count_roots_in_interval(p: &Polynomial, interval: &Interval) -> Result<RootLocationReport> {
    Ok(RootCounter::new(p)?.report(interval))
}

/// True when every complex root of `p` is real.
pub fn is_real_rooted(p: &Polynomial) -> Result<bool> {
    let rc = RootCounter::new(p)?;
    Ok(rc.total_real_roots() == rc.degree())
}
