//! Sequence sources, the operator `L`, k-fold log-concavity windows and
//! Toeplitz minor searches.
//!
//! `L` maps `a_0, a_1, a_2, ...` to `a_0^2, a_1^2 - a_0 a_2, a_2^2 - a_1 a_3, ...`.
//! Computing `m` terms of `L^j(a)` needs exactly `m + j` input terms.

mod toeplitz;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_poly::{
    factorial, format_rational, int, is_real_rooted, serde_rational, Polynomial, Rational,
};

pub use toeplitz::{
    band_minor_search, determinant, toeplitz_minor, toeplitz_minor_search, MinorWitness,
};

/// Where the terms of a sequence come from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SequenceSource {
    /// A finitely supported sequence; terms past the list are zero.
    Explicit(Vec<Rational>),
    /// `a_k = p(k)`.
    PolyInterp(Polynomial),
    /// Coefficients of `e^{exp_rate x} numerator(x) / denominator(x)`.
    RationalGf {
        numerator: Polynomial,
        denominator: Polynomial,
        exp_rate: Rational,
    },
}

impl SequenceSource {
    /// Validated rational generating function source.
    pub fn rational_gf(
        numerator: Polynomial,
        denominator: Polynomial,
        exp_rate: Rational,
    ) -> Result<Self> {
        let src = SequenceSource::RationalGf {
            numerator,
            denominator,
            exp_rate,
        };
        src.validate()?;
        Ok(src)
    }

    fn validate(&self) -> Result<()> {
        if let SequenceSource::RationalGf {
            denominator,
            exp_rate,
            ..
        } = self
        {
            if denominator.coeff(0).is_zero() {
                return Err(Error::MalformedGeneratingFunction(
                    "denominator has zero constant term".into(),
                ));
            }
            if exp_rate.is_negative() {
                return Err(Error::MalformedGeneratingFunction(
                    "exponential rate must be nonnegative".into(),
                ));
            }
        }
        Ok(())
    }

    /// Short human-readable description, used as the truncation origin.
    pub fn describe(&self) -> String {
        match self {
            SequenceSource::Explicit(t) => format!(
                "explicit[{}]",
                t.iter().map(format_rational).collect::<Vec<_>>().join(", ")
            ),
            SequenceSource::PolyInterp(p) => format!("poly[{p}]"),
            SequenceSource::RationalGf {
                numerator,
                denominator,
                exp_rate,
            } => {
                let mut s = format!("gf[{numerator}]/[{denominator}]");
                if !exp_rate.is_zero() {
                    s.push_str(&format!("*exp({}x)", format_rational(exp_rate)));
                }
                s
            }
        }
    }
}

/// The first `len()` terms of a sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Truncation {
    #[serde(with = "serde_rational::vec")]
    pub terms: Vec<Rational>,
    pub origin: String,
}

impl Truncation {
    pub fn new(terms: Vec<Rational>, origin: impl Into<String>) -> Self {
        Truncation {
            terms,
            origin: origin.into(),
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// First `n` terms of `src`.
pub fn terms(src: &SequenceSource, n: usize) -> Result<Truncation> {
    src.validate()?;
    let out = match src {
        SequenceSource::Explicit(t) => (0..n)
            .map(|k| t.get(k).cloned().unwrap_or_else(Rational::zero))
            .collect(),
        SequenceSource::PolyInterp(p) => (0..n as i64).map(|k| p.eval_int(k)).collect(),
        SequenceSource::RationalGf {
            numerator,
            denominator,
            exp_rate,
        } => {
            let ratio = series_quotient(numerator, denominator, n);
            if exp_rate.is_zero() {
                ratio
            } else {
                let exp: Vec<Rational> = (0..n)
                    .map(|k| num_traits::pow(exp_rate.clone(), k) / factorial(k))
                    .collect();
                (0..n)
                    .map(|k| {
                        (0..=k)
                            .map(|i| &ratio[i] * &exp[k - i])
                            .fold(Rational::zero(), |a, b| a + b)
                    })
                    .collect()
            }
        }
    };
    Ok(Truncation::new(out, src.describe()))
}

/// Power series of `num / den` to `n` terms; `den(0) != 0`.
fn series_quotient(num: &Polynomial, den: &Polynomial, n: usize) -> Vec<Rational> {
    let d0_inv = den.coeff(0).recip();
    let mut out: Vec<Rational> = Vec::with_capacity(n);
    for k in 0..n {
        let mut acc = num.coeff(k);
        for i in 1..=k.min(den.coeffs().len().saturating_sub(1)) {
            acc -= &den.coeffs()[i] * &out[k - i];
        }
        out.push(acc * &d0_inv);
    }
    out
}

/// `L` on a list of terms; the output is one term shorter.
pub fn l_apply_terms(a: &[Rational]) -> Result<Vec<Rational>> {
    if a.is_empty() {
        return Err(Error::EmptySequence);
    }
    let mut out = Vec::with_capacity(a.len() - 1);
    if a.len() >= 2 {
        out.push(&a[0] * &a[0]);
    }
    for k in 1..a.len().saturating_sub(1) {
        out.push(&a[k] * &a[k] - &a[k - 1] * &a[k + 1]);
    }
    Ok(out)
}

/// `L` on a truncation.
pub fn l_apply(t: &Truncation) -> Result<Truncation> {
    Ok(Truncation::new(
        l_apply_terms(&t.terms)?,
        format!("L({})", t.origin),
    ))
}

/// The interpolant `p(x)^2 - p(x-1) p(x+1)` of `L({p(k)})`.
pub fn l_apply_poly(p: &Polynomial) -> Polynomial {
    let one = Rational::one();
    let back = p.shift(&-one.clone());
    let fwd = p.shift(&one);
    &(p * p) - &(&back * &fwd)
}

/// First `width` terms of `L^depth(src)`, from `width + depth` source terms.
pub fn l_iterate(src: &SequenceSource, depth: usize, width: usize) -> Result<Truncation> {
    let mut t = terms(src, width + depth)?;
    for _ in 0..depth {
        t = l_apply(&t)?;
    }
    Ok(t)
}

/// Verdict for one depth of a k-fold window check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum DepthVerdict {
    /// No negative term among the checked ones. Says nothing beyond them.
    NoViolationWithinWindow { depth: usize, checked: usize },
    /// A negative term, witnessed exactly.
    Refuted {
        depth: usize,
        index: usize,
        #[serde(with = "serde_rational")]
        value: Rational,
    },
}

impl DepthVerdict {
    pub fn depth(&self) -> usize {
        match self {
            DepthVerdict::NoViolationWithinWindow { depth, .. }
            | DepthVerdict::Refuted { depth, .. } => *depth,
        }
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, DepthVerdict::Refuted { .. })
    }
}

/// Per-depth result of checking `L^0 .. L^depth` on a finite window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KFoldReport {
    pub origin: String,
    pub width: usize,
    /// Source terms consumed: `width + depth`.
    pub lookahead: usize,
    pub verdicts: Vec<DepthVerdict>,
}

impl KFoldReport {
    pub fn first_refutation(&self) -> Option<&DepthVerdict> {
        self.verdicts.iter().find(|v| v.is_refuted())
    }
}

/// Checks the first `width` terms of `L^j(src)` for every `j <= depth`.
pub fn k_fold_check(src: &SequenceSource, depth: usize, width: usize) -> Result<KFoldReport> {
    let base = terms(src, width + depth)?;
    let mut current = base.terms;
    let mut verdicts = Vec::with_capacity(depth + 1);
    for j in 0..=depth {
        if j > 0 {
            current = l_apply_terms(&current)?;
        }
        let window = &current[..width];
        let verdict = match window.iter().position(Signed::is_negative) {
            Some(i) => DepthVerdict::Refuted {
                depth: j,
                index: i,
                value: window[i].clone(),
            },
            None => DepthVerdict::NoViolationWithinWindow {
                depth: j,
                checked: width,
            },
        };
        verdicts.push(verdict);
    }
    Ok(KFoldReport {
        origin: src.describe(),
        width,
        lookahead: width + depth,
        verdicts,
    })
}

/// Why a finitely supported sequence is or is not PF.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum FinitePfReport {
    /// Nonnegative terms and a real-rooted generating polynomial.
    Pf {
        generating_polynomial: Polynomial,
    },
    AllZero,
    NegativeTerm {
        index: usize,
        #[serde(with = "serde_rational")]
        value: Rational,
    },
    /// The generating polynomial has non-real roots.
    NotRealRooted {
        generating_polynomial: Polynomial,
        real_roots_with_multiplicity: usize,
        degree: usize,
    },
}

impl FinitePfReport {
    pub fn is_pf(&self) -> bool {
        matches!(self, FinitePfReport::Pf { .. } | FinitePfReport::AllZero)
    }
}

/// PF test for a finitely supported sequence: nonnegative terms and a
/// real-rooted generating polynomial (which then has no positive roots).
pub fn finite_pf_report(terms: &[Rational]) -> Result<FinitePfReport> {
    if let Some(i) = terms.iter().position(Signed::is_negative) {
        return Ok(FinitePfReport::NegativeTerm {
            index: i,
            value: terms[i].clone(),
        });
    }
    let gp = Polynomial::new(terms.to_vec());
    if gp.is_zero() {
        return Ok(FinitePfReport::AllZero);
    }
    let rc = crate::exact_poly::RootCounter::new(&gp)?;
    let real = rc.total_real_roots();
    if real == rc.degree() {
        debug_assert!(is_real_rooted(&gp)?);
        Ok(FinitePfReport::Pf {
            generating_polynomial: gp,
        })
    } else {
        Ok(FinitePfReport::NotRealRooted {
            degree: rc.degree(),
            real_roots_with_multiplicity: real,
            generating_polynomial: gp,
        })
    }
}

pub fn finite_pf_check(terms: &[Rational]) -> bool {
    finite_pf_report(terms).is_ok_and(|r| r.is_pf())
}

/// Convenience: the sequence `{k^d}`.
pub fn power_sequence(d: usize) -> SequenceSource {
    SequenceSource::PolyInterp(Polynomial::monomial(int(1), d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn gf(num: &[i64], den: &[i64]) -> SequenceSource {
        SequenceSource::rational_gf(
            Polynomial::from_ints(num),
            Polynomial::from_ints(den),
            Rational::zero(),
        )
        .unwrap()
    }

    pub(crate) fn cubic_gf_source() -> SequenceSource {
        // (1+x)^3 / ((1-x)(1-2x)^2)
        let den = &Polynomial::from_ints(&[1, -1]) * &Polynomial::from_ints(&[1, -2]).pow(2);
        SequenceSource::rational_gf(Polynomial::from_ints(&[1, 3, 3, 1]), den, Rational::zero())
            .unwrap()
    }

    #[test]
    fn gf_terms() {
        assert_eq!(
            terms(&cubic_gf_source(), 5).unwrap().terms,
            ints(&[1, 8, 35, 116, 332])
        );
        assert_eq!(
            terms(&gf(&[1, 3, 3, 1], &[1, -10]), 5).unwrap().terms,
            ints(&[1, 13, 133, 1331, 13310])
        );
        let p = SequenceSource::PolyInterp(Polynomial::x());
        assert_eq!(terms(&p, 4).unwrap().terms, ints(&[0, 1, 2, 3]));
    }

    #[test]
    fn exponential_factor() {
        // e^x / (1 - x) has partial sums of 1/k!.
        let src =
            SequenceSource::rational_gf(Polynomial::one(), Polynomial::from_ints(&[1, -1]), int(1))
                .unwrap();
        let t = terms(&src, 4).unwrap().terms;
        assert_eq!(t[3], crate::exact_poly::ratio(8, 3));
    }

    #[test]
    fn malformed_gf() {
        let bad = SequenceSource::rational_gf(Polynomial::one(), Polynomial::x(), Rational::zero());
        assert!(matches!(bad, Err(Error::MalformedGeneratingFunction(_))));
        let neg = SequenceSource::rational_gf(Polynomial::one(), Polynomial::one(), int(-1));
        assert!(neg.is_err());
    }

    #[test]
    fn l_on_terms() {
        assert_eq!(
            l_apply_terms(&ints(&[1, 1, 1, 1])).unwrap(),
            ints(&[1, 0, 0])
        );
        assert_eq!(
            l_apply_terms(&ints(&[1, 8, 35, 116, 332])).unwrap(),
            ints(&[1, 29, 297, 1836])
        );
        assert_eq!(
            l_apply_terms(&ints(&[1, 13, 133, 1331, 13310])).unwrap(),
            ints(&[1, 36, 386, 1331])
        );
        assert_eq!(l_apply_terms(&[]), Err(Error::EmptySequence));
        assert!(l_apply_terms(&ints(&[4])).unwrap().is_empty());
    }

    #[test]
    fn l_on_polynomials() {
        assert_eq!(
            l_apply_poly(&Polynomial::from_ints(&[0, 0, 0, 1])),
            Polynomial::from_ints(&[1, 0, -3, 0, 3])
        );
        assert_eq!(
            l_apply_poly(&Polynomial::from_ints(&[0, 1, 1])),
            Polynomial::from_ints(&[0, 2, 2])
        );
        // c^2 - c*c: the constant term a_0^2 of L on terms is not interpolated.
        assert_eq!(
            l_apply_poly(&Polynomial::from_ints(&[7])),
            Polynomial::zero()
        );
    }

    #[test]
    fn iterate_identity_and_cross_path() {
        let src = cubic_gf_source();
        assert_eq!(l_iterate(&src, 0, 3).unwrap().terms, ints(&[1, 8, 35]));
        let p = Polynomial::from_ints(&[0, 1, 1]);
        let via_terms = l_iterate(&SequenceSource::PolyInterp(p.clone()), 2, 6).unwrap();
        let q = l_apply_poly(&l_apply_poly(&p));
        assert_eq!(
            via_terms.terms,
            terms(&SequenceSource::PolyInterp(q), 6).unwrap().terms
        );
    }

    #[test]
    fn k_fold_constant_sequence() {
        let ones = SequenceSource::PolyInterp(Polynomial::one());
        let r = k_fold_check(&ones, 6, 10).unwrap();
        assert!(r.first_refutation().is_none());
        assert_eq!(r.lookahead, 16);
    }

    #[test]
    fn finite_pf_examples() {
        assert!(!finite_pf_check(&ints(&[1, 36, 386, 1331])));
        assert!(finite_pf_check(&ints(&[1, 2, 1])));
        assert!(!finite_pf_check(&ints(&[1, 1, 1])));
        assert!(finite_pf_check(&ints(&[0, 0])));
        assert!(!finite_pf_check(&ints(&[1, -1])));
        assert!(finite_pf_check(&ints(&[0, 0, 1, 3, 2])));
    }
}
