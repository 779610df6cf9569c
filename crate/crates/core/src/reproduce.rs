//! Worked examples with their expected values embedded.
//!
//! Each [`Reproduction`] recomputes an example from scratch and compares
//! every expected value against the computed one. Values are exact strings.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::binomial_basis::e_transform;
use crate::certify::wgn_check;
use crate::error::{Error, Result};
use crate::exact_poly::{format_rational, int, is_real_rooted, Polynomial, Rational};
use crate::sequences::{
    band_minor_search, finite_pf_report, k_fold_check, l_iterate, terms, toeplitz_minor_search,
    FinitePfReport, SequenceSource, Truncation,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExampleId {
    #[serde(rename = "ex-1-4")]
    Ex14,
    #[serde(rename = "ex-2-2a")]
    Ex22a,
    #[serde(rename = "ex-2-2b")]
    Ex22b,
    #[serde(rename = "counterexample-gf")]
    CounterexampleGf,
}

impl ExampleId {
    pub const ALL: [ExampleId; 4] = [
        ExampleId::Ex14,
        ExampleId::Ex22a,
        ExampleId::Ex22b,
        ExampleId::CounterexampleGf,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ExampleId::Ex14 => "ex-1-4",
            ExampleId::Ex22a => "ex-2-2a",
            ExampleId::Ex22b => "ex-2-2b",
            ExampleId::CounterexampleGf => "counterexample-gf",
        }
    }
}

impl fmt::Display for ExampleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ExampleId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ExampleId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown example id {s:?}")))
    }
}

/// One embedded expected value and what was computed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expectation {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
    /// Why an expectation is known not to hold, when it is not.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Expectation {
    fn new(name: &str, expected: impl ToString, actual: impl ToString) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        Expectation {
            name: name.into(),
            pass: expected == actual,
            expected,
            actual,
            note: None,
        }
    }

    fn with_note(mut self, note: &str) -> Self {
        if !self.pass {
            self.note = Some(note.into());
        }
        self
    }
}

/// A supporting exact value that is reported but not compared.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Detail {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reproduction {
    pub example: ExampleId,
    pub expectations: Vec<Expectation>,
    pub details: Vec<Detail>,
}

impl Reproduction {
    pub fn passed(&self) -> bool {
        self.expectations.iter().all(|e| e.pass)
    }

    pub fn expectation(&self, name: &str) -> Option<&Expectation> {
        self.expectations.iter().find(|e| e.name == name)
    }

    pub fn detail(&self, name: &str) -> Option<&str> {
        self.details
            .iter()
            .find(|d| d.name == name)
            .map(|d| d.value.as_str())
    }

    fn detail_push(&mut self, name: &str, value: impl ToString) {
        self.details.push(Detail {
            name: name.into(),
            value: value.to_string(),
        });
    }
}

pub fn reproduce(id: ExampleId) -> Result<Reproduction> {
    let mut r = Reproduction {
        example: id,
        expectations: Vec::new(),
        details: Vec::new(),
    };
    match id {
        ExampleId::Ex14 => ex_1_4(&mut r)?,
        ExampleId::Ex22a => ex_2_2a(&mut r)?,
        ExampleId::Ex22b => ex_2_2b(&mut r)?,
        ExampleId::CounterexampleGf => counterexample_gf(&mut r)?,
    }
    Ok(r)
}

fn join(v: &[Rational]) -> String {
    v.iter().map(format_rational).collect::<Vec<_>>().join(", ")
}

/// `(1 + x)^3 / ((1 - x)(1 - 2x)^2)`.
pub fn ex_1_4_source() -> SequenceSource {
    SequenceSource::rational_gf(
        Polynomial::from_ints(&[1, 3, 3, 1]),
        Polynomial::from_ints(&[1, -5, 8, -4]),
        Rational::zero(),
    )
    .expect("constant term 1")
}

/// `(1 + x)^3 / (1 - 10x)`.
pub fn counterexample_source() -> SequenceSource {
    SequenceSource::rational_gf(
        Polynomial::from_ints(&[1, 3, 3, 1]),
        Polynomial::from_ints(&[1, -10]),
        Rational::zero(),
    )
    .expect("constant term 1")
}

fn ex_1_4(r: &mut Reproduction) -> Result<()> {
    let src = ex_1_4_source();
    r.expectations.push(Expectation::new(
        "first five terms",
        "1, 8, 35, 116, 332",
        join(&terms(&src, 5)?.terms),
    ));
    r.expectations.push(Expectation::new(
        "first five terms of L^4",
        "1, 67251334144, 681452113625701425, 30700964335097660866560, \
         -41699291012783844888674304",
        join(&l_iterate(&src, 4, 5)?.terms),
    ));
    let report = k_fold_check(&src, 4, 5)?;
    let refuted_depth = report
        .first_refutation()
        .map_or_else(|| "none".to_string(), |v| v.depth().to_string());
    r.expectations
        .push(Expectation::new("first refuted depth", 4, refuted_depth));
    Ok(())
}

/// `E(p(x)^2 - p(x+1) p(x-1))`.
fn e_of_l(p: &Polynomial) -> Polynomial {
    e_transform(&crate::sequences::l_apply_poly(p))
}

fn ex_2_2a(r: &mut Reproduction) -> Result<()> {
    let p = Polynomial::monomial(int(1), 3);
    r.expectations
        .push(Expectation::new("wgn_check(x^3)", true, wgn_check(&p)?.0));
    let image = e_of_l(&p);
    r.expectations.push(Expectation::new(
        "E(p(x)^2 - p(x+1)p(x-1)) for p = x^3, coefficients from x^0 (72x^4 + 108x^3 + 36x^2 + 1)",
        Polynomial::from_ints(&[1, 0, 36, 108, 72]),
        &image,
    ));
    r.expectations.push(Expectation::new(
        "is_real_rooted",
        false,
        is_real_rooted(&image)?,
    ));
    Ok(())
}

/// `(x + 1)(x + 3)^2`.
pub fn ex_2_2b_polynomial() -> Polynomial {
    &Polynomial::from_ints(&[1, 1]) * &Polynomial::from_ints(&[3, 1]).pow(2)
}

fn ex_2_2b(r: &mut Reproduction) -> Result<()> {
    let q = ex_2_2b_polynomial();
    let (ok, report) = wgn_check(&q)?;
    r.expectations
        .push(Expectation::new("wgn_check(q)", true, ok).with_note(
            "E(q) = (x + 1)(6x^2 + 14x + 9) has a complex pair, so {q(k)} is not PF; \
             see the negative minor below",
        ));
    let lq = crate::sequences::l_apply_poly(&q);
    r.expectations.push(Expectation::new(
        "wgn_check(L-interpolant of q)",
        false,
        wgn_check(&lq)?.0,
    ));
    r.detail_push("q", &q);
    r.detail_push("E(q)", e_transform(&q));
    r.detail_push(
        "real zeros of E(q) in [-1, 0] / degree",
        format!(
            "{} / {}",
            report.roots_in_region_with_multiplicity, report.degree
        ),
    );
    r.detail_push("L-interpolant of q", &lq);
    let window = terms(&SequenceSource::PolyInterp(q), 10)?;
    if let Some(w) = toeplitz_minor_search(&window, 4) {
        r.detail_push("negative minor", minor_text(&w));
    }
    Ok(())
}

fn minor_text(w: &crate::sequences::MinorWitness) -> String {
    format!(
        "rows {:?}, cols {:?}, value {}",
        w.rows,
        w.cols,
        format_rational(&w.value)
    )
}

/// `b^2 c^2 - 4 a c^3 - 4 b^3 d - 27 a^2 d^2 + 18 a b c d` for `a x^3 + b x^2 + c x + d`.
fn cubic_discriminant(p: &Polynomial) -> Rational {
    let (d, c, b, a) = (p.coeff(0), p.coeff(1), p.coeff(2), p.coeff(3));
    &b * &b * &c * &c
        - int(4) * &a * &c * &c * &c
        - int(4) * &b * &b * &b * &d
        - int(27) * &a * &a * &d * &d
        + int(18) * &a * &b * &c * &d
}

/// Window width for the counterexample; large enough to reach the first
/// negative contiguous minor (order 15).
pub const COUNTEREXAMPLE_WIDTH: usize = 17;

fn counterexample_gf(r: &mut Reproduction) -> Result<()> {
    let src = counterexample_source();
    let image = l_iterate(&src, 1, COUNTEREXAMPLE_WIDTH)?;
    r.expectations.push(Expectation::new(
        "L-image window",
        "1, 36, 386, 1331, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0",
        join(&image.terms),
    ));
    let report = finite_pf_report(&image.terms)?;
    r.expectations
        .push(Expectation::new("finite_pf_check", false, report.is_pf()));
    if let FinitePfReport::NotRealRooted {
        generating_polynomial,
        real_roots_with_multiplicity,
        degree,
    } = &report
    {
        let disc = cubic_discriminant(generating_polynomial);
        r.expectations.push(Expectation::new(
            "discriminant negative",
            true,
            disc < Rational::zero(),
        ));
        r.detail_push("generating polynomial", generating_polynomial);
        r.detail_push("discriminant", format_rational(&disc));
        r.detail_push(
            "real zeros / degree",
            format!("{real_roots_with_multiplicity} / {degree}"),
        );
    }
    let base = Truncation::new(image.terms.clone(), image.origin.clone());
    r.detail_push(
        "exhaustive minor search, order <= 3",
        toeplitz_minor_search(&base, 3)
            .map_or_else(|| "no negative minor".into(), |w| minor_text(&w)),
    );
    let band = band_minor_search(&base, COUNTEREXAMPLE_WIDTH);
    r.expectations.push(Expectation::new(
        "negative contiguous minor found",
        true,
        band.is_some(),
    ));
    if let Some(w) = band {
        r.detail_push("negative minor", minor_text(&w));
    }
    Ok(())
}
