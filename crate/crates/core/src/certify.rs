//! PF tests and infinite log-concavity certificates for sequences
//! `a_k = p(k)` interpolated by a polynomial.
//!
//! A sequence `{p(k)}` with positive leading coefficient is PF exactly when
//! `E(p)` has all its zeros, real, in `[-1, 0]` ([`wgn_check`]). Three
//! classes of such sequences are closed under `L`:
//!
//! | class | extra condition |
//! |-------|-----------------|
//! | `A0`  | `p(0) = p(1) = 0` |
//! | `A_minus1` | `p(-1) = p(0) = 0` |
//! | `A_minus2` | `p(-2) = p(-1) = 0` |
//!
//! Membership in any of them implies infinite log-concavity, and a
//! certificate records the Sturm counts that establish membership together
//! with explicit re-checks of the first few `L`-iterates.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::binomial_basis::e_transform;
use crate::error::{Error, Result};
use crate::exact_poly::{factorial, int, Interval, Polynomial, RootCounter, RootLocationReport};
use crate::sequences::l_apply_poly;

/// Current version of the certificate JSON layout.
pub const CERTIFICATE_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassLabel {
    A0,
    #[serde(rename = "A_minus1")]
    AMinus1,
    #[serde(rename = "A_minus2")]
    AMinus2,
    #[serde(rename = "PF_unclassified")]
    PfUnclassified,
    #[serde(rename = "not_PF")]
    NotPf,
}

impl ClassLabel {
    /// The two points where members of the class vanish.
    pub fn vanishing_points(self) -> Option<[i64; 2]> {
        match self {
            ClassLabel::A0 => Some([0, 1]),
            ClassLabel::AMinus1 => Some([-1, 0]),
            ClassLabel::AMinus2 => Some([-2, -1]),
            ClassLabel::PfUnclassified | ClassLabel::NotPf => None,
        }
    }

    pub fn is_closed_class(self) -> bool {
        self.vanishing_points().is_some()
    }

    pub const CLOSED_CLASSES: [ClassLabel; 3] =
        [ClassLabel::A0, ClassLabel::AMinus1, ClassLabel::AMinus2];
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassLabel::A0 => "A0",
            ClassLabel::AMinus1 => "A_minus1",
            ClassLabel::AMinus2 => "A_minus2",
            ClassLabel::PfUnclassified => "PF_unclassified",
            ClassLabel::NotPf => "not_PF",
        })
    }
}

/// Report used for the zero polynomial, whose sequence is trivially PF.
fn trivial_report() -> RootLocationReport {
    RootLocationReport {
        degree: 0,
        total_real_roots_with_multiplicity: 0,
        roots_in_region_with_multiplicity: 0,
        all_roots_in_region: true,
    }
}

/// Whether `{p(k)}` is PF: positive leading coefficient and every root of
/// `E(p)` in `[-1, 0]`.
///
/// The report counts the roots of `E(p)` against `[-1, 0]`.
pub fn wgn_check(p: &Polynomial) -> Result<(bool, RootLocationReport)> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let image = e_transform(p);
    let report = RootCounter::new(&image)?.report(&Interval::closed(-int(1), int(0))?);
    let ok = p.is_positive_leading() && report.all_roots_in_region;
    Ok((ok, report))
}

fn pf_with_report(p: &Polynomial) -> (bool, RootLocationReport) {
    if p.is_zero() {
        return (true, trivial_report());
    }
    wgn_check(p).expect("nonzero polynomial")
}

fn vanishes_for(p: &Polynomial, class: ClassLabel) -> bool {
    class
        .vanishing_points()
        .is_some_and(|pts| pts.iter().all(|&x| p.eval_int(x).is_zero()))
}

/// Membership of `{p(k)}` in one of the three closed classes. Always false
/// for the two non-class labels.
pub fn is_member(p: &Polynomial, class: ClassLabel) -> bool {
    vanishes_for(p, class) && pf_with_report(p).0
}

/// First matching class in the order `A0`, `A_minus1`, `A_minus2`.
pub fn classify(p: &Polynomial) -> ClassLabel {
    classify_with_report(p).0
}

fn classify_with_report(p: &Polynomial) -> (ClassLabel, RootLocationReport) {
    let (pf, report) = pf_with_report(p);
    if !pf {
        return (ClassLabel::NotPf, report);
    }
    let label = ClassLabel::CLOSED_CLASSES
        .into_iter()
        .find(|&c| vanishes_for(p, c))
        .unwrap_or(ClassLabel::PfUnclassified);
    (label, report)
}

/// Re-verification of one `L`-iterate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureCheck {
    pub iteration: usize,
    pub interpolant: Polynomial,
    pub class: ClassLabel,
    pub member_of_certified_class: bool,
    pub e_image_report: RootLocationReport,
}

/// Evidence that `{p(k)}` is infinitely log-concave.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfLogConcavityCertificate {
    pub schema_version: u32,
    pub interpolant: Polynomial,
    pub class: ClassLabel,
    pub e_image_report: RootLocationReport,
    pub closure_checks: Vec<ClosureCheck>,
}

impl InfLogConcavityCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Recomputes every recorded count and class from the interpolant alone.
    pub fn recheck(&self) -> bool {
        if self.schema_version != CERTIFICATE_SCHEMA_VERSION || !self.class.is_closed_class() {
            return false;
        }
        let (label, report) = classify_with_report(&self.interpolant);
        if label != self.class || report != self.e_image_report {
            return false;
        }
        let mut current = self.interpolant.clone();
        for (j, check) in self.closure_checks.iter().enumerate() {
            current = l_apply_poly(&current);
            if check.iteration != j + 1 || check.interpolant != current {
                return false;
            }
            let (label, report) = classify_with_report(&current);
            if label != check.class
                || report != check.e_image_report
                || !check.member_of_certified_class
                || label == ClassLabel::NotPf
                || !vanishes_for(&current, self.class)
            {
                return false;
            }
        }
        true
    }
}

/// Why no certificate was issued.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Refusal {
    pub interpolant: Polynomial,
    pub class: ClassLabel,
    pub reason: String,
    pub e_image_report: RootLocationReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Certification {
    Certified(InfLogConcavityCertificate),
    Refused(Refusal),
}

impl Certification {
    pub fn certificate(&self) -> Option<&InfLogConcavityCertificate> {
        match self {
            Certification::Certified(c) => Some(c),
            Certification::Refused(_) => None,
        }
    }

    pub fn is_certified(&self) -> bool {
        self.certificate().is_some()
    }
}

/// Certifies infinite log-concavity of `{p(k)}` by class membership, then
/// re-verifies that `L^j` interpolants stay in the class for `j = 1..=depth`.
pub fn certify_infinite_logconcavity(p: &Polynomial, depth: usize) -> Certification {
    let (class, report) = classify_with_report(p);
    let refuse = |reason: String| {
        Certification::Refused(Refusal {
            interpolant: p.clone(),
            class,
            reason,
            e_image_report: report.clone(),
        })
    };
    match class {
        ClassLabel::NotPf => {
            let reason = if p.leading_coeff().is_some_and(Signed::is_negative) {
                "not PF: negative leading coefficient".to_string()
            } else {
                "not PF: E(p) has roots outside [-1, 0]".to_string()
            };
            return refuse(reason);
        }
        ClassLabel::PfUnclassified => {
            let mut reason = "PF but not in A0 \u{222a} A\u{2212}1 \u{222a} A\u{2212}2".to_string();
            if p.degree() == Some(0) {
                reason.push_str(" (positive constant: every L-iterate is trivially nonnegative)");
            }
            return refuse(reason);
        }
        _ => {}
    }
    let mut checks = Vec::with_capacity(depth);
    let mut current = p.clone();
    for j in 1..=depth {
        current = l_apply_poly(&current);
        let (label, rep) = classify_with_report(&current);
        let member = label != ClassLabel::NotPf && vanishes_for(&current, class);
        checks.push(ClosureCheck {
            iteration: j,
            interpolant: current.clone(),
            class: label,
            member_of_certified_class: member,
            e_image_report: rep,
        });
        if !member {
            return refuse(format!("closure check failed at iteration {j}"));
        }
    }
    Certification::Certified(InfLogConcavityCertificate {
        schema_version: CERTIFICATE_SCHEMA_VERSION,
        interpolant: p.clone(),
        class,
        e_image_report: report,
        closure_checks: checks,
    })
}

/// Interpolant of `n -> C(n + k, k)`, i.e. `prod_{i=1..k} (x + i) / k!`.
pub fn binomial_column(k: usize) -> Polynomial {
    let prod = (1..=k as i64).fold(Polynomial::one(), |acc, i| {
        &acc * &Polynomial::from_ints(&[i, 1])
    });
    prod.scale(&factorial(k).recip())
}
