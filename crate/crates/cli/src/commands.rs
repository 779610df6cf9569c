use std::collections::BTreeMap;

use polya::certify::{certify_infinite_logconcavity, Certification};
use polya::exact_poly::{format_rational, parse_rational, Rational};
use polya::reproduce::{reproduce, ExampleId, Reproduction};
use polya::sequences::{
    band_minor_search, finite_pf_report, k_fold_check, l_iterate, power_sequence, terms,
    toeplitz_minor_search, DepthVerdict, SequenceSource,
};
use polya::symm::{
    verify_beauty, verify_hermite_cd_identity, verify_interleaving, verify_jacobi_identity,
    verify_magic, AlphaSeq, Method, MuSeq, Parity, Transcript,
};
use polya::Polynomial;
use serde_json::{json, Value};

use crate::report::Status;

/// What a command produced, before it is wrapped in a report.
#[derive(Debug)]
pub struct Outcome {
    pub inputs: BTreeMap<String, String>,
    pub verdict: String,
    pub status: Status,
    pub result: Value,
    /// Plain-text rendering for non-JSON output.
    pub lines: Vec<String>,
}

impl Outcome {
    fn new(verdict: &str, status: Status, result: Value) -> Self {
        Outcome {
            inputs: BTreeMap::new(),
            verdict: verdict.into(),
            status,
            result,
            lines: Vec::new(),
        }
    }

    fn input(mut self, key: &str, value: impl ToString) -> Self {
        self.inputs.insert(key.into(), value.to_string());
        self
    }

    fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }
}

/// Bad input; reported with exit code 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl From<polya::Error> for UsageError {
    fn from(e: polya::Error) -> Self {
        UsageError(e.to_string())
    }
}

type CmdResult = Result<Outcome, UsageError>;

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn join(v: &[Rational]) -> String {
    v.iter().map(format_rational).collect::<Vec<_>>().join(", ")
}

/// How a sequence was specified on the command line.
#[derive(Clone, Debug, Default)]
pub struct SourceSpec {
    pub poly: Option<String>,
    pub terms: Option<String>,
    pub gf_num: Option<String>,
    pub gf_den: Option<String>,
    pub exp_rate: Option<String>,
}

impl SourceSpec {
    pub fn build(&self) -> Result<(SequenceSource, BTreeMap<String, String>), UsageError> {
        let mut inputs = BTreeMap::new();
        let given = [
            self.poly.is_some(),
            self.terms.is_some(),
            self.gf_num.is_some() || self.gf_den.is_some(),
        ];
        if given.iter().filter(|&&g| g).count() != 1 {
            return Err(UsageError(
                "give exactly one of --poly, --terms, --gf-num/--gf-den".into(),
            ));
        }
        if let Some(p) = &self.poly {
            inputs.insert("poly".into(), p.clone());
            return Ok((SequenceSource::PolyInterp(p.parse()?), inputs));
        }
        if let Some(t) = &self.terms {
            inputs.insert("terms".into(), t.clone());
            let values = t
                .split(',')
                .map(parse_rational)
                .collect::<polya::Result<Vec<_>>>()?;
            return Ok((SequenceSource::Explicit(values), inputs));
        }
        let num = self.gf_num.as_deref().unwrap_or("1");
        let den = self
            .gf_den
            .as_deref()
            .ok_or_else(|| UsageError("--gf-num needs --gf-den".into()))?;
        let rate = self.exp_rate.as_deref().unwrap_or("0");
        inputs.insert("gf_num".into(), num.into());
        inputs.insert("gf_den".into(), den.into());
        inputs.insert("exp_rate".into(), rate.into());
        let src = SequenceSource::rational_gf(num.parse()?, den.parse()?, parse_rational(rate)?)?;
        Ok((src, inputs))
    }
}

fn reproduction_lines(r: &Reproduction, out: &mut Outcome) {
    out.line(format!("{}:", r.example));
    for e in &r.expectations {
        let mark = if e.pass { "PASS" } else { "FAIL" };
        out.line(format!("  {mark} {}", e.name));
        out.line(format!("       expected: {}", e.expected));
        out.line(format!("       actual:   {}", e.actual));
        if let Some(n) = &e.note {
            out.line(format!("       note:     {n}"));
        }
    }
    for d in &r.details {
        out.line(format!("  {}: {}", d.name, d.value));
    }
}

/// `id` is an example id or `all`.
pub fn cmd_reproduce(id: &str) -> CmdResult {
    let ids: Vec<ExampleId> = if id == "all" {
        ExampleId::ALL.to_vec()
    } else {
        vec![id.parse()?]
    };
    let runs: Vec<Reproduction> = ids
        .iter()
        .map(|&i| reproduce(i))
        .collect::<polya::Result<_>>()?;
    let ok = runs.iter().all(Reproduction::passed);
    let result = if runs.len() == 1 {
        to_value(&runs[0])
    } else {
        to_value(&runs)
    };
    let (verdict, status) = if ok {
        ("pass", Status::Success)
    } else {
        ("fail", Status::Negative)
    };
    let mut out = Outcome::new(verdict, status, result).input("example", id);
    for r in &runs {
        reproduction_lines(r, &mut out);
    }
    Ok(out)
}

pub fn cmd_certify(poly: &str, depth: usize) -> CmdResult {
    let p: Polynomial = poly.parse()?;
    let cert = certify_infinite_logconcavity(&p, depth);
    let mut result = to_value(&cert);
    let mut out = match &cert {
        Certification::Certified(c) => {
            let recheck = c.recheck();
            result["recheck"] = json!(recheck);
            let mut out = Outcome::new("certified", Status::Success, result);
            out.line(format!(
                "certified: {{p(k)}} is infinitely log-concave, class {}",
                c.class
            ));
            out.line(format!("interpolant: {}", c.interpolant));
            for check in &c.closure_checks {
                out.line(format!(
                    "  L^{}: degree {}, class {}, zeros of E-image in [-1, 0]: {}/{}",
                    check.iteration,
                    check.interpolant.degree().map_or(-1, |d| d as i64),
                    check.class,
                    check.e_image_report.roots_in_region_with_multiplicity,
                    check.e_image_report.degree
                ));
            }
            out.line(format!(
                "independent recheck: {}",
                if recheck { "ok" } else { "FAILED" }
            ));
            out
        }
        Certification::Refused(r) => {
            let mut out = Outcome::new("refused", Status::Negative, result);
            out.line(format!("refused: {}", r.reason));
            out.line(format!("class: {}", r.class));
            out
        }
    };
    out = out.input("poly", poly).input("depth", depth);
    Ok(out)
}

pub fn cmd_apply(spec: &SourceSpec, depth: usize, width: usize) -> CmdResult {
    let (src, inputs) = spec.build()?;
    if width == 0 {
        return Err(UsageError("--width must be positive".into()));
    }
    let image = l_iterate(&src, depth, width)?;
    let report = k_fold_check(&src, depth, width)?;
    let refuted = report.first_refutation().cloned();
    let result = json!({
        "origin": src.describe(),
        "terms": to_value(&image.terms.iter().map(format_rational).collect::<Vec<_>>()),
        "k_fold": to_value(&report),
    });
    let mut out = match &refuted {
        Some(_) => Outcome::new("refuted", Status::Negative, result),
        None => Outcome::new("no_violation_within_window", Status::Success, result),
    };
    out.inputs.extend(inputs);
    out = out.input("depth", depth).input("width", width);
    out.line(format!("source: {}", src.describe()));
    out.line(format!(
        "L^{depth}, first {width} terms: {}",
        join(&image.terms)
    ));
    verdict_lines(&report.verdicts, &mut out);
    Ok(out)
}

fn verdict_lines(verdicts: &[DepthVerdict], out: &mut Outcome) {
    for v in verdicts {
        match v {
            DepthVerdict::NoViolationWithinWindow { depth, checked } => out.line(format!(
                "  depth {depth}: no negative term among the first {checked}"
            )),
            DepthVerdict::Refuted {
                depth,
                index,
                value,
            } => out.line(format!(
                "  depth {depth}: term {index} is negative: {}",
                format_rational(value)
            )),
        }
    }
}

pub fn cmd_minors(spec: &SourceSpec, width: usize, max_order: usize, band: bool) -> CmdResult {
    let (src, inputs) = spec.build()?;
    let window = terms(&src, width)?;
    let witness = if band {
        band_minor_search(&window, max_order)
    } else {
        toeplitz_minor_search(&window, max_order)
    };
    let finite = match &src {
        SequenceSource::Explicit(_) => Some(finite_pf_report(&window.terms)?),
        _ => None,
    };
    let result = json!({
        "window": to_value(&window),
        "search": if band { "band" } else { "exhaustive" },
        "witness": to_value(&witness),
        "finite_pf": to_value(&finite),
    });
    let mut out = match &witness {
        Some(_) => Outcome::new("negative_minor", Status::Negative, result),
        None => Outcome::new("no_negative_minor_within_window", Status::Success, result),
    };
    out.inputs.extend(inputs);
    out = out
        .input("width", width)
        .input("max_order", max_order)
        .input("search", if band { "band" } else { "exhaustive" });
    out.line(format!("window: {}", join(&window.terms)));
    match &witness {
        Some(w) => out.line(format!(
            "negative minor: rows {:?}, cols {:?}, value {}",
            w.rows,
            w.cols,
            format_rational(&w.value)
        )),
        None => out.line(format!(
            "no negative minor of order <= {max_order} in this window"
        )),
    }
    if let Some(f) = &finite {
        out.line(format!(
            "finite PF check: {}",
            if f.is_pf() { "PF" } else { "not PF" }
        ));
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct IdentityCaps {
    pub beauty_n: usize,
    pub magic_n: usize,
    pub jacobi_n: usize,
    pub hermite_k: usize,
    pub interleaving_n: usize,
    pub mu: String,
}

impl Default for IdentityCaps {
    fn default() -> Self {
        IdentityCaps {
            beauty_n: 6,
            magic_n: 10,
            jacobi_n: 12,
            hermite_k: 12,
            interleaving_n: 4,
            mu: "1, 0, -1".into(),
        }
    }
}

/// Runs the transcript suite; checks are named so that sorting by name is
/// the canonical order.
pub fn cmd_verify_identities(caps: &IdentityCaps, seed: u64) -> CmdResult {
    let mu = MuSeq::raw(caps.mu.parse::<Polynomial>()?.into_coeffs());
    let catalan = AlphaSeq::catalan();
    let mut checks: Vec<(String, Transcript)> = Vec::new();
    for n in 1..=caps.beauty_n {
        checks.push((
            format!("catalan-log-concavity/n={n:02}"),
            verify_beauty(n, seed),
        ));
    }
    for n in 1..=caps.magic_n {
        checks.push((
            format!("elementary-symmetric-mu-gamma/n={n:02}"),
            verify_magic(n, &mu, seed),
        ));
    }
    for n in 1..=caps.interleaving_n {
        checks.push((
            format!("even-interleaving/n={n:02}"),
            verify_interleaving(n, &catalan, Parity::EvenInterleaved),
        ));
        checks.push((
            format!("odd-interleaving/n={n:02}"),
            verify_interleaving(n, &catalan, Parity::OddInterleaved),
        ));
    }
    for k in 1..=caps.hermite_k {
        checks.push((
            format!("hermite-christoffel-darboux/k={k:02}"),
            verify_hermite_cd_identity(k)?,
        ));
    }
    for n in 0..=caps.jacobi_n {
        checks.push((
            format!("jacobi-catalan/n={n:02}"),
            verify_jacobi_identity(n),
        ));
    }
    checks.sort_by(|a, b| a.0.cmp(&b.0));
    let failures = checks.iter().filter(|(_, t)| !t.passed()).count();
    let result = json!({
        "checks": checks
            .iter()
            .map(|(name, t)| json!({ "name": name, "transcript": to_value(t) }))
            .collect::<Vec<_>>(),
        "total": checks.len(),
        "failures": failures,
    });
    let (verdict, status) = if failures == 0 {
        ("pass", Status::Success)
    } else {
        ("fail", Status::Negative)
    };
    let mut out = Outcome::new(verdict, status, result)
        .input("beauty_n", caps.beauty_n)
        .input("magic_n", caps.magic_n)
        .input("jacobi_n", caps.jacobi_n)
        .input("hermite_k", caps.hermite_k)
        .input("interleaving_n", caps.interleaving_n)
        .input("mu", &caps.mu);
    for (name, t) in &checks {
        let mark = if t.passed() { "PASS" } else { "FAIL" };
        let method = match t.method {
            Method::Symbolic => "symbolic",
            Method::Randomized => "randomized",
        };
        out.line(format!("{mark} {name} ({method}, {} checks)", t.checks));
        if let Some(w) = &t.witness {
            out.line(format!("     at {}: {} != {}", w.location, w.left, w.right));
        }
    }
    out.line(format!("{} checks, {failures} failures", checks.len()));
    Ok(out)
}

/// Window exploration of `{k^d}`; never claims anything past the window.
pub fn cmd_explore(d: usize, depth: usize, width: usize) -> CmdResult {
    if d == 0 {
        return Err(UsageError("exponent d must be at least 1".into()));
    }
    if width == 0 {
        return Err(UsageError("--width must be positive".into()));
    }
    let src = power_sequence(d);
    let report = k_fold_check(&src, depth, width)?;
    let base = terms(&src, width)?;
    let refuted = report.first_refutation().is_some();
    let result = json!({
        "terms": base.terms.iter().map(format_rational).collect::<Vec<_>>(),
        "k_fold": to_value(&report),
        "scope": "window only; no statement about terms or depths beyond it",
    });
    let mut out = if refuted {
        Outcome::new("refuted", Status::Negative, result)
    } else {
        Outcome::new("no_violation_within_window", Status::Success, result)
    };
    out = out
        .input("d", d)
        .input("depth", depth)
        .input("width", width);
    out.line(format!(
        "{{k^{d}}}, first {width} terms: {}",
        join(&base.terms)
    ));
    verdict_lines(&report.verdicts, &mut out);
    out.line("nothing is claimed beyond this window");
    Ok(out)
}
