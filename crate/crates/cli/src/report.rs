use std::collections::BTreeMap;

use polya::exact_poly::{approx, parse_rational};
use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Process exit status carried in every report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// Exit 0: certificate issued, expectations met, nothing refuted.
    Success,
    /// Exit 1: refusal, refutation or failed expectation.
    Negative,
    /// Exit 2: the input could not be used.
    Usage,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Success => 0,
            Status::Negative => 1,
            Status::Usage => 2,
        }
    }
}

/// Everything one invocation did. All numbers inside `result` are exact
/// strings; `approximations` is only present with `--approx`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub tool_version: String,
    pub command: Vec<String>,
    pub inputs: BTreeMap<String, String>,
    pub seed: u64,
    pub verdict: String,
    pub status: Status,
    pub result: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub approximations: Option<Approximations>,
    /// The only field that differs between identical runs.
    pub duration_us: u64,
}

/// Decimal renderings of exact values, keyed by JSON pointer into `result`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Approximations {
    pub authoritative: bool,
    pub values: BTreeMap<String, f64>,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// Same report with the duration zeroed, for determinism comparisons.
    pub fn without_duration(&self) -> Self {
        RunReport {
            duration_us: 0,
            ..self.clone()
        }
    }

    pub fn attach_approximations(&mut self) {
        let mut values = BTreeMap::new();
        collect_approx(&self.result, String::new(), &mut values);
        self.approximations = Some(Approximations {
            authoritative: false,
            values,
        });
    }
}

/// Fractions and integers too long to read at a glance.
fn worth_approximating(s: &str) -> bool {
    s.contains('/') || s.trim_start_matches('-').len() > 12
}

fn collect_approx(v: &Value, path: String, out: &mut BTreeMap<String, f64>) {
    match v {
        Value::String(s) if worth_approximating(s) => {
            if let Ok(q) = parse_rational(s) {
                out.insert(path, approx(&q));
            }
        }
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                collect_approx(item, format!("{path}/{i}"), out);
            }
        }
        Value::Object(map) => {
            for (k, item) in map {
                let key = k.replace('~', "~0").replace('/', "~1");
                collect_approx(item, format!("{path}/{key}"), out);
            }
        }
        _ => {}
    }
}
