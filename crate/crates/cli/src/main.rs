use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use polya::symm::DEFAULT_SEED;
use polya_cli::commands::{
    cmd_apply, cmd_certify, cmd_explore, cmd_minors, cmd_reproduce, cmd_verify_identities,
};
use polya_cli::report::TOOL_VERSION;
use polya_cli::{IdentityCaps, Outcome, RunReport, SourceSpec, Status, UsageError};

/// Exact certification and refutation of Pólya frequency and log-concavity
/// properties. Polynomials and term lists are comma-separated exact
/// rationals, constant term first: "1, 3/2, 1/2" is (x+1)(x+2)/2.
#[derive(Parser, Debug)]
#[command(name = "polya", version)]
struct Cli {
    /// Emit the full report as JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Add decimal approximations (non-authoritative) to the JSON report.
    #[arg(long, global = true)]
    approx: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Source {
    /// Sequence a_k = p(k) for this polynomial.
    #[arg(long, allow_hyphen_values = true)]
    poly: Option<String>,
    /// Finitely supported sequence; later terms are zero.
    #[arg(long, allow_hyphen_values = true)]
    terms: Option<String>,
    /// Generating function numerator.
    #[arg(long, allow_hyphen_values = true)]
    gf_num: Option<String>,
    /// Generating function denominator (nonzero constant term).
    #[arg(long, allow_hyphen_values = true)]
    gf_den: Option<String>,
    /// Extra factor e^(rate x) on the generating function.
    #[arg(long)]
    exp_rate: Option<String>,
}

impl Source {
    fn spec(&self) -> SourceSpec {
        SourceSpec {
            poly: self.poly.clone(),
            terms: self.terms.clone(),
            gf_num: self.gf_num.clone(),
            gf_den: self.gf_den.clone(),
            exp_rate: self.exp_rate.clone(),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Recompute a worked example and compare against its embedded values.
    Reproduce {
        /// ex-1-4, ex-2-2a, ex-2-2b, counterexample-gf or all.
        example: String,
    },
    /// Certify infinite log-concavity of {p(k)} by class membership.
    Certify {
        #[arg(allow_hyphen_values = true)]
        polynomial: String,
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
    /// Apply L repeatedly to a sequence and check each iterate in a window.
    Apply {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 1)]
        depth: usize,
        #[arg(long, default_value_t = 10)]
        width: usize,
    },
    /// Search a window of the Toeplitz matrix for a negative minor.
    Minors {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 10)]
        width: usize,
        #[arg(long, default_value_t = 4)]
        max_order: usize,
        /// Search contiguous minors only, which reaches much higher orders.
        #[arg(long)]
        band: bool,
    },
    /// Run the symmetric function and orthogonal polynomial identity suite.
    VerifyIdentities {
        #[arg(long, default_value_t = 6)]
        beauty_n: usize,
        #[arg(long, default_value_t = 10)]
        magic_n: usize,
        #[arg(long, default_value_t = 12)]
        jacobi_n: usize,
        #[arg(long, default_value_t = 12)]
        hermite_k: usize,
        #[arg(long, default_value_t = 4)]
        interleaving_n: usize,
        /// Coefficients mu_0, mu_1, ... for the elementary symmetric identity.
        #[arg(long, default_value = "1, 0, -1", allow_hyphen_values = true)]
        mu: String,
    },
    /// Check {k^d} for negative terms under L within a finite window.
    Explore {
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, default_value_t = 20)]
        width: usize,
    },
}

fn run(cli: &Cli) -> Result<Outcome, UsageError> {
    match &cli.command {
        Command::Reproduce { example } => cmd_reproduce(example),
        Command::Certify { polynomial, depth } => cmd_certify(polynomial, *depth),
        Command::Apply {
            source,
            depth,
            width,
        } => cmd_apply(&source.spec(), *depth, *width),
        Command::Minors {
            source,
            width,
            max_order,
            band,
        } => cmd_minors(&source.spec(), *width, *max_order, *band),
        Command::VerifyIdentities {
            beauty_n,
            magic_n,
            jacobi_n,
            hermite_k,
            interleaving_n,
            mu,
        } => cmd_verify_identities(
            &IdentityCaps {
                beauty_n: *beauty_n,
                magic_n: *magic_n,
                jacobi_n: *jacobi_n,
                hermite_k: *hermite_k,
                interleaving_n: *interleaving_n,
                mu: mu.clone(),
            },
            cli.seed,
        ),
        Command::Explore { d, depth, width } => cmd_explore(*d, *depth, *width),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(Status::Usage.code());
        }
    };
    let mut report = RunReport {
        tool_version: TOOL_VERSION.into(),
        command: std::env::args().skip(1).collect(),
        inputs: outcome.inputs,
        seed: cli.seed,
        verdict: outcome.verdict,
        status: outcome.status,
        result: outcome.result,
        approximations: None,
        duration_us: start.elapsed().as_micros() as u64,
    };
    if cli.approx {
        report.attach_approximations();
    }
    if cli.json {
        println!("{}", report.to_json());
    } else {
        for line in &outcome.lines {
            println!("{line}");
        }
        println!("verdict: {}", report.verdict);
        if let Some(a) = &report.approximations {
            println!("approximations (non-authoritative):");
            for (path, v) in &a.values {
                println!("  {path} ~ {v}");
            }
        }
    }
    ExitCode::from(report.status.code())
}
