//! `fibsum`: construct, invert, enumerate and verify (0,1) triangular
//! matrices and their inverse sums from the command line.
//!
//! Exit codes: 0 success, 1 invalid arguments or input, 2 a verification
//! found a violation, 3 I/O failure.

pub mod json;
pub mod report;
pub mod suite;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fibsum_core::linalg::{adjugate, format_matrix, parse_matrix};
use fibsum_core::search::{enumerate, Family};
use fibsum_core::{
    construct_w_matrix, construct_with_sum, determinant_exact, entry_sum, extremal_pattern_matrix,
    fib, hill_climb_general, inverse_sum_via_determinant, invert_exact, invert_unit_triangular,
    small_extremal, BigInt, Direction, ExtremalKind, IntMatrix, RationalMatrix, SearchConfig,
    Triangular01,
};
use num_traits::Zero;
use serde_json::{json, Value};
use thiserror::Error;

use report::VerificationReport;
use suite::{Suite, SuiteParams};

#[derive(Debug, Parser)]
#[command(
    name = "fibsum",
    version,
    propagate_version = true,
    about = "Inverse entry sums of (0,1) triangular matrices"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Output {
    /// Machine-readable output, to standard output or to PATH
    #[arg(long, value_name = "PATH", num_args = 0..=1)]
    json: Option<Option<PathBuf>>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print F_k (F_1 = F_2 = 1)
    Fib {
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[command(flatten)]
        out: Output,
    },
    /// Check the Fibonacci sum identities and both corollary identities
    Identities {
        #[arg(long, default_value_t = 90)]
        n_max: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Invert a matrix read in the text format; prints the inverse and its entry sum
    Invert {
        /// Input file (standard input when omitted)
        #[arg(long, short)]
        input: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Build a matrix in A_n whose inverse sums to S
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        sum: BigInt,
        #[command(flatten)]
        out: Output,
    },
    /// Extremal matrix: banded pattern for n >= 5, fixed matrices for n = 3, 4
    Extremal {
        #[arg(long)]
        n: usize,
        /// Tail width of the band pattern (n >= 5)
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=3))]
        l: Option<u8>,
        /// Which extreme (n = 3, 4)
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
        #[command(flatten)]
        out: Output,
    },
    /// Build a (1,2)-matrix in W_n with determinant D
    Wmatrix {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        det: BigInt,
        #[command(flatten)]
        out: Output,
    },
    /// Exhaustively scan a matrix family and report the value distribution
    Enumerate {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        /// Worker threads (default: all cores)
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Hill-climb over general (0,1) matrices for extreme inverse sums
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        direction: DirectionArg,
        #[arg(long, default_value_t = 200)]
        restarts: u32,
        #[arg(long, default_value_t = 10_000)]
        max_steps: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Run a named check suite
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long)]
        n: Option<usize>,
        /// Samples per n for g-sampling
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    #[value(alias = "maximizing")]
    Max,
    #[value(alias = "minimizing")]
    Min,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Triangular,
    General,
    W,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DirectionArg {
    Max,
    Min,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(#[from] fibsum_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) | CliError::Usage(_) => 1,
            CliError::Io(_) => 3,
        }
    }
}

/// What a subcommand produced, in both renderings.
struct Outcome {
    text: String,
    json: Value,
    ok: bool,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome {
            text,
            json,
            ok: true,
        }
    }

    fn report(r: &VerificationReport) -> Self {
        Outcome {
            text: r.to_text(),
            json: r.to_json(),
            ok: r.passed(),
        }
    }
}

/// Parses `args` (including the program name), runs the subcommand and
/// returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(cli.command) {
        Ok(0) => 0,
        Ok(code) => code,
        Err(e) => {
            eprintln!("fibsum: {e}");
            e.exit_code()
        }
    }
}

fn execute(command: Command) -> Result<i32, CliError> {
    let (outcome, out) = match command {
        Command::Fib { k, out } => (cmd_fib(k)?, out),
        Command::Identities { n_max, out } => {
            let mut r = VerificationReport::default();
            suite::identities(n_max, &mut r);
            (Outcome::report(&r), out)
        }
        Command::Invert { input, out } => (cmd_invert(input)?, out),
        Command::Construct { n, sum, out } => {
            let a = construct_with_sum(n, &sum)?;
            (triangular_outcome(&a, &format!("inverse sum {sum}")), out)
        }
        Command::Extremal { n, l, kind, out } => (cmd_extremal(n, l, kind)?, out),
        Command::Wmatrix { n, det, out } => (cmd_wmatrix(n, &det)?, out),
        Command::Enumerate {
            family,
            n,
            jobs,
            out,
        } => (cmd_enumerate(family, n, jobs)?, out),
        Command::Search {
            n,
            direction,
            restarts,
            max_steps,
            seed,
            jobs,
            out,
        } => {
            let cfg = SearchConfig {
                n,
                direction: match direction {
                    DirectionArg::Max => Direction::Maximize,
                    DirectionArg::Min => Direction::Minimize,
                },
                restarts,
                max_steps,
                seed,
                jobs,
            };
            (cmd_search(&cfg)?, out)
        }
        Command::Verify {
            suite,
            n,
            samples,
            seed,
            jobs,
            out,
        } => {
            let params = SuiteParams {
                n,
                jobs,
                samples,
                seed,
            };
            let mut r = VerificationReport::default();
            suite::run_suite(suite, &params, &mut r)?;
            (Outcome::report(&r), out)
        }
    };
    emit(&outcome, &out)?;
    Ok(if outcome.ok { 0 } else { 2 })
}

fn emit(outcome: &Outcome, out: &Output) -> Result<(), CliError> {
    match &out.json {
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(outcome.text.as_bytes())?;
            stdout.flush()?;
        }
        Some(path) => {
            let mut text = serde_json::to_string_pretty(&outcome.json).expect("serializable");
            text.push('\n');
            match path {
                Some(p) => std::fs::write(p, text)?,
                None => {
                    let mut stdout = std::io::stdout().lock();
                    stdout.write_all(text.as_bytes())?;
                    stdout.flush()?;
                }
            }
        }
    }
    Ok(())
}

fn cmd_fib(k: i64) -> Result<Outcome, CliError> {
    let v = fib(k)?;
    Ok(Outcome::ok(
        format!("{v}\n"),
        json!({"k": k, "value": json::int(&v)}),
    ))
}

fn read_input(input: Option<PathBuf>) -> Result<String, CliError> {
    let mut text = String::new();
    match input {
        Some(p) => text = std::fs::read_to_string(p)?,
        None => {
            std::io::stdin().read_to_string(&mut text)?;
        }
    }
    Ok(text)
}

fn cmd_invert(input: Option<PathBuf>) -> Result<Outcome, CliError> {
    let m: RationalMatrix = parse_matrix(&read_input(input)?)?;
    let n = m.n();
    let integral = m.as_slice().iter().all(|v| v.is_integer());
    let inverse: RationalMatrix = if integral {
        invert_exact(&m.map(|v| v.to_integer()))?
    } else if m.unit_triangular_orientation().is_some() {
        invert_unit_triangular(&m)?
    } else {
        let det = determinant_exact(&m);
        if det.is_zero() {
            return Err(fibsum_core::Error::Singular.into());
        }
        adjugate(&m).map(|v| v / det.clone())
    };
    let sum = entry_sum(&inverse);
    let text = format!("# inverse sum {sum}\n{}", format_matrix(&inverse));
    let json = json!({
        "n": n,
        "matrix": json::rational_matrix(&m),
        "inverse": json::rational_matrix(&inverse),
        "sum": json::rational(&sum),
    });
    Ok(Outcome::ok(text, json))
}

fn triangular_outcome(a: &Triangular01, note: &str) -> Outcome {
    let m: IntMatrix = a.to_matrix();
    let inverse = a.inverse();
    let sum = entry_sum(&inverse);
    Outcome::ok(
        format!("# {note}\n{}", format_matrix(&m)),
        json!({
            "n": a.n(),
            "matrix": json::int_matrix(&m),
            "inverse": json::int_matrix(&inverse),
            "sum": json::int(&sum),
        }),
    )
}

fn cmd_extremal(n: usize, l: Option<u8>, kind: Option<KindArg>) -> Result<Outcome, CliError> {
    if n == 3 || n == 4 {
        let kind = match kind {
            Some(KindArg::Max) => ExtremalKind::Maximizing,
            Some(KindArg::Min) => ExtremalKind::Minimizing,
            None => {
                return Err(CliError::Usage(
                    "n = 3, 4 have no band pattern; pass --kind max or --kind min".into(),
                ))
            }
        };
        let a = small_extremal(n, kind)?;
        let sum = a.inverse_sum();
        return Ok(triangular_outcome(
            &a,
            &format!("{kind:?} matrix, inverse sum {sum}"),
        ));
    }
    if kind.is_some() {
        return Err(CliError::Usage(
            "--kind applies to n = 3, 4; for n >= 5 the parity of n + l decides".into(),
        ));
    }
    let l = usize::from(l.unwrap_or(2));
    let (a, predicted) = extremal_pattern_matrix(n, l)?;
    let mut outcome = triangular_outcome(
        &a,
        &format!("band pattern l = {l}, inverse sum {}", a.inverse_sum()),
    );
    outcome.json["l"] = json!(l);
    outcome.json["predicted_inverse_matches"] = json!(a.inverse() == predicted);
    Ok(outcome)
}

fn cmd_wmatrix(n: usize, det: &BigInt) -> Result<Outcome, CliError> {
    let w = construct_w_matrix(n, det)?;
    let m = w.matrix();
    let inverse = invert_exact(m)?;
    let sum = inverse_sum_via_determinant(m)?;
    let determinant = w.determinant();
    Ok(Outcome::ok(
        format!("# determinant {determinant}\n{}", format_matrix(m)),
        json!({
            "n": n,
            "matrix": json::int_matrix(m),
            "inverse": json::rational_matrix(&inverse),
            "sum": json::rational(&sum),
            "determinant": json::int(&determinant),
        }),
    ))
}

fn cmd_enumerate(family: FamilyArg, n: usize, jobs: Option<usize>) -> Result<Outcome, CliError> {
    let family = match family {
        FamilyArg::Triangular => Family::Triangular,
        FamilyArg::General => Family::General,
        FamilyArg::W => Family::W,
    };
    let d = enumerate(family, n, jobs)?;
    let fmt = |v: Option<fibsum_core::ExactSum>| v.map_or("-".to_string(), |v| v.to_string());
    let mut text = format!(
        "family {}\nn {n}\nmin {}\nmax {}\nrecorded {}\nsingular {}\n",
        family.name(),
        fmt(d.min()),
        fmt(d.max()),
        d.recorded(),
        d.singular()
    );
    for (value, count) in d.counts() {
        text.push_str(&format!("{value}\t{count}\n"));
    }
    Ok(Outcome::ok(text, d.to_json()))
}

fn cmd_search(cfg: &SearchConfig) -> Result<Outcome, CliError> {
    let r = hill_climb_general(cfg)?;
    let text = format!(
        "# best inverse sum {} (restart {}, {} accepted moves over {} restarts)\n{}",
        r.best_sum,
        r.best_restart,
        r.steps_taken,
        r.restarts_used,
        format_matrix(&r.best_matrix)
    );
    let json = json!({
        "n": cfg.n,
        "direction": cfg.direction,
        "seed": cfg.seed,
        "restarts": cfg.restarts,
        "max_steps": cfg.max_steps,
        "best_sum": json::rational(&r.best_sum),
        "matrix": json::int_matrix(&r.best_matrix),
        "steps_taken": r.steps_taken,
        "restarts_used": r.restarts_used,
        "best_restart": r.best_restart,
    });
    Ok(Outcome::ok(text, json))
}
