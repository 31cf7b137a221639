//! `qlogic` command line: evaluate formulas against element registries,
//! compare observables in the spectral order, and run the property
//! self test.
//!
//! Reports are JSON lines on stdout (and `--out`), deterministic for a
//! given (inputs, seed, tolerances); human-readable progress and wall
//! time go to stderr. Exit codes: 0 success, 1 suite failure, 2 parse
//! or input validation, 3 dimension mismatch, 4 unsupported construct,
//! 5 configuration.

use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use qlogic::error::Error;
use qlogic::formula::{evaluate, parse};
use qlogic::json::{MatrixJson, ObservableJson, RegistryJson, StateJson};
use qlogic::measurement::order_measurement_check;
use qlogic::reals::{order_truth_value, spectral_order_leq};
use qlogic::suites::{run_all, SuiteConfig};
use qlogic::{ConditionalKind, Projection, Tolerance};

const EXIT_SUITE_FAILURE: i32 = 1;
const EXIT_PARSE: i32 = 2;
const EXIT_DIMENSION: i32 = 3;
const EXIT_UNSUPPORTED: i32 = 4;
const EXIT_CONFIG: i32 = 5;

#[derive(Parser)]
#[command(
    name = "qlogic",
    version,
    about = "Quantum-logic truth values, order reports, and property suites"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ToleranceArgs {
    /// Relative eigenvalue cutoff for rank decisions.
    #[arg(long, default_value_t = 1e-9)]
    eps_rank: f64,
    /// Frobenius-distance bound for subspace equality.
    #[arg(long, default_value_t = 1e-8)]
    eps_compare: f64,
}

impl ToleranceArgs {
    fn tolerance(&self) -> Result<Tolerance, CliError> {
        Tolerance::new(self.eps_rank, self.eps_compare).map_err(CliError::from)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a formula file against a registry of named elements.
    Eval {
        /// Text file holding one formula.
        formula_file: PathBuf,
        /// JSON registry document: `{"sets": {"name": <qset>, ...}}`.
        registry_file: PathBuf,
        /// Conditional kind: sasaki | contrapositive | relevance.
        #[arg(long, default_value = "sasaki")]
        conditional: String,
        #[command(flatten)]
        tolerance: ToleranceArgs,
        /// Also write the report lines to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every property suite with seeded instances.
    Selftest {
        /// Dimensions, as a list `2,3,4` or an inclusive range `2..6`.
        #[arg(long, default_value = "2..4")]
        dims: String,
        /// Trials per suite per dimension.
        #[arg(long, default_value_t = 25)]
        trials: usize,
        /// Master seed; falls back to $QLOGIC_SEED, then 2024.
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        tolerance: ToleranceArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Spectral-order comparison of two observables, with an optional
    /// state for the successive-measurement report.
    Order {
        /// JSON observable for the left-hand side X.
        x_file: PathBuf,
        /// JSON observable for the right-hand side Y.
        y_file: PathBuf,
        /// Optional JSON state vector.
        psi_file: Option<PathBuf>,
        #[command(flatten)]
        tolerance: ToleranceArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn new(code: i32, message: impl Display) -> Self {
        CliError {
            code,
            message: message.to_string(),
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::DimMismatch { .. } => EXIT_DIMENSION,
            Error::UnboundedQuantifier { .. } => EXIT_UNSUPPORTED,
            Error::InvalidTolerance(_) => EXIT_CONFIG,
            _ => EXIT_PARSE,
        };
        CliError::new(code, err)
    }
}

/// Accumulates the JSON report; stdout plus an optional copy on disk.
struct Report {
    lines: Vec<String>,
    out: Option<PathBuf>,
}

impl Report {
    fn new(out: Option<PathBuf>) -> Self {
        Report {
            lines: Vec::new(),
            out,
        }
    }

    fn push(&mut self, value: serde_json::Value) {
        self.lines
            .push(serde_json::to_string(&value).expect("report lines serialize"));
    }

    fn finish(self) -> Result<(), CliError> {
        for line in &self.lines {
            println!("{line}");
        }
        if let Some(path) = &self.out {
            let mut body = self.lines.join("\n");
            body.push('\n');
            fs::write(path, body)
                .map_err(|e| CliError::new(EXIT_CONFIG, format!("cannot write {path:?}: {e}")))?;
        }
        Ok(())
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::new(EXIT_PARSE, format!("cannot read {path:?}: {e}")))
}

fn decode<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = read_file(path)?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::new(EXIT_PARSE, format!("invalid JSON in {path:?}: {e}")))
}

fn parse_dims(spec: &str) -> Result<Vec<usize>, CliError> {
    let bad = |detail: &str| {
        CliError::new(
            EXIT_CONFIG,
            format!("invalid --dims `{spec}`: {detail} (use `2,3,4` or `2..6`)"),
        )
    };
    let dims: Vec<usize> = if let Some((lo, hi)) = spec.split_once("..") {
        let lo: usize = lo.trim().parse().map_err(|_| bad("bad lower bound"))?;
        let hi: usize = hi.trim().parse().map_err(|_| bad("bad upper bound"))?;
        if lo > hi {
            return Err(bad("empty range"));
        }
        (lo..=hi).collect()
    } else {
        spec.split(',')
            .map(|part| part.trim().parse::<usize>().map_err(|_| bad("bad entry")))
            .collect::<Result<_, _>>()?
    };
    if dims.is_empty() || dims.iter().any(|&d| d == 0 || d > 16) {
        return Err(bad("dimensions must lie in 1..=16"));
    }
    Ok(dims)
}

fn projection_line(label: &str, value: &Projection, tol: &Tolerance) -> serde_json::Value {
    json!({
        label: MatrixJson::from_matrix(value.matrix()),
        "rank": value.rank(),
        "is_zero": value.is_zero(tol),
        "is_identity": value.is_identity(tol),
    })
}

fn cmd_eval(
    formula_file: &Path,
    registry_file: &Path,
    conditional: &str,
    tol: Tolerance,
    out: Option<PathBuf>,
) -> Result<(), CliError> {
    let kind = ConditionalKind::from_str(conditional)
        .map_err(|e| CliError::new(EXIT_CONFIG, e.to_string()))?;
    let registry_doc: RegistryJson = decode(registry_file)?;
    let registry = registry_doc.resolve(&tol)?;
    let formula_text = read_file(formula_file)?;
    let formula = parse(formula_text.trim(), &registry)?;
    let truth = evaluate(&formula, kind, &registry, &tol)?;

    let mut report = Report::new(out);
    report.push(json!({
        "command": "eval",
        "formula": formula.to_string(),
        "conditional": kind.as_str(),
        "eps_rank": tol.eps_rank,
        "eps_compare": tol.eps_compare,
    }));
    let mut line = projection_line("truth_value", &truth.value, &tol);
    line.as_object_mut()
        .expect("object")
        .insert("strict".to_string(), json!(!truth.value.is_identity(&tol)));
    report.push(line);
    let strict = if truth.value.is_identity(&tol) {
        "the identity"
    } else if truth.value.is_zero(&tol) {
        "zero"
    } else {
        "strictly between 0 and 1"
    };
    eprintln!(
        "truth value of rank {} in dimension {}: {strict}",
        truth.value.rank(),
        truth.value.dim()
    );
    report.finish()
}

fn cmd_selftest(
    dims: &str,
    trials: usize,
    seed: Option<u64>,
    tol: Tolerance,
    out: Option<PathBuf>,
) -> Result<i32, CliError> {
    let dims = parse_dims(dims)?;
    let seed = seed
        .or_else(|| {
            std::env::var("QLOGIC_SEED")
                .ok()
                .and_then(|s| s.parse().ok())
        })
        .unwrap_or(2024);
    if trials == 0 {
        eprintln!("warning: --trials 0 makes every suite vacuous");
    }
    let cfg = SuiteConfig {
        dims: dims.clone(),
        trials,
        seed,
        tol,
    };
    let started = Instant::now();
    let results = run_all(&cfg);

    let mut report = Report::new(out);
    report.push(json!({
        "command": "selftest",
        "dims": dims,
        "trials": trials,
        "seed": seed,
        "eps_rank": tol.eps_rank,
        "eps_compare": tol.eps_compare,
    }));
    let mut failed = 0usize;
    for result in &results {
        report.push(serde_json::to_value(result).expect("suite results serialize"));
        if !result.passed {
            failed += 1;
        }
    }
    report.push(json!({
        "suites": results.len(),
        "failed": failed,
    }));
    report.finish()?;
    eprintln!(
        "{}/{} suites passed in {:.2}s (seed {seed})",
        results.len() - failed,
        results.len(),
        started.elapsed().as_secs_f64()
    );
    Ok(if failed > 0 { EXIT_SUITE_FAILURE } else { 0 })
}

fn cmd_order(
    x_file: &Path,
    y_file: &Path,
    psi_file: Option<&Path>,
    tol: Tolerance,
    out: Option<PathBuf>,
) -> Result<(), CliError> {
    let x = decode::<ObservableJson>(x_file)?.to_observable(&tol)?;
    let y = decode::<ObservableJson>(y_file)?.to_observable(&tol)?;

    let mut report = Report::new(out);
    report.push(json!({
        "command": "order",
        "x_spectrum": x.spectrum(),
        "y_spectrum": y.spectrum(),
        "eps_rank": tol.eps_rank,
        "eps_compare": tol.eps_compare,
    }));
    let ordered = spectral_order_leq(&x, &y, &tol)?;
    report.push(json!({ "spectral_order_leq": ordered }));
    for kind in ConditionalKind::ALL {
        let truth = order_truth_value(&x, &y, kind, &tol)?;
        let mut line = projection_line("truth_value", &truth, &tol);
        line.as_object_mut()
            .expect("object")
            .insert("conditional".to_string(), json!(kind.as_str()));
        report.push(line);
    }
    if let Some(path) = psi_file {
        let psi = decode::<StateJson>(path)?.to_state()?;
        let measurement = order_measurement_check(&x, &y, &psi, &tol)?;
        for verdict in &measurement.verdicts {
            report.push(serde_json::to_value(verdict).expect("verdicts serialize"));
        }
        eprintln!(
            "spectral order: {ordered}; measurement verdicts agree: {}",
            measurement.all_agree()
        );
    } else {
        eprintln!("spectral order: {ordered}");
    }
    report.finish()
}

fn run() -> Result<i32, CliError> {
    let cli = Cli::parse();
    match cli.command {
        Command::Eval {
            formula_file,
            registry_file,
            conditional,
            tolerance,
            out,
        } => {
            let tol = tolerance.tolerance()?;
            cmd_eval(&formula_file, &registry_file, &conditional, tol, out)?;
            Ok(0)
        }
        Command::Selftest {
            dims,
            trials,
            seed,
            tolerance,
            out,
        } => {
            let tol = tolerance.tolerance()?;
            cmd_selftest(&dims, trials, seed, tol, out)
        }
        Command::Order {
            x_file,
            y_file,
            psi_file,
            tolerance,
            out,
        } => {
            let tol = tolerance.tolerance()?;
            cmd_order(&x_file, &y_file, psi_file.as_deref(), tol, out)?;
            Ok(0)
        }
    }
}

fn main() {
    match run() {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {}", err.message);
            std::process::exit(err.code);
        }
    }
}
