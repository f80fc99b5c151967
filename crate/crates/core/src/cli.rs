//! Command-line front end: argument definitions, command dispatch and the
//! JSON report written by every command.
//!
//! Exit codes: 0 when the run succeeded or the claim was verified, 1 when a
//! claim was refuted or a certificate failed, 2 on usage or input errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::bounds::{classify, CodeParams};
use crate::constructions::{
    construct1, construct2, row_intersection_range, ConstructedCode, ConstructionError,
    ConstructionOptions, Fill, DEFAULT_SIZE_CAP,
};
use crate::distance::{
    certify_distance, check_t_columns_independent, min_distance, min_distance_enumerate,
    min_distance_subsets, DistanceCertificate, DistanceConfig, DistanceError, SubsetOutcome,
    DEFAULT_ENUM_CAP, DEFAULT_SUBSET_CAP,
};
use crate::field::{Elem, FieldError, FieldSpec};
use crate::lrc::{check_islrc_with, LrcError, StandardParityCheck};
use crate::matrix::{GfMatrix, MatrixError};
use crate::par::{available_workers, with_workers, Exec};
use crate::puncture::{puncture, puncture_suite, random_deletions, PunctureError};
use crate::repair::{campaign, Codec, RepairError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser, Serialize)]
#[command(
    name = "islrc",
    version,
    about = "Construct, verify and stress-test information-symbol locally repairable codes"
)]
pub struct Cli {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Command {
    /// Build a code from one of the two incidence constructions.
    Construct(ConstructArgs),
    /// Check the locality and availability conditions of a matrix.
    Verify(VerifyArgs),
    /// Compute or certify the minimum distance of a matrix.
    Distance(DistanceArgs),
    /// Locality check, distance claim and bound classification in one run.
    Certify(CertifyArgs),
    /// Evaluate every bound for given parameters.
    Bounds(BoundsArgs),
    /// Delete locality rows and their supports; report the sub-code.
    Puncture(PunctureArgs),
    /// Erase and repair information symbols in a simulated shard store.
    Simulate(SimulateArgs),
}

#[derive(Debug, Args, Serialize, Clone)]
pub struct SourceArgs {
    /// Construction family (1 or 2).
    #[arg(short = 'c', long, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub construction: u8,
    /// Prime p of GF(p^m).
    #[arg(short = 'p', long)]
    pub p: u32,
    /// Exponent m of GF(p^m).
    #[arg(short = 'm', long, default_value_t = 1)]
    pub m: u32,
    /// Order of the code's symbol field.
    #[arg(long = "over", default_value_t = 2)]
    pub over: u32,
    /// Nonzero entries: `ones`, `uniform:<e>`, `random` or `random:<seed>`.
    #[arg(long, default_value = "ones")]
    pub fill: String,
    /// Seed for `--fill random`.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Largest accepted p^(2m).
    #[arg(long, default_value_t = DEFAULT_SIZE_CAP)]
    pub size_cap: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct ConstructArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// Matrix output file (default: stdout, with the report on stderr).
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
    /// Also write the report to this file.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct LocalityArgs {
    /// Number of leading parity rows that carry locality
    /// (default: every row of weight 1..=r).
    #[arg(long)]
    pub l: Option<usize>,
    /// Locality.
    #[arg(long)]
    pub r: usize,
    /// Availability.
    #[arg(long)]
    pub t: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct VerifyArgs {
    pub path: PathBuf,
    #[command(flatten)]
    pub locality: LocalityArgs,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum DistanceMode {
    Auto,
    Enumerate,
    Subsets,
}

#[derive(Debug, Args, Serialize)]
pub struct CapArgs {
    /// Largest q^k enumerated.
    #[arg(long, default_value_t = DEFAULT_ENUM_CAP)]
    pub enum_cap: u64,
    /// Largest number of column subsets examined.
    #[arg(long, default_value_t = DEFAULT_SUBSET_CAP)]
    pub subset_cap: u64,
}

#[derive(Debug, Args, Serialize)]
pub struct DistanceArgs {
    pub path: PathBuf,
    /// Distance to certify or refute.
    #[arg(long)]
    pub claim: Option<usize>,
    /// `enumerate` walks every codeword; `subsets` searches column subsets;
    /// `auto` certifies a claim by subset search, and otherwise enumerates
    /// when q^k is within --enum-cap.
    #[arg(long, value_enum, default_value_t = DistanceMode::Auto)]
    pub mode: DistanceMode,
    /// Largest subset size for `--mode subsets` without a claim.
    #[arg(long)]
    pub w_max: Option<usize>,
    #[command(flatten)]
    pub caps: CapArgs,
}

#[derive(Debug, Args, Serialize)]
pub struct CertifyArgs {
    pub path: PathBuf,
    #[command(flatten)]
    pub locality: LocalityArgs,
    /// Claimed minimum distance.
    #[arg(long)]
    pub claim: usize,
    #[command(flatten)]
    pub caps: CapArgs,
}

#[derive(Debug, Args, Serialize)]
pub struct BoundsArgs {
    /// Code length.
    #[arg(long)]
    pub n: usize,
    /// Dimension.
    #[arg(long)]
    pub k: usize,
    /// Minimum distance.
    #[arg(long)]
    pub d: usize,
    /// Locality.
    #[arg(long)]
    pub r: usize,
    /// Availability.
    #[arg(long)]
    pub t: usize,
    /// Field order.
    #[arg(long, default_value_t = 2)]
    pub q: u32,
    /// Print the JSON report instead of the table.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args, Serialize)]
pub struct PunctureArgs {
    pub path: PathBuf,
    /// Leading parity rows that carry locality (default: all of weight ≤ r,
    /// or all rows when --r is absent).
    #[arg(long)]
    pub l: Option<usize>,
    /// Locality rows to delete, comma separated.
    #[arg(long, value_delimiter = ',', conflicts_with = "suite")]
    pub rows: Vec<usize>,
    /// Write the punctured parity-check matrix here.
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
    /// Run seeded random deletions of both sizes and check every claim.
    #[arg(long, requires_all = ["r", "t", "d"])]
    pub suite: bool,
    /// Seed for the random deletions (the smaller size uses seed + 1).
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random deletions per size.
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    /// Locality of the full code.
    #[arg(long)]
    pub r: Option<usize>,
    /// Availability of the full code.
    #[arg(long)]
    pub t: Option<usize>,
    /// Certified distance of the full code.
    #[arg(long)]
    pub d: Option<usize>,
    #[command(flatten)]
    pub caps: CapArgs,
}

#[derive(Debug, Args, Serialize)]
pub struct SimulateArgs {
    /// Construction family (1 or 2); alternative to --matrix.
    #[arg(short = 'c', long, value_parser = clap::value_parser!(u8).range(1..=2), conflicts_with = "matrix", required_unless_present = "matrix")]
    pub construction: Option<u8>,
    /// Prime p of GF(p^m).
    #[arg(short = 'p', long, requires = "construction")]
    pub p: Option<u32>,
    /// Exponent m of GF(p^m).
    #[arg(short = 'm', long, default_value_t = 1)]
    pub m: u32,
    /// Parity-check matrix file.
    #[arg(long)]
    pub matrix: Option<PathBuf>,
    /// Number of leading parity rows that carry locality (with --matrix).
    #[arg(long)]
    pub l: Option<usize>,
    /// Locality (required with --matrix).
    #[arg(long)]
    pub r: Option<usize>,
    /// Availability (required with --matrix).
    #[arg(long)]
    pub t: Option<usize>,
    /// Campaign seed; trial i draws from stream i.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of erase-and-repair trials.
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
    /// Write one line per trial: trial, erased coordinate, repair set, reads.
    #[arg(long)]
    pub trace: Option<PathBuf>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Input { path: PathBuf, source: MatrixError },
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Lrc(#[from] LrcError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Distance(#[from] DistanceError),
    #[error(transparent)]
    Puncture(#[from] PunctureError),
    #[error(transparent)]
    Repair(#[from] RepairError),
}

impl CliError {
    /// Budget exhaustion is a failed certificate; everything else is an
    /// input problem.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Distance(DistanceError::SubsetCap { .. })
            | CliError::Distance(DistanceError::EnumerationCap { .. })
            | CliError::Puncture(PunctureError::Distance(_)) => EXIT_FAILED,
            _ => EXIT_USAGE,
        }
    }
}

/// The machine-readable document every command produces.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub tool_version: String,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Output of one command before the report envelope is added.
pub struct Outcome {
    pub results: Value,
    pub exit: i32,
    /// Printed to stdout instead of the report (tables, matrices).
    pub stdout: Option<String>,
    /// Print the report to stderr rather than stdout.
    pub report_to_stderr: bool,
}

impl Outcome {
    fn ok(results: Value) -> Self {
        Outcome {
            results,
            exit: EXIT_OK,
            stdout: None,
            report_to_stderr: false,
        }
    }

    fn verdict(results: Value, passed: bool) -> Self {
        Outcome {
            exit: if passed { EXIT_OK } else { EXIT_FAILED },
            ..Outcome::ok(results)
        }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

pub fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Construct(_) => "construct",
        Command::Verify(_) => "verify",
        Command::Distance(_) => "distance",
        Command::Certify(_) => "certify",
        Command::Bounds(_) => "bounds",
        Command::Puncture(_) => "puncture",
        Command::Simulate(_) => "simulate",
    }
}

/// Runs a parsed command line, writing to `out` and `err`; returns the exit
/// code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let start = Instant::now();
    let result = with_workers(cli.workers, || dispatch(&cli.command));
    match result {
        Ok(outcome) => {
            let report = Report {
                command: command_name(&cli.command).to_string(),
                inputs: to_value(&cli.command)
                    .as_object()
                    .and_then(|o| o.values().next().cloned())
                    .unwrap_or(Value::Null),
                results: outcome.results,
                tool_version: env!("CARGO_PKG_VERSION").to_string(),
                elapsed_ms: start.elapsed().as_millis() as u64,
            };
            let text = report.to_json();
            let written = match (&outcome.stdout, outcome.report_to_stderr) {
                (Some(s), true) => out
                    .write_all(s.as_bytes())
                    .and_then(|_| err.write_all(text.as_bytes())),
                (Some(s), false) => out.write_all(s.as_bytes()),
                (None, _) => out.write_all(text.as_bytes()),
            };
            let extra = match &cli.command {
                Command::Construct(a) => a.report.as_ref().map(|p| fs::write(p, &text)),
                _ => None,
            };
            if let Err(e) = written.and(extra.unwrap_or(Ok(()))) {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
            outcome.exit
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cmd: &Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Construct(a) => cmd_construct(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Distance(a) => cmd_distance(a),
        Command::Certify(a) => cmd_certify(a),
        Command::Bounds(a) => cmd_bounds(a),
        Command::Puncture(a) => cmd_puncture(a),
        Command::Simulate(a) => cmd_simulate(a),
    }
}

/// Parses `ones`, `uniform:<e>`, `random` or `random:<seed>`.
pub fn parse_fill(s: &str, seed: u64) -> Result<Fill, CliError> {
    let bad = || {
        CliError::Usage(format!(
            "unknown fill `{s}`; use ones, uniform:<e>, random or random:<seed>"
        ))
    };
    match s.split_once(':') {
        None if s == "ones" => Ok(Fill::Ones),
        None if s == "random" => Ok(Fill::Random(seed)),
        Some(("uniform", e)) => Ok(Fill::Uniform(Elem(e.parse().map_err(|_| bad())?))),
        Some(("random", n)) => Ok(Fill::Random(n.parse().map_err(|_| bad())?)),
        _ => Err(bad()),
    }
}

pub fn build(source: &SourceArgs) -> Result<ConstructedCode, CliError> {
    let opts = ConstructionOptions {
        target: FieldSpec::with_order(source.over)?,
        fill: parse_fill(&source.fill, source.seed)?,
        size_cap: source.size_cap,
    };
    Ok(match source.construction {
        1 => construct1(source.p, source.m, &opts)?,
        _ => construct2(source.p, source.m, &opts)?,
    })
}

fn read_matrix(path: &Path) -> Result<GfMatrix, CliError> {
    GfMatrix::read_file(path).map_err(|source| CliError::Input {
        path: path.to_path_buf(),
        source,
    })
}

fn load_code(
    path: &Path,
    l: Option<usize>,
    r: Option<usize>,
) -> Result<StandardParityCheck, CliError> {
    let h = read_matrix(path)?;
    Ok(match (l, r) {
        (Some(l), _) => StandardParityCheck::new(h, l)?,
        (None, Some(r)) => StandardParityCheck::auto(h, r)?,
        (None, None) => {
            let rows = h.rows();
            StandardParityCheck::new(h, rows)?
        }
    })
}

fn distance_config(caps: &CapArgs) -> DistanceConfig {
    DistanceConfig {
        enum_cap: caps.enum_cap,
        subset_cap: caps.subset_cap,
        ..DistanceConfig::default()
    }
}

fn code_summary(code: &StandardParityCheck) -> Value {
    json!({
        "n": code.n(),
        "k": code.k(),
        "q": code.field().order(),
        "l": code.l(),
    })
}

fn cmd_construct(a: &ConstructArgs) -> Result<Outcome, CliError> {
    let code = build(&a.source)?;
    let text = code.to_text();
    let mut results = to_value(&code);
    results["workers"] = json!(available_workers());
    // observed, not asserted: the certificate only needs at most one
    results["row_intersections"] = match row_intersection_range(&code.check) {
        Some((lo, hi)) => json!({ "min": lo, "max": hi }),
        None => Value::Null,
    };
    match &a.output {
        Some(path) => {
            fs::write(path, &text)?;
            Ok(Outcome::ok(results))
        }
        None => Ok(Outcome {
            stdout: Some(text),
            report_to_stderr: a.report.is_none(),
            ..Outcome::ok(results)
        }),
    }
}

fn cmd_verify(a: &VerifyArgs) -> Result<Outcome, CliError> {
    let loc = &a.locality;
    let code = load_code(&a.path, loc.l, Some(loc.r))?;
    let cert = check_islrc_with(&code, loc.r, loc.t, Exec::default());
    let passed = cert.passed;
    Ok(Outcome::verdict(
        json!({ "code": code_summary(&code), "certificate": to_value(&cert) }),
        passed,
    ))
}

fn distance_value(cert: &DistanceCertificate, field: &FieldSpec) -> Value {
    json!({
        "certificate": to_value(cert),
        "witness_support": cert.witness_support(),
        "witness_text": cert.witness_matrix(field).to_text(),
    })
}

fn refuted_value(e: &DistanceError, field: &FieldSpec) -> Option<Value> {
    use crate::distance::Refutation;
    match e {
        DistanceError::Refuted {
            claimed,
            refutation,
        } => {
            let mut v = json!({ "claimed": claimed, "refutation": to_value(refutation) });
            if let Refutation::LighterCodeword { codeword, .. } = refutation {
                let w = GfMatrix::from_fn(field, 1, codeword.len(), |_, j| codeword[j]);
                v["witness_text"] = json!(w.to_text());
            }
            Some(v)
        }
        _ => None,
    }
}

fn cmd_distance(a: &DistanceArgs) -> Result<Outcome, CliError> {
    let code = load_code(&a.path, Some(0), None)?;
    let cfg = distance_config(&a.caps);
    let field = code.field().clone();
    let summary = code_summary(&code);

    let claim_outcome = |res: Result<DistanceCertificate, DistanceError>| match res {
        Ok(cert) => Ok(Outcome::verdict(
            json!({ "code": summary, "verified": true, "distance": distance_value(&cert, &field) }),
            true,
        )),
        Err(e) => match refuted_value(&e, &field) {
            Some(v) => Ok(Outcome::verdict(
                json!({ "code": summary, "verified": false, "refuted": v }),
                false,
            )),
            None => Err(CliError::from(e)),
        },
    };

    match (a.claim, a.mode) {
        (Some(claim), DistanceMode::Enumerate) => {
            let cert = min_distance_enumerate(&code, &cfg)?;
            let ok = cert.d == claim;
            Ok(Outcome::verdict(
                json!({
                    "code": summary,
                    "claimed": claim,
                    "verified": ok,
                    "distance": distance_value(&cert, &field),
                }),
                ok,
            ))
        }
        (Some(claim), _) => claim_outcome(certify_distance(&code, claim, &cfg)),
        (None, DistanceMode::Auto) => {
            let cert = min_distance(&code, &cfg)?;
            Ok(Outcome::ok(
                json!({ "code": summary, "distance": distance_value(&cert, &field) }),
            ))
        }
        (None, DistanceMode::Enumerate) => {
            let cert = min_distance_enumerate(&code, &cfg)?;
            Ok(Outcome::ok(
                json!({ "code": summary, "distance": distance_value(&cert, &field) }),
            ))
        }
        (None, DistanceMode::Subsets) => {
            let w_max = a.w_max.unwrap_or(code.redundancy() + 1);
            let results = match min_distance_subsets(&code, w_max, &cfg)? {
                SubsetOutcome::Exact(cert) => {
                    json!({ "code": summary, "distance": distance_value(&cert, &field) })
                }
                SubsetOutcome::Exceeds {
                    w_max,
                    subsets_checked,
                } => json!({
                    "code": summary,
                    "exceeds": { "lower_bound": w_max + 1, "subsets_checked": subsets_checked },
                }),
            };
            Ok(Outcome::ok(results))
        }
    }
}

fn cmd_certify(a: &CertifyArgs) -> Result<Outcome, CliError> {
    let loc = &a.locality;
    let code = load_code(&a.path, loc.l, Some(loc.r))?;
    let cfg = distance_config(&a.caps);
    let field = code.field().clone();
    let cert = check_islrc_with(&code, loc.r, loc.t, Exec::default());
    let t_independent = check_t_columns_independent(&code, loc.t, &cfg)?;
    let (distance, verified) = match certify_distance(&code, a.claim, &cfg) {
        Ok(c) => (distance_value(&c, &field), true),
        Err(e) => match refuted_value(&e, &field) {
            Some(v) => (v, false),
            None => return Err(e.into()),
        },
    };
    let bounds = classify(CodeParams {
        n: code.n(),
        k: code.k(),
        d: a.claim,
        r: loc.r,
        t: loc.t,
        q: field.order(),
    });
    let passed = cert.passed && verified && t_independent;
    Ok(Outcome::verdict(
        json!({
            "code": code_summary(&code),
            "passed": passed,
            "locality": to_value(&cert),
            "t_columns_independent": t_independent,
            "distance_verified": verified,
            "distance": distance,
            "bounds": to_value(&bounds),
        }),
        passed,
    ))
}

fn cmd_bounds(a: &BoundsArgs) -> Result<Outcome, CliError> {
    if a.k == 0 || a.r == 0 || a.t == 0 || a.n < a.k {
        return Err(CliError::Usage(
            "bounds need n ≥ k ≥ 1, r ≥ 1 and t ≥ 1".to_string(),
        ));
    }
    let report = classify(CodeParams {
        n: a.n,
        k: a.k,
        d: a.d,
        r: a.r,
        t: a.t,
        q: a.q,
    });
    Ok(Outcome {
        stdout: (!a.json).then(|| report.table()),
        ..Outcome::ok(to_value(&report))
    })
}

fn cmd_puncture(a: &PunctureArgs) -> Result<Outcome, CliError> {
    let code = load_code(&a.path, a.l, a.r)?;
    let cfg = distance_config(&a.caps);
    if a.suite {
        let (r, t, d) = (a.r.unwrap_or(0), a.t.unwrap_or(0), a.d.unwrap_or(0));
        let delta = crate::lrc::min_local_rows(code.k(), r, t).saturating_sub(t);
        let mut deletions = random_deletions(&code, delta, a.count, a.seed)?;
        if delta >= 1 {
            deletions.extend(random_deletions(
                &code,
                delta - 1,
                a.count,
                a.seed.wrapping_add(1),
            )?);
        }
        let summary = puncture_suite(&code, r, t, d, &deletions, &cfg)?;
        let passed = summary.all_hold();
        return Ok(Outcome::verdict(
            json!({ "code": code_summary(&code), "passed": passed, "suite": to_value(&summary) }),
            passed,
        ));
    }
    if a.rows.is_empty() {
        return Err(CliError::Usage("give --rows or --suite".to_string()));
    }
    let report = puncture(&code, &a.rows, &cfg)?;
    let text = report.h_sub.to_text();
    if let Some(path) = &a.output {
        fs::write(path, &text)?;
    }
    Ok(Outcome::ok(json!({
        "code": code_summary(&code),
        "report": to_value(&report),
        "h_sub_text": text,
    })))
}

fn cmd_simulate(a: &SimulateArgs) -> Result<Outcome, CliError> {
    let codec = match (&a.matrix, a.construction) {
        (Some(path), _) => {
            let (Some(r), Some(t)) = (a.r, a.t) else {
                return Err(CliError::Usage("--matrix needs --r and --t".to_string()));
            };
            Codec::new(load_code(path, a.l, Some(r))?, r, t)?
        }
        (None, Some(c)) => {
            let Some(p) = a.p else {
                return Err(CliError::Usage("--construction needs -p".to_string()));
            };
            let built = build(&SourceArgs {
                construction: c,
                p,
                m: a.m,
                over: 2,
                fill: "ones".to_string(),
                seed: 0,
                size_cap: DEFAULT_SIZE_CAP,
            })?;
            Codec::new(built.check, built.declared.r, built.declared.t)?
        }
        (None, None) => {
            return Err(CliError::Usage(
                "give --construction or --matrix".to_string(),
            ))
        }
    };
    let stats = campaign(&codec, a.seed, a.trials, Exec::default())?;
    if let Some(path) = &a.trace {
        fs::write(path, stats.trace_log())?;
    }
    let passed = stats.succeeded == stats.attempted;
    Ok(Outcome::verdict(
        json!({
            "code": code_summary(codec.code()),
            "r": codec.r(),
            "t": codec.t(),
            "seed": stats.seed,
            "trials": stats.trials,
            "attempted": stats.attempted,
            "succeeded": stats.succeeded,
            "mean_reads": stats.mean_reads,
            "max_reads": stats.max_reads,
        }),
        passed,
    ))
}
