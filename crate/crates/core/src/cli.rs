//! The `exotic7` command line.
//!
//! Every command writes one JSON document to stdout:
//!
//! ```json
//! { "schema_version": "1", "command": {...}, "payload": {...}, "warnings": [] }
//! ```
//!
//! Rationals are strings `"p/q"` or `"p"`; groups are `"0"`, `"Z"`, `"Z/k"`
//! or `"Z+Z/k"`. `search --format csv` writes a CSV table instead.
//!
//! Exit codes: 0 success, 2 invalid input, 3 an undefined invariant was
//! required (`--require-mu` with `n = 0`), 4 internal consistency failure.

use std::collections::BTreeSet;
use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::dedekind::{self, DedekindArgs, DedekindError};
use crate::invariants::{
    self, CharacteristicNumbers, CohomologyReport, EkDecomposition, InvariantError,
    InvariantReport, ManifoldParams, OrbifoldReport, SphereClassification, Violation,
};
use crate::rational::Rational;
use crate::search::{self, CorollaryTable, ParamRange, SearchResult, SearchSpec};

pub const SCHEMA_VERSION: &str = "1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_UNDEFINED: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "exotic7",
    version,
    about = "Exact invariants and exotic-sphere classification of the 7-manifolds M_{a,b}"
)]
pub struct Cli {
    /// Worker threads for parallel work (default: all cores).
    #[arg(long, global = true, env = "EXOTIC7_JOBS")]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Every invariant of M_{a,b}: n, m, cohomology, orbifold data,
    /// characteristic numbers, Dedekind sums, mu and its decomposition.
    Invariants(InvariantsArgs),
    /// The generalized Dedekind sum D(q; p1, p2, p3).
    Dedekind(DedekindCmdArgs),
    /// Scan a box of parameters, or tabulate the homotopy-sphere family
    /// a = (-3, -3, 1), b = (1, 4r+1, 4r+1).
    Search(SearchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args, Serialize)]
pub struct InvariantsArgs {
    /// Triple a1,a2,a3
    #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
    pub a: [i64; 3],
    /// Triple b1,b2,b3
    #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
    pub b: [i64; 3],
    /// Fail with exit code 3 when mu is undefined (n = 0).
    #[arg(long)]
    pub require_mu: bool,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Numeric,
    Both,
}

#[derive(Debug, Args, Serialize)]
pub struct DedekindCmdArgs {
    #[arg(short = 'q', long, allow_hyphen_values = true)]
    pub q: i64,
    /// p1,p2,p3
    #[arg(short = 'p', long, value_parser = parse_triple, allow_hyphen_values = true)]
    pub p: [i64; 3],
    #[arg(long, value_enum, default_value = "exact")]
    pub mode: Mode,
    /// Mantissa bits for the numeric evaluation.
    #[arg(long, default_value_t = 128)]
    pub precision: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct SearchArgs {
    #[arg(long, default_value = "1", value_parser = parse_range, allow_hyphen_values = true)]
    pub a1: ParamRange,
    #[arg(long, default_value = "1", value_parser = parse_range, allow_hyphen_values = true)]
    pub a2: ParamRange,
    #[arg(long, default_value = "1", value_parser = parse_range, allow_hyphen_values = true)]
    pub a3: ParamRange,
    #[arg(long, default_value = "1", value_parser = parse_range, allow_hyphen_values = true)]
    pub b1: ParamRange,
    #[arg(long, default_value = "1", value_parser = parse_range, allow_hyphen_values = true)]
    pub b2: ParamRange,
    #[arg(long, default_value = "1", value_parser = parse_range, allow_hyphen_values = true)]
    pub b3: ParamRange,
    /// `sphere` keeps |n| = 1, `nonzero` keeps n != 0; may be repeated.
    #[arg(long, value_enum)]
    pub filter: Vec<FilterKind>,
    /// Comma-separated oriented classes (mod 28) to keep and report coverage for.
    #[arg(long, value_parser = parse_classes)]
    pub target_classes: Option<BTreeSet<u8>>,
    #[arg(long)]
    pub limit: Option<usize>,
    /// Tabulate 28·mu over r_min..r_max on a = (-3,-3,1), b = (1,4r+1,4r+1)
    /// instead of scanning a box.
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    pub corollary_table: Option<ParamRange>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FilterKind {
    Sphere,
    Nonzero,
}

fn parse_triple(s: &str) -> Result<[i64; 3], String> {
    let parts: Vec<_> = s.split(',').map(str::trim).collect();
    let bad = || format!("expected three comma-separated integers, got `{s}`");
    if parts.len() != 3 {
        return Err(bad());
    }
    let mut out = [0; 3];
    for (slot, part) in out.iter_mut().zip(parts) {
        *slot = part.parse().map_err(|_| bad())?;
    }
    Ok(out)
}

fn parse_range(s: &str) -> Result<ParamRange, String> {
    s.parse().map_err(|e: search::SearchError| e.to_string())
}

fn parse_classes(s: &str) -> Result<BTreeSet<u8>, String> {
    s.split(',')
        .map(|t| match t.trim().parse::<u8>() {
            Ok(c) if c < 28 => Ok(c),
            _ => Err(format!("`{t}` is not a class in 0..28")),
        })
        .collect()
}

#[derive(Debug, Serialize)]
pub struct OutputDocument<C: Serialize> {
    pub schema_version: &'static str,
    pub command: CommandEcho<C>,
    pub payload: Payload,
    pub warnings: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct CommandEcho<C: Serialize> {
    pub name: &'static str,
    pub args: C,
}

#[derive(Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Invariants(Box<InvariantPayload>),
    InvalidParameters { violations: Vec<String> },
    Dedekind(DedekindPayload),
    Search(SearchResult),
    CorollaryTable(CorollaryTable),
}

#[derive(Debug, Serialize)]
pub struct InvariantPayload {
    pub valid: bool,
    pub params: ManifoldParams,
    pub n: i128,
    pub m: Rational,
    pub cohomology: CohomologyReport,
    pub orbifold: OrbifoldReport,
    pub characteristic_numbers: CharacteristicNumbers,
    pub dedekind_a: Rational,
    pub dedekind_b: Rational,
    pub mu: Option<Rational>,
    pub mu28: Option<i64>,
    pub class: Option<u8>,
    pub decomposition: Option<DecompositionPayload>,
    pub classification: Option<SphereClassification>,
}

#[derive(Debug, Serialize)]
pub struct DecompositionPayload {
    #[serde(flatten)]
    pub terms: EkDecomposition,
    /// `eta + very_small − pontrjagin`, before reduction mod 1.
    pub combined: Rational,
}

impl From<InvariantReport> for InvariantPayload {
    fn from(r: InvariantReport) -> Self {
        InvariantPayload {
            valid: true,
            params: r.params,
            n: r.n,
            m: r.m,
            cohomology: r.cohomology,
            orbifold: r.orbifold,
            characteristic_numbers: r.characteristic_numbers,
            dedekind_a: r.dedekind_a,
            dedekind_b: r.dedekind_b,
            mu: r.mu,
            mu28: r.mu28,
            class: r.classification.as_ref().and_then(|c| c.oriented_class),
            decomposition: r.decomposition.map(|terms| DecompositionPayload {
                combined: terms.combined(),
                terms,
            }),
            classification: r.classification,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct DedekindPayload {
    pub q: i64,
    pub p: [i64; 3],
    pub exact: Option<Rational>,
    pub numeric: Option<f64>,
    pub abs_diff: Option<f64>,
    pub precision: Option<usize>,
}

/// What a CLI invocation produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutcome {
    fn new(code: i32, stdout: String, stderr: String) -> Self {
        CliOutcome {
            code,
            stdout,
            stderr,
        }
    }
}

fn document<C: Serialize>(name: &'static str, args: C, payload: Payload, warnings: Vec<String>) -> String {
    let doc = OutputDocument {
        schema_version: SCHEMA_VERSION,
        command: CommandEcho { name, args },
        payload,
        warnings,
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("documents serialize");
    s.push('\n');
    s
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> CliOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CliOutcome::new(EXIT_INVALID, String::new(), text)
            } else {
                CliOutcome::new(EXIT_OK, text, String::new())
            };
        }
    };
    match cli.command {
        Command::Invariants(a) => cmd_invariants(a),
        Command::Dedekind(a) => cmd_dedekind(a),
        Command::Search(a) => cmd_search(a, cli.jobs),
    }
}

fn internal_failure(err: impl std::fmt::Display) -> CliOutcome {
    CliOutcome::new(
        EXIT_INTERNAL,
        String::new(),
        format!("error: internal consistency failure: {err}\n"),
    )
}

pub fn cmd_invariants(args: InvariantsArgs) -> CliOutcome {
    if args.format != Format::Json {
        return CliOutcome::new(
            EXIT_INVALID,
            String::new(),
            "error: --format csv is only supported by `search`\n".into(),
        );
    }
    let params = match invariants::validate(args.a, args.b) {
        Ok(p) => p,
        Err(InvariantError::Invalid(v)) => {
            let violations: Vec<String> = v.iter().map(Violation::to_string).collect();
            let stderr = format!("error: invalid parameters: {}\n", violations.join("; "));
            let out = document(
                "invariants",
                &args,
                Payload::InvalidParameters { violations },
                Vec::new(),
            );
            return CliOutcome::new(EXIT_INVALID, out, stderr);
        }
        Err(e) => return internal_failure(e),
    };
    let report = match InvariantReport::compute(&params) {
        Ok(r) => r,
        Err(e) if e.is_internal() => return internal_failure(e),
        Err(e) => return CliOutcome::new(EXIT_INVALID, String::new(), format!("error: {e}\n")),
    };
    let mut warnings = Vec::new();
    let mut code = EXIT_OK;
    let mut stderr = String::new();
    if report.n == 0 {
        warnings.push("n = 0: H3 = H4 = Z and the Eells-Kuiper invariant is undefined".to_string());
        if args.require_mu {
            code = EXIT_UNDEFINED;
            stderr = "error: mu is undefined for n = 0\n".into();
        }
    } else if report.n.abs() > 1 {
        warnings.push(format!(
            "|n| = {} > 1: not a homotopy sphere; invariants do not determine the diffeomorphism type",
            report.n.abs()
        ));
    }
    let out = document(
        "invariants",
        &args,
        Payload::Invariants(Box::new(report.into())),
        warnings,
    );
    CliOutcome::new(code, out, stderr)
}

pub fn cmd_dedekind(args: DedekindCmdArgs) -> CliOutcome {
    let invalid = |e: DedekindError| CliOutcome::new(EXIT_INVALID, String::new(), format!("error: {e}\n"));
    let dargs = match DedekindArgs::new(args.q, args.p[0], args.p[1], args.p[2]) {
        Ok(d) => d,
        Err(e) => return invalid(e),
    };
    let exact = if args.mode != Mode::Numeric {
        match dedekind::dedekind_sum_exact(&dargs) {
            Ok(v) => Some(v),
            Err(e @ DedekindError::InternalNotRational(_)) => return internal_failure(e),
            Err(e) => return invalid(e),
        }
    } else {
        None
    };
    let numeric = if args.mode != Mode::Exact {
        match dedekind::dedekind_sum_numeric(&dargs, args.precision) {
            Ok(v) => Some(v),
            Err(e) => return invalid(e),
        }
    } else {
        None
    };
    let abs_diff = match (&exact, numeric) {
        (Some(e), Some(n)) => Some((e.to_f64() - n).abs()),
        _ => None,
    };
    let mut warnings = Vec::new();
    if abs_diff.is_some_and(|d| d >= 1e-9) {
        warnings.push(format!(
            "exact and numeric values differ by {:e}",
            abs_diff.unwrap_or_default()
        ));
    }
    let payload = Payload::Dedekind(DedekindPayload {
        q: args.q,
        p: args.p,
        exact,
        numeric,
        abs_diff,
        precision: numeric.map(|_| args.precision),
    });
    CliOutcome::new(EXIT_OK, document("dedekind", &args, payload, warnings), String::new())
}

pub fn cmd_search(args: SearchArgs, jobs: Option<usize>) -> CliOutcome {
    if let Some(range) = args.corollary_table {
        if range.is_empty() {
            return CliOutcome::new(
                EXIT_INVALID,
                String::new(),
                format!("error: empty corollary range {range}\n"),
            );
        }
        let r_values: Vec<i64> = (range.lo..=range.hi).collect();
        let table = match CorollaryTable::build(&r_values, args.target_classes.as_ref()) {
            Ok(t) => t,
            Err(e) => return internal_failure(e),
        };
        let mut warnings = Vec::new();
        if !table.missing_targets.is_empty() {
            warnings.push(format!("target classes not attained: {:?}", table.missing_targets));
        }
        return match args.format {
            Format::Json => CliOutcome::new(
                EXIT_OK,
                document("search", &args, Payload::CorollaryTable(table), warnings),
                String::new(),
            ),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["r", "mu", "class"]).expect("in-memory csv");
                for row in &table.rows {
                    w.write_record([
                        row.r.to_string(),
                        row.mu.to_string(),
                        row.oriented_class.to_string(),
                    ])
                    .expect("in-memory csv");
                }
                CliOutcome::new(EXIT_OK, csv_string(w), warnings_to_stderr(&warnings))
            }
        };
    }

    let mut spec = SearchSpec::new([args.a1, args.a2, args.a3], [args.b1, args.b2, args.b3]);
    spec.filter.require_sphere = args.filter.contains(&FilterKind::Sphere);
    spec.filter.require_nonzero_n = args.filter.contains(&FilterKind::Nonzero);
    spec.filter.target_classes = args.target_classes.clone();
    if let Some(limit) = args.limit {
        spec.limit = limit;
    }
    let result = match search::run_search(&spec, jobs) {
        Ok(r) => r,
        Err(e) => {
            return CliOutcome::new(EXIT_INVALID, String::new(), format!("error: {e}\n"));
        }
    };
    let mut warnings = Vec::new();
    if result.stats.errors > 0 {
        warnings.push(format!("{} entries failed to evaluate", result.stats.errors));
    }
    if result.stats.truncated {
        warnings.push(format!(
            "output truncated to {} of {} matching entries",
            result.entries.len(),
            result.stats.matched
        ));
    }
    if !result.missing_targets.is_empty() {
        warnings.push(format!("target classes not attained: {:?}", result.missing_targets));
    }
    let code = if result.stats.internal_errors > 0 {
        EXIT_INTERNAL
    } else {
        EXIT_OK
    };
    match args.format {
        Format::Json => CliOutcome::new(
            code,
            document("search", &args, Payload::Search(result), warnings),
            String::new(),
        ),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["a1", "a2", "a3", "b1", "b2", "b3", "n", "m", "mu", "class"])
                .expect("in-memory csv");
            for e in &result.entries {
                let mut rec: Vec<String> = e
                    .params
                    .a
                    .values()
                    .iter()
                    .chain(&e.params.b.values())
                    .map(i64::to_string)
                    .collect();
                rec.push(e.n.to_string());
                rec.push(e.m.to_string());
                rec.push(e.mu.as_ref().map(Rational::to_string).unwrap_or_default());
                rec.push(e.oriented_class.map(|c| c.to_string()).unwrap_or_default());
                w.write_record(&rec).expect("in-memory csv");
            }
            CliOutcome::new(code, csv_string(w), warnings_to_stderr(&warnings))
        }
    }
}

fn csv_string(w: csv::Writer<Vec<u8>>) -> String {
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("csv is utf-8")
}

fn warnings_to_stderr(warnings: &[String]) -> String {
    warnings.iter().map(|w| format!("warning: {w}\n")).collect()
}
