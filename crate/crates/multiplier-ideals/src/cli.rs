//! Command-line front end.
//!
//! One thin binary dispatches to the library: `lct`, `mult`, `jump`,
//! `threshold`, and `newton` operate on monomial ideals read from a JSON
//! document (`{"vars": [...], "gens": [...]}`) or given inline with
//! `--vars`/`--gens`; `det-lct`, `det-mult`, `det-jump`, `det-expand`, and
//! `det-minors` operate on generic determinantal shapes given by `-m -n -r`.
//!
//! Output is deterministic: identical invocations produce byte-identical
//! stdout. Exact values print as `P/Q` (integers without the slash), both in
//! the default text format and in `--format json`. Elapsed time is measured
//! for every run but only ever written to stderr (behind `--timing`), so it
//! never perturbs the report bytes.
//!
//! Exit codes: 0 on success, 1 on domain errors (zero ideal, negative
//! exponent, bad shape), 2 on parse or usage errors.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::determinantal::DeterminantalShape;
use crate::error::{Error, Result};
use crate::ideal::{parse_monomial, MonomialIdeal};
use crate::interval::Interval;
use crate::multiplier::{jumping_numbers, lct, multiplier_ideal, threshold_of_monomial, Threshold};
use crate::newton::{Facet, NewtonPolyhedron};
use crate::rational::{parse_rational, rational_int, Rational};

/// Everything a finished invocation produced. `main` prints the streams and
/// exits with the code; tests assert on the fields directly.
#[derive(Debug)]
pub struct RunOutput {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A finished computation: command and input echoes, the command-specific
/// results, and the elapsed wall time. The rendered report depends only on
/// the inputs; timing is kept out of both output formats.
struct Report {
    command: &'static str,
    inputs: Value,
    results: Value,
    text: String,
    elapsed: Duration,
}

impl Report {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                let mut value = json!({
                    "command": self.command,
                    "inputs": self.inputs,
                });
                value
                    .as_object_mut()
                    .expect("report is an object")
                    .insert("results".into(), self.results.clone());
                format!(
                    "{}\n",
                    serde_json::to_string_pretty(&value).expect("serializable")
                )
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(
    name = "multiplier-ideals",
    about = "Multiplier ideals, log canonical thresholds, and jumping numbers \
             of monomial and generic determinantal ideals, in exact arithmetic",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Report elapsed wall time on stderr.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Log canonical threshold of a monomial ideal.
    Lct {
        #[command(flatten)]
        ideal: IdealArgs,
    },
    /// Multiplier ideal J(I^c) of a monomial ideal.
    Mult {
        #[command(flatten)]
        ideal: IdealArgs,
        /// Exponent c as P or P/Q.
        #[arg(short = 'c', long = "exponent", allow_hyphen_values = true)]
        exponent: String,
    },
    /// Jumping numbers of a monomial ideal with their multiplier ideals.
    Jump {
        #[command(flatten)]
        ideal: IdealArgs,
        #[command(flatten)]
        interval: IntervalArgs,
    },
    /// Threshold of a monomial, with the facets imposing it.
    Threshold {
        #[command(flatten)]
        ideal: IdealArgs,
        /// Monomial such as `z^2*w` (or `1`).
        #[arg(short = 'M', long)]
        monomial: String,
    },
    /// Irredundant facet system of the Newton polyhedron.
    Newton {
        #[command(flatten)]
        ideal: IdealArgs,
    },
    /// Log canonical threshold of a generic determinantal ideal.
    #[command(name = "det-lct")]
    DetLct {
        #[command(flatten)]
        shape: ShapeArgs,
    },
    /// Multiplier ideal of a generic determinantal ideal, as a formal
    /// intersection of symbolic powers.
    #[command(name = "det-mult")]
    DetMult {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Exponent c as P or P/Q.
        #[arg(short = 'c', long = "exponent", allow_hyphen_values = true)]
        exponent: String,
    },
    /// Jumping-number candidates of a generic determinantal ideal.
    #[command(name = "det-jump")]
    DetJump {
        #[command(flatten)]
        shape: ShapeArgs,
        #[command(flatten)]
        interval: IntervalArgs,
    },
    /// Expansion of a symbolic power I_i^((a)) over partitions of a.
    #[command(name = "det-expand")]
    DetExpand {
        /// Matrix row count m.
        #[arg(short = 'm', long = "rows")]
        rows: usize,
        /// Matrix column count n.
        #[arg(short = 'n', long = "cols")]
        cols: usize,
        /// Minor size i of the symbolic power base.
        #[arg(short = 'i', long = "minor-size")]
        minor_size: usize,
        /// The symbolic exponent a (a positive integer).
        #[arg(short = 'a', long = "power")]
        power: i64,
    },
    /// Signed term lists of all r x r minors of the generic matrix.
    #[command(name = "det-minors")]
    DetMinors {
        #[command(flatten)]
        shape: ShapeArgs,
    },
}

#[derive(Args)]
struct IdealArgs {
    /// JSON document with fields `vars` (names) and `gens` (monomials).
    #[arg(long, value_name = "FILE")]
    ideal: Option<std::path::PathBuf>,
    /// Comma-separated variable names, e.g. `x,y,z,w`.
    #[arg(long, value_name = "NAMES")]
    vars: Option<String>,
    /// Comma-separated monomial generators, e.g. `x*y,x*z,z*w^2`.
    #[arg(long, value_name = "MONOMIALS")]
    gens: Option<String>,
}

#[derive(Args)]
struct ShapeArgs {
    /// Matrix row count m.
    #[arg(short = 'm', long = "rows")]
    rows: usize,
    /// Matrix column count n.
    #[arg(short = 'n', long = "cols")]
    cols: usize,
    /// Minor size r.
    #[arg(short = 'r', long = "minor-size")]
    minor_size: usize,
}

#[derive(Args)]
struct IntervalArgs {
    /// Query interval LO..HI (defaults: (0, n] for `jump`,
    /// (0, lct + 1] for `det-jump`).
    #[arg(long, value_name = "LO..HI")]
    interval: Option<String>,
    /// Exclude the lower endpoint (default).
    #[arg(long, conflicts_with = "lo_closed")]
    lo_open: bool,
    /// Include the lower endpoint.
    #[arg(long)]
    lo_closed: bool,
    /// Exclude the upper endpoint.
    #[arg(long, conflicts_with = "hi_closed")]
    hi_open: bool,
    /// Include the upper endpoint (default).
    #[arg(long)]
    hi_closed: bool,
}

/// The JSON ideal file format.
#[derive(Debug, Deserialize)]
struct IdealDocument {
    vars: Vec<String>,
    gens: Vec<String>,
}

/// Parses `argv` and executes one subcommand, capturing output and exit
/// code.
pub fn run<I, S>(argv: I) -> RunOutput
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(err) => {
            let rendered = err.render().to_string();
            return if err.use_stderr() {
                RunOutput {
                    exit_code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                // --help and --version go to stdout and succeed.
                RunOutput {
                    exit_code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };

    match execute(&cli.command) {
        Ok(report) => {
            let stderr = if cli.timing {
                format!("elapsed: {:?}\n", report.elapsed)
            } else {
                String::new()
            };
            RunOutput {
                exit_code: 0,
                stdout: report.render(cli.format),
                stderr,
            }
        }
        Err(err) => RunOutput {
            exit_code: if err.is_parse_error() { 2 } else { 1 },
            stdout: String::new(),
            stderr: format!("error: {}\n", err),
        },
    }
}

fn execute(command: &Command) -> Result<Report> {
    let started = Instant::now();
    match command {
        Command::Lct { ideal } => {
            let ideal = load_ideal(ideal)?;
            let value = lct(&ideal)?;
            Ok(report(
                "lct",
                ideal_inputs(&ideal),
                json!({ "lct": value.to_string() }),
                format!("{}\n", value),
                started,
            ))
        }
        Command::Mult { ideal, exponent } => {
            let ideal = load_ideal(ideal)?;
            let c = parse_rational(exponent)?;
            let result = multiplier_ideal(&ideal, &c)?;
            let mut inputs = ideal_inputs(&ideal);
            add_input(&mut inputs, "c", json!(c.to_string()));
            Ok(report(
                "mult",
                inputs,
                json!({ "ideal": result.generator_strings() }),
                format!("{}\n", result),
                started,
            ))
        }
        Command::Jump { ideal, interval } => {
            let ideal = load_ideal(ideal)?;
            let default_hi = rational_int(ideal.num_vars() as i64);
            let interval = parse_interval(interval, default_hi)?;
            let report_data = jumping_numbers(&ideal, &interval)?;
            let mut text = String::new();
            for (number, j) in report_data.numbers.iter().zip(&report_data.ideals) {
                writeln!(text, "{}: {}", number, j).expect("writing to a string");
            }
            let mut inputs = ideal_inputs(&ideal);
            add_input(&mut inputs, "interval", json!(interval.to_string()));
            Ok(report(
                "jump",
                inputs,
                json!({
                    "jumping_numbers": report_data
                        .numbers
                        .iter()
                        .map(|n| n.to_string())
                        .collect::<Vec<_>>(),
                    "ideals": report_data
                        .ideals
                        .iter()
                        .map(|j| j.generator_strings())
                        .collect::<Vec<_>>(),
                }),
                text,
                started,
            ))
        }
        Command::Threshold { ideal, monomial } => {
            let ideal = load_ideal(ideal)?;
            let v = parse_monomial(monomial, ideal.variables())?;
            let threshold = threshold_of_monomial(&ideal, &v)?;
            let mut inputs = ideal_inputs(&ideal);
            add_input(&mut inputs, "monomial", json!(ideal.monomial_string(&v)));
            let (results, text) = match threshold {
                Threshold::Infinite => (
                    json!({ "value": "infinite", "witnesses": [] }),
                    "infinite\n".to_string(),
                ),
                Threshold::Finite(result) => {
                    let mut text = format!("{}\n", result.value);
                    for facet in &result.witnesses {
                        writeln!(text, "{}", facet.render(ideal.variables()))
                            .expect("writing to a string");
                    }
                    (
                        json!({
                            "value": result.value.to_string(),
                            "witnesses": result
                                .witnesses
                                .iter()
                                .map(facet_json)
                                .collect::<Vec<_>>(),
                        }),
                        text,
                    )
                }
            };
            Ok(report("threshold", inputs, results, text, started))
        }
        Command::Newton { ideal } => {
            let ideal = load_ideal(ideal)?;
            let poly = if ideal.is_zero() {
                return Err(Error::ZeroIdeal);
            } else {
                NewtonPolyhedron::from_generators(ideal.generators())?
            };
            let mut text = String::new();
            for facet in poly.facets() {
                writeln!(text, "{}", facet.render(ideal.variables())).expect("writing to a string");
            }
            Ok(report(
                "newton",
                ideal_inputs(&ideal),
                json!({
                    "facets": poly.facets().iter().map(facet_json).collect::<Vec<_>>(),
                }),
                text,
                started,
            ))
        }
        Command::DetLct { shape } => {
            let shape = load_shape(shape)?;
            let value = shape.lct();
            Ok(report(
                "det-lct",
                shape_inputs(&shape),
                json!({ "lct": value.to_string() }),
                format!("{}\n", value),
                started,
            ))
        }
        Command::DetMult { shape, exponent } => {
            let shape = load_shape(shape)?;
            let c = parse_rational(exponent)?;
            let intersection = shape.multiplier_ideal(&c)?;
            let mut inputs = shape_inputs(&shape);
            add_input(&mut inputs, "c", json!(c.to_string()));
            let mut text = format!("{}\n", intersection);
            if let Some(note) = intersection.containment_annotation() {
                writeln!(text, "note: {}", note).expect("writing to a string");
            }
            Ok(report(
                "det-mult",
                inputs,
                json!({
                    "factors": intersection
                        .factors()
                        .iter()
                        .map(|f| json!({
                            "minor_size": f.minor_size,
                            "exponent": f.exponent.to_string(),
                        }))
                        .collect::<Vec<_>>(),
                    "annotation": intersection.containment_annotation(),
                }),
                text,
                started,
            ))
        }
        Command::DetJump { shape, interval } => {
            let shape = load_shape(shape)?;
            let default_hi = shape.lct() + rational_int(1);
            let interval = parse_interval(interval, default_hi)?;
            let candidates = shape.jumping_candidates(&interval);
            let mut text = String::new();
            for candidate in &candidates {
                let increments: Vec<String> =
                    candidate.increments.iter().map(|i| i.to_string()).collect();
                writeln!(text, "{}: i = {}", candidate.value, increments.join(", "))
                    .expect("writing to a string");
            }
            let mut inputs = shape_inputs(&shape);
            add_input(&mut inputs, "interval", json!(interval.to_string()));
            Ok(report(
                "det-jump",
                inputs,
                json!({
                    "candidates": candidates
                        .iter()
                        .map(|c| json!({
                            "value": c.value.to_string(),
                            "increments": c.increments,
                        }))
                        .collect::<Vec<_>>(),
                }),
                text,
                started,
            ))
        }
        Command::DetExpand {
            rows,
            cols,
            minor_size,
            power,
        } => {
            let shape = DeterminantalShape::new(*rows, *cols, *minor_size)?;
            let expansion = shape.symbolic_power_expansion(*minor_size, *power)?;
            Ok(report(
                "det-expand",
                json!({
                    "m": rows,
                    "n": cols,
                    "i": minor_size,
                    "a": power,
                }),
                json!({ "terms": expansion.terms }),
                format!("{}\n", expansion),
                started,
            ))
        }
        Command::DetMinors { shape } => {
            let shape = load_shape(shape)?;
            let names = shape.variable_names();
            let minors = shape.minor_generators();
            let mut text = String::new();
            for minor in &minors {
                let rows: Vec<String> = minor.row_indices.iter().map(|i| i.to_string()).collect();
                let cols: Vec<String> = minor.col_indices.iter().map(|j| j.to_string()).collect();
                writeln!(
                    text,
                    "rows {{{}}} cols {{{}}}: {}",
                    rows.join(","),
                    cols.join(","),
                    minor.render(&names)
                )
                .expect("writing to a string");
            }
            Ok(report(
                "det-minors",
                shape_inputs(&shape),
                json!({
                    "minors": minors
                        .iter()
                        .map(|minor| json!({
                            "rows": minor.row_indices,
                            "cols": minor.col_indices,
                            "terms": minor
                                .terms
                                .iter()
                                .map(|(sign, monomial)| json!({
                                    "sign": sign,
                                    "monomial": crate::ideal::monomial_string(&names, monomial),
                                }))
                                .collect::<Vec<_>>(),
                        }))
                        .collect::<Vec<_>>(),
                }),
                text,
                started,
            ))
        }
    }
}

fn report(
    command: &'static str,
    inputs: Value,
    results: Value,
    text: String,
    started: Instant,
) -> Report {
    Report {
        command,
        inputs,
        results,
        text,
        elapsed: started.elapsed(),
    }
}

fn add_input(inputs: &mut Value, key: &str, value: Value) {
    inputs
        .as_object_mut()
        .expect("inputs are an object")
        .insert(key.to_string(), value);
}

fn ideal_inputs(ideal: &MonomialIdeal) -> Value {
    json!({
        "vars": ideal.variables(),
        "gens": ideal.generator_strings(),
    })
}

fn shape_inputs(shape: &DeterminantalShape) -> Value {
    json!({
        "m": shape.rows(),
        "n": shape.cols(),
        "r": shape.minor_size(),
    })
}

fn facet_json(facet: &Facet) -> Value {
    json!({
        "normal": facet
            .normal()
            .iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>(),
        "offset": facet.offset().to_string(),
    })
}

fn load_ideal(args: &IdealArgs) -> Result<MonomialIdeal> {
    let document = match (&args.ideal, &args.vars, &args.gens) {
        (Some(path), None, None) => {
            let raw = std::fs::read_to_string(path)
                .map_err(|err| Error::Parse(format!("cannot read {}: {}", path.display(), err)))?;
            serde_json::from_str::<IdealDocument>(&raw).map_err(|err| {
                Error::Parse(format!(
                    "{} is not a valid ideal document: {}",
                    path.display(),
                    err
                ))
            })?
        }
        (None, Some(vars), Some(gens)) => IdealDocument {
            vars: split_list(vars),
            gens: split_list(gens),
        },
        _ => {
            return Err(Error::Parse(
                "provide either --ideal FILE or both --vars and --gens".into(),
            ))
        }
    };
    if document.vars.is_empty() {
        return Err(Error::Parse("the variable list is empty".into()));
    }
    let vars: Vec<&str> = document.vars.iter().map(String::as_str).collect();
    let gens: Vec<&str> = document.gens.iter().map(String::as_str).collect();
    MonomialIdeal::parse(&vars, &gens)
}

fn split_list(raw: &str) -> Vec<String> {
    raw.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect()
}

fn load_shape(args: &ShapeArgs) -> Result<DeterminantalShape> {
    DeterminantalShape::new(args.rows, args.cols, args.minor_size)
}

fn parse_interval(args: &IntervalArgs, default_hi: Rational) -> Result<Interval> {
    let (lo, hi) = match &args.interval {
        None => (Rational::zero(), default_hi),
        Some(raw) => {
            let (lo, hi) = raw.split_once("..").ok_or_else(|| {
                Error::Parse(format!("`{}` is not an interval (use LO..HI)", raw))
            })?;
            (parse_rational(lo)?, parse_rational(hi)?)
        }
    };
    let lo_open = !args.lo_closed;
    let hi_open = args.hi_open;
    Interval::new(lo, hi, lo_open, hi_open)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> RunOutput {
        run(args.iter().copied())
    }

    #[test]
    fn inline_lct() {
        let out = run_args(&[
            "multiplier-ideals",
            "lct",
            "--vars",
            "x,y,z,w",
            "--gens",
            "x*y,x*z,y*z,y*w,z*w^2",
        ]);
        assert_eq!(out.exit_code, 0, "stderr: {}", out.stderr);
        assert_eq!(out.stdout, "2\n");
    }

    #[test]
    fn missing_ideal_is_a_usage_error() {
        let out = run_args(&["multiplier-ideals", "lct"]);
        assert_eq!(out.exit_code, 2);
        assert!(out.stderr.contains("--ideal"));
    }

    #[test]
    fn unknown_subcommand_is_a_usage_error() {
        let out = run_args(&["multiplier-ideals", "frobnicate"]);
        assert_eq!(out.exit_code, 2);
    }

    #[test]
    fn domain_error_exits_one() {
        let out = run_args(&[
            "multiplier-ideals",
            "mult",
            "--vars",
            "x,y",
            "--gens",
            "x,y",
            "-c",
            "-2",
        ]);
        assert_eq!(out.exit_code, 1);
        assert!(out.stderr.contains("nonnegative"));
    }

    #[test]
    fn parse_error_exits_two() {
        let out = run_args(&["multiplier-ideals", "lct", "--vars", "x,y", "--gens", "x*q"]);
        assert_eq!(out.exit_code, 2);
        assert!(out.stderr.contains("`q`"));
    }
}
