//! The `ncx` command line.
//!
//! Exit codes: 0 success, 1 an identity check failed (the counterexample is
//! printed as re-parsable input), 2 parse or usage error, 3 degenerate input.

pub mod json;
pub mod parse;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use ncx_core::crossratio::{
    all_24, chain_product, cocycle_checks, find_conjugator, orbit_witness, permutation_relations, FourTuple,
    IdentityCheck, OrbitWitness, Report,
};
use ncx_core::verify::{self, SuiteConfig, SuiteOutcome};
use ncx_core::{cross_ratio, qp, quasidet, BoxPosition, Error, QPIndex, Quaternion, Vec2};
use serde_json::{json, Value};

use parse::ParseError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IDENTITY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "ncx",
    version,
    about = "Exact noncommutative cross-ratios over the rational quaternions"
)]
struct Cli {
    /// Structured output: quaternions as four [numerator, denominator] pairs.
    #[arg(long, global = true)]
    json: bool,
    /// Read further input values from a file, one per line.
    #[arg(long, global = true, value_name = "PATH")]
    file: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Quasideterminant of a 2x2 matrix at a boxed entry.
    Quasidet {
        #[arg(long, allow_hyphen_values = true)]
        matrix: Option<String>,
        #[arg(long)]
        row: usize,
        #[arg(long)]
        col: usize,
    },
    /// Quasi-Plücker coordinate q^k_{ij} of a 2xn matrix (1-based columns).
    Qplucker {
        #[arg(long, allow_hyphen_values = true)]
        matrix: Option<String>,
        #[arg(short = 'i')]
        i: usize,
        #[arg(short = 'j')]
        j: usize,
        #[arg(short = 'k')]
        k: usize,
    },
    /// Cross-ratio of four vectors x y z t.
    CrossRatio { vectors: Vec<String> },
    /// Cocycle and flip identities for vectors x y z t w.
    Cocycle { vectors: Vec<String> },
    /// Telescoping product over a chain of points.
    Chain {
        points: Vec<String>,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
    },
    /// Permutation relations and the cross-ratios of all 24 orderings.
    Perms { vectors: Vec<String> },
    /// Decide whether two tuples (2x4 matrices) share an orbit.
    OrbitCheck {
        tuples: Vec<String>,
        /// Conjugator with kappa(T) = mu kappa(T') mu^-1; searched for if omitted.
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
    },
    /// Run seeded verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        bound: u32,
    },
}

enum Failure {
    Usage(String),
    Parse { input: String, error: ParseError },
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Outcome = Result<i32, Failure>;

struct Ctx<'a> {
    json: bool,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn line(&mut self, s: impl AsRef<str>) {
        let _ = writeln!(self.out, "{}", s.as_ref());
    }

    fn emit(&mut self, v: Value) {
        let _ = writeln!(self.out, "{v}");
    }
}

fn parsed<T>(input: &str, f: fn(&str) -> Result<T, ParseError>) -> Result<T, Failure> {
    f(input).map_err(|error| Failure::Parse {
        input: input.to_string(),
        error,
    })
}

fn vectors(inputs: &[String], expected: Option<usize>) -> Result<Vec<Vec2<Quaternion>>, Failure> {
    if let Some(n) = expected {
        if inputs.len() != n {
            return Err(Failure::Usage(format!("expected {n} vectors, got {}", inputs.len())));
        }
    }
    inputs.iter().map(|s| parsed(s, parse::parse_vector)).collect()
}

fn quoted(values: impl IntoIterator<Item = String>) -> String {
    values
        .into_iter()
        .map(|v| format!("\"{v}\""))
        .collect::<Vec<_>>()
        .join(" ")
}

fn check_json(c: &IdentityCheck<Quaternion>) -> Value {
    json!({
        "identity": c.name,
        "lhs": json::quat(&c.lhs),
        "rhs": json::quat(&c.rhs),
        "status": json::status(c.holds()),
    })
}

/// Prints a report; failures come with the command that reproduces them.
fn report(ctx: &mut Ctx, command: &str, reproduce: String, report: &Report<Quaternion>, extra: Option<Value>) -> i32 {
    let ok = report.all_hold();
    if ctx.json {
        let mut v = json!({
            "command": command,
            "status": json::status(ok),
            "checks": report.checks.iter().map(check_json).collect::<Vec<_>>(),
        });
        if let Some(extra) = extra {
            v["table"] = extra;
        }
        if !ok {
            v["counterexample"] = json!(format!("ncx {command} {reproduce}"));
        }
        ctx.emit(v);
    } else {
        for c in &report.checks {
            if c.holds() {
                ctx.line(format!("holds  {}  [{}]", c.name, c.lhs));
            } else {
                ctx.line(format!("FAILS  {}  [{} != {}]", c.name, c.lhs, c.rhs));
            }
        }
        if !ok {
            ctx.line(format!("counterexample: ncx {command} {reproduce}"));
        }
    }
    if ok {
        EXIT_OK
    } else {
        EXIT_IDENTITY_FAILED
    }
}

fn single_value(ctx: &mut Ctx, command: &str, value: &Quaternion) -> i32 {
    if ctx.json {
        ctx.emit(json!({"command": command, "value": json::quat(value)}));
    } else {
        ctx.line(value.to_string());
    }
    EXIT_OK
}

fn matrix_input(flag: Option<String>, extra: &mut Vec<String>) -> Result<String, Failure> {
    match flag {
        Some(m) => Ok(m),
        None if !extra.is_empty() => Ok(extra.remove(0)),
        None => Err(Failure::Usage("missing --matrix".into())),
    }
}

fn one_based(n: usize, what: &str) -> Result<usize, Failure> {
    n.checked_sub(1)
        .ok_or_else(|| Failure::Usage(format!("{what} is 1-based; got 0")))
}

fn witness_lines(ctx: &mut Ctx, w: &OrbitWitness<Quaternion>, k1: &Quaternion, k2: &Quaternion) {
    if ctx.json {
        ctx.emit(json!({
            "command": "orbit-check",
            "result": "same_orbit",
            "kappa": [json::quat(k1), json::quat(k2)],
            "mu": json::quat(&w.mu),
            "g": json::mat2(&w.g),
            "lambdas": w.lambdas.iter().map(json::quat).collect::<Vec<_>>(),
        }));
    } else {
        ctx.line("same orbit");
        ctx.line(format!("kappa  = {k1}"));
        ctx.line(format!("kappa' = {k2}"));
        ctx.line(format!("mu     = {}", w.mu));
        ctx.line(format!("g      = {}", w.g));
        for (n, l) in w.lambdas.iter().enumerate() {
            ctx.line(format!("lambda{} = {l}", n + 1));
        }
    }
}

fn different_orbits(ctx: &mut Ctx, reason: &str, k1: &Quaternion, k2: &Quaternion) -> i32 {
    if ctx.json {
        ctx.emit(json!({
            "command": "orbit-check",
            "result": "different_orbits",
            "reason": reason,
            "kappa": [json::quat(k1), json::quat(k2)],
        }));
    } else {
        ctx.line(format!("different orbits: {reason}"));
        ctx.line(format!("kappa  = {k1}"));
        ctx.line(format!("kappa' = {k2}"));
    }
    EXIT_OK
}

fn verify_table(ctx: &mut Ctx, outcomes: &[SuiteOutcome], cfg: &SuiteConfig) -> i32 {
    let ok = outcomes.iter().all(SuiteOutcome::ok);
    if ctx.json {
        let rows: Vec<Value> = outcomes
            .iter()
            .map(|o| {
                let mut v = json!({
                    "suite": o.suite,
                    "instance": o.instance,
                    "trials": o.trials,
                    "passed": o.passed,
                    "resamples": o.resamples,
                    "status": if o.ok() { "pass" } else { "fail" },
                });
                if let Some(f) = &o.failure {
                    v["counterexample"] = json!(f);
                }
                v
            })
            .collect();
        ctx.emit(json!({
            "command": "verify",
            "seed": cfg.seed,
            "bound": cfg.bound,
            "trials": cfg.trials,
            "status": if ok { "pass" } else { "fail" },
            "suites": rows,
        }));
    } else {
        ctx.line(format!("seed {}  bound {}  trials {}", cfg.seed, cfg.bound, cfg.trials));
        ctx.line(format!(
            "{:<20} {:<10} {:>9} {:>9} {:>9}  status",
            "suite", "instance", "passed", "trials", "resamples"
        ));
        for o in outcomes {
            ctx.line(format!(
                "{:<20} {:<10} {:>9} {:>9} {:>9}  {}",
                o.suite,
                o.instance,
                o.passed,
                o.trials,
                o.resamples,
                if o.ok() { "pass" } else { "FAIL" }
            ));
        }
        for o in outcomes {
            if let Some(f) = &o.failure {
                ctx.line(format!("counterexample [{} / {}] {f}", o.suite, o.instance));
            }
        }
    }
    if ok {
        EXIT_OK
    } else {
        EXIT_IDENTITY_FAILED
    }
}

fn dispatch(command: Command, mut extra: Vec<String>, ctx: &mut Ctx) -> Outcome {
    match command {
        Command::Quasidet { matrix, row, col } => {
            let m = parsed(&matrix_input(matrix, &mut extra)?, parse::parse_mat2)?;
            let pos = BoxPosition::new(row, col)?;
            Ok(single_value(ctx, "quasidet", &quasidet(&m, pos)?))
        }
        Command::Qplucker { matrix, i, j, k } => {
            let m = parsed(&matrix_input(matrix, &mut extra)?, parse::parse_matrix)?;
            let idx = QPIndex::new(one_based(i, "-i")?, one_based(j, "-j")?, one_based(k, "-k")?)?;
            Ok(single_value(ctx, "qplucker", &qp(&m, idx)?))
        }
        Command::CrossRatio { vectors: mut inputs } => {
            inputs.append(&mut extra);
            let v = vectors(&inputs, Some(4))?;
            let t = FourTuple::from_array(v.try_into().expect("four vectors"));
            t.check_zt_independent()?;
            Ok(single_value(ctx, "cross-ratio", &cross_ratio(&t)?))
        }
        Command::Cocycle { vectors: mut inputs } => {
            inputs.append(&mut extra);
            let v = vectors(&inputs, Some(5))?;
            let r = cocycle_checks(&v[0], &v[1], &v[2], &v[3], &v[4])?;
            let reproduce = quoted(v.iter().map(ToString::to_string));
            Ok(report(ctx, "cocycle", reproduce, &r, None))
        }
        Command::Chain {
            points: mut inputs,
            z,
            t,
        } => {
            inputs.append(&mut extra);
            let points = vectors(&inputs, None)?;
            if points.len() < 2 {
                return Err(Failure::Usage("chain needs at least 2 points".into()));
            }
            let z = parsed(&z, parse::parse_vector)?;
            let t = parsed(&t, parse::parse_vector)?;
            let r = chain_product(&points, &z, &t)?;
            let reproduce = format!(
                "{} --z \"{z}\" --t \"{t}\"",
                quoted(points.iter().map(ToString::to_string))
            );
            Ok(report(ctx, "chain", reproduce, &r, None))
        }
        Command::Perms { vectors: mut inputs } => {
            inputs.append(&mut extra);
            let v = vectors(&inputs, Some(4))?;
            let t = FourTuple::from_array(v.try_into().expect("four vectors"));
            let r = permutation_relations(&t)?;
            let table = all_24(&t);
            let reproduce = quoted(t.vectors().map(ToString::to_string));
            if ctx.json {
                let rows: Vec<Value> = table
                    .iter()
                    .map(|(p, k)| match k {
                        Ok(k) => json!({"order": p.to_string(), "kappa": json::quat(k)}),
                        Err(e) => json!({"order": p.to_string(), "undefined": json::error(e)}),
                    })
                    .collect();
                Ok(report(ctx, "perms", reproduce, &r, Some(Value::Array(rows))))
            } else {
                let code = report(ctx, "perms", reproduce, &r, None);
                for (p, k) in &table {
                    match k {
                        Ok(k) => ctx.line(format!("k{p} = {k}")),
                        Err(e) => ctx.line(format!("k{p} undefined: {e}")),
                    }
                }
                Ok(code)
            }
        }
        Command::OrbitCheck { tuples: mut inputs, mu } => {
            inputs.append(&mut extra);
            if inputs.len() != 2 {
                return Err(Failure::Usage(format!("expected 2 tuples, got {}", inputs.len())));
            }
            let first = parsed(&inputs[0], parse::parse_tuple)?;
            let second = parsed(&inputs[1], parse::parse_tuple)?;
            let k1 = cross_ratio(&first)?;
            let k2 = cross_ratio(&second)?;
            let mu = match mu {
                Some(m) => parsed(&m, parse::parse_quat)?,
                None => match find_conjugator(&k1, &k2) {
                    Some(mu) => mu,
                    None => return Ok(different_orbits(ctx, "the cross-ratios are not conjugate", &k1, &k2)),
                },
            };
            match orbit_witness(&first, &second, &mu) {
                Ok(w) => {
                    witness_lines(ctx, &w, &k1, &k2);
                    Ok(EXIT_OK)
                }
                Err(Error::NotConjugate(_)) => {
                    let reason = format!("mu = {mu} does not conjugate kappa' to kappa");
                    Ok(different_orbits(ctx, &reason, &k1, &k2))
                }
                Err(Error::WitnessInvalid(why)) => {
                    let msg = format!(
                        "witness failed: {why}\ncounterexample: ncx orbit-check \"{first}\" \"{second}\" --mu \"{mu}\""
                    );
                    if ctx.json {
                        ctx.emit(json!({"command": "orbit-check", "status": "fails", "message": msg}));
                    } else {
                        ctx.line(msg);
                    }
                    Ok(EXIT_IDENTITY_FAILED)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Verify {
            suite,
            trials,
            seed,
            bound,
        } => {
            let cfg = SuiteConfig { seed, bound, trials };
            let outcomes = verify::run(&suite, &cfg).map_err(|_| {
                Failure::Usage(format!(
                    "unknown suite {suite:?}; expected all or one of {}",
                    verify::SUITES.join(", ")
                ))
            })?;
            Ok(verify_table(ctx, &outcomes, &cfg))
        }
    }
}

fn read_file(path: &PathBuf) -> Result<Vec<String>, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(String::from)
        .collect())
}

fn report_failure(f: Failure, json_mode: bool, err: &mut dyn Write) -> i32 {
    let (code, value, text) = match f {
        Failure::Usage(msg) => (
            EXIT_USAGE,
            json!({"error": "usage", "message": msg}),
            format!("error: {msg}"),
        ),
        Failure::Parse { input, error } => (
            EXIT_USAGE,
            json!({
                "error": "parse",
                "input": input,
                "position": error.position,
                "expected": error.expected,
                "message": error.to_string(),
            }),
            format!("parse error {}", error.diagnostic(&input)),
        ),
        Failure::Core(e) => {
            let code = if e.is_irregular() { EXIT_DEGENERATE } else { EXIT_USAGE };
            let v = json::error(&e);
            let mut text = format!(
                "error: {}",
                if code == EXIT_DEGENERATE {
                    "degenerate input"
                } else {
                    "invalid input"
                }
            );
            text.push_str(&format!("\n  kind: {}", json::error_kind(&e)));
            if let Some(op) = v.get("operation").and_then(Value::as_str) {
                text.push_str(&format!("\n  operation: {op}"));
            }
            if let Some(factor) = v.get("factor").and_then(Value::as_str) {
                text.push_str(&format!("\n  factor: {factor}"));
            }
            if let Some(b) = v.get("box") {
                text.push_str(&format!("\n  box: ({},{})", b[0], b[1]));
            }
            text.push_str(&format!("\n  message: {e}"));
            (code, v, text)
        }
    };
    if json_mode {
        let _ = writeln!(err, "{value}");
    } else {
        let _ = writeln!(err, "{text}");
    }
    code
}

/// Runs one command line (including the program name) and returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    let json_mode = cli.json;
    let extra = match cli.file.as_ref().map(read_file).transpose() {
        Ok(v) => v.unwrap_or_default(),
        Err(f) => return report_failure(f, json_mode, err),
    };
    let mut ctx = Ctx { json: json_mode, out };
    match dispatch(cli.command, extra, &mut ctx) {
        Ok(code) => code,
        Err(f) => report_failure(f, json_mode, err),
    }
}
