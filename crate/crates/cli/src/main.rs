//! `qschur`: products, expansions and verification suites, JSON in and out.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qschur::blm::{delta_reduce, realize, symbolic_product, SymbolicElement};
use qschur::schur::{ProductEngine, ProductMode};
use qschur::uqgl::{pbw_symbolic, zeta_symbolic, GeneratorWord, PBWIndex};
use qschur::verify::{run_suite, RunConfig, Suite};
use qschur::{Error, SchurElement};

#[derive(Parser)]
#[command(
    name = "qschur",
    version,
    about = "Exact computations in q-Schur algebras and their quantum gl_n realization"
)]
struct Cli {
    #[command(flatten)]
    config: ConfigArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ConfigArgs {
    /// Rank n of gl_n.
    #[arg(long, global = true, default_value_t = 2)]
    n: usize,
    /// Largest degree r kept in truncated products.
    #[arg(long = "rmax", global = true, default_value_t = 4)]
    r_max: usize,
    /// Largest degree r the Hecke-algebra oracle accepts.
    #[arg(long, global = true, default_value_t = qschur::hecke::DEFAULT_ORACLE_CAP)]
    oracle_cap: usize,
    /// Seed for randomized instances.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Odd order l of the root of unity.
    #[arg(long, global = true)]
    l: Option<u32>,
    /// Size bound for enumerated families.
    #[arg(long, global = true, default_value_t = 2)]
    bound: i64,
    /// Number of seeded random instances per randomized check.
    #[arg(long, global = true, default_value_t = 200)]
    random: usize,
    /// Include wall time in reports.
    #[arg(long, global = true)]
    timing: bool,
    #[arg(long, global = true, hide = true)]
    corrupt: bool,
}

impl ConfigArgs {
    fn run_config(&self) -> RunConfig {
        RunConfig {
            n: self.n,
            r_max: self.r_max,
            oracle_cap: self.oracle_cap,
            bound: self.bound,
            seed: self.seed,
            l: self.l,
            random: self.random,
            corrupt: self.corrupt,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Formula,
    Oracle,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Multiplies two elements of S(n,r) (JSON objects) or of V(n) (JSON lists).
    Multiply {
        /// Left factor as JSON, or @path to read it from a file.
        #[arg(long)]
        left: String,
        /// Right factor as JSON, or @path.
        #[arg(long)]
        right: String,
        #[arg(long, value_enum, default_value_t = Mode::Both)]
        mode: Mode,
    },
    /// Expands a generator word such as "E1^(2) K2 F1", or a PBW index, in V(n).
    Expand {
        /// Generator word, 1-based.
        #[arg(conflicts_with = "pbw", required_unless_present = "pbw")]
        word: Option<String>,
        /// PBW index {"A": .., "delta": .., "lambda": ..} as JSON, or @path.
        #[arg(long)]
        pbw: Option<String>,
    },
    /// Runs a verification suite and prints its report.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
        format!("unknown suite `{s}`; expected one of {}", names.join(", "))
    })
}

/// Exit status for a library error.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::Domain(_) => 2,
        Error::Dimension { .. } => 3,
        Error::Resource { .. } => 4,
        Error::Internal(_) => 1,
    }
}

fn read_json(arg: &str) -> Result<Value, Error> {
    let text = match arg.strip_prefix('@') {
        Some(path) => {
            std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?
        }
        None => arg.to_owned(),
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))
}

fn decode<T: serde::de::DeserializeOwned>(v: Value) -> Result<T, Error> {
    serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))
}

fn to_json<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn multiply(cfg: &ConfigArgs, left: &str, right: &str, mode: Mode) -> Result<(Value, bool), Error> {
    let (l, r) = (read_json(left)?, read_json(right)?);
    let formula_engine = ProductEngine::new(ProductMode::Formula, cfg.oracle_cap);
    let oracle_engine = ProductEngine::new(ProductMode::Oracle, cfg.oracle_cap);
    match (&l, &r) {
        (Value::Object(_), Value::Object(_)) => {
            let (x, y): (SchurElement, SchurElement) = (decode(l)?, decode(r)?);
            let formula = (mode != Mode::Oracle)
                .then(|| formula_engine.product(&x, &y))
                .transpose()?;
            let oracle = (mode != Mode::Formula)
                .then(|| oracle_engine.product(&x, &y))
                .transpose()?;
            Ok(report(
                "schur",
                formula.as_ref().map(to_json),
                oracle.as_ref().map(to_json),
                formula.zip(oracle).map(|(f, o)| f == o),
            ))
        }
        (Value::Array(_), Value::Array(_)) => {
            let (x, y): (SymbolicElement, SymbolicElement) = (decode(l)?, decode(r)?);
            let n = if x.is_empty() { y.n() } else { x.n() };
            if !y.is_empty() && y.n() != n {
                return Err(Error::Dimension {
                    expected: n,
                    found: y.n(),
                });
            }
            let (x, y) = (pad(x, n), pad(y, n));
            let formula = (mode != Mode::Oracle)
                .then(|| symbolic_product(&x, &y).map(|p| delta_reduce(&p)))
                .transpose()?;
            let oracle = if mode == Mode::Formula {
                None
            } else {
                Some(realize(&x, cfg.r_max)?.product(&realize(&y, cfg.r_max)?, &oracle_engine)?)
            };
            let equal = match (&formula, &oracle) {
                (Some(f), Some(o)) => Some(&realize(f, cfg.r_max)? == o),
                _ => None,
            };
            Ok(report(
                "realization",
                formula.as_ref().map(to_json),
                oracle.as_ref().map(to_json),
                equal,
            ))
        }
        _ => Err(Error::Parse(
            "factors must both be S(n,r) objects or both be V(n) lists".into(),
        )),
    }
}

/// An empty list carries no rank; give it the other factor's.
fn pad(x: SymbolicElement, n: usize) -> SymbolicElement {
    if x.is_empty() {
        SymbolicElement::zero(n)
    } else {
        x
    }
}

fn report(
    kind: &str,
    formula: Option<Value>,
    oracle: Option<Value>,
    equal: Option<bool>,
) -> (Value, bool) {
    let mut out = json!({ "kind": kind });
    if let Some(f) = formula {
        out["formula"] = f;
    }
    if let Some(o) = oracle {
        out["oracle"] = o;
    }
    if let Some(e) = equal {
        out["equal"] = json!(e);
    }
    (out, equal != Some(false))
}

fn expand(cfg: &ConfigArgs, word: Option<&str>, pbw: Option<&str>) -> Result<Value, Error> {
    let x = match (word, pbw) {
        (Some(w), _) => zeta_symbolic(&w.parse::<GeneratorWord>()?, cfg.n)?,
        (None, Some(p)) => pbw_symbolic(&decode::<PBWIndex>(read_json(p)?)?)?,
        (None, None) => unreachable!("clap requires a word or --pbw"),
    };
    Ok(to_json(&x))
}

fn run(cli: &Cli) -> Result<bool, Error> {
    let cfg = &cli.config;
    let (out, passed) = match &cli.command {
        Command::Multiply { left, right, mode } => {
            let (out, passed) = multiply(cfg, left, right, *mode)?;
            eprintln!(
                "multiply: {}",
                if passed {
                    "ok"
                } else {
                    "formula and oracle products differ"
                }
            );
            (out, passed)
        }
        Command::Expand { word, pbw } => {
            let out = expand(cfg, word.as_deref(), pbw.as_deref())?;
            eprintln!("expand: {} terms", out.as_array().map_or(0, Vec::len));
            (out, true)
        }
        Command::Verify { suite } => {
            let start = Instant::now();
            let rep = run_suite(*suite, &cfg.run_config(), cfg.timing)?;
            eprintln!(
                "verify {}: {} ({} instances, {} failures)",
                suite,
                if rep.passed { "PASS" } else { "FAIL" },
                rep.instances,
                rep.failure_count
            );
            eprintln!("wall time: {} ms", start.elapsed().as_millis());
            (to_json(&rep), rep.passed)
        }
    };
    println!("{}", serde_json::to_string(&out).expect("serializable"));
    Ok(passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(t) = std::env::var("QSCHUR_THREADS") {
        match t.parse::<usize>() {
            Ok(k) if k > 0 => {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(k)
                    .build_global()
                    .expect("pool is built once");
            }
            _ => {
                eprintln!("error: QSCHUR_THREADS must be a positive integer, got `{t}`");
                return ExitCode::from(2);
            }
        }
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
