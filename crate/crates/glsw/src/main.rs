//! `glsw`: batch front end for the affine GLS toolkit.

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gls_core::catalog::by_name;
use gls_core::decomposition::folded_decomposition;
use gls_core::roots::{extending_data, root_system};
use gls_core::stability::{defect_weight, Caps};
use gls_core::suites::{run_suite, SuiteConfig, SUITES};
use gls_core::CoreError;

const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Parser)]
#[command(
    name = "glsw",
    version,
    about = "Affine GLS algebras: catalog, decompositions and verification suites"
)]
struct Cli {
    /// Master seed for every random stream.
    #[arg(long, global = true, env = "GLSW_SEED", default_value_t = 0)]
    seed: u64,
    /// Primes for finite-field stability checks.
    #[arg(long, global = true, value_delimiter = ',', default_value = "3,5,7")]
    primes: Vec<u32>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Submodule enumeration limits, e.g. dim=8,enum=1000000.
    #[arg(long, global = true, value_parser = parse_caps, default_value = "dim=8,enum=1000000")]
    caps: Caps,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Quiver and root-system data of a catalog family, e.g. BC1, C2, E8.
    Catalog { family: String },
    /// Folded canonical decomposition of a rank vector.
    Decompose {
        family: String,
        #[arg(short = 'v', long = "vector", value_delimiter = ',', allow_hyphen_values = true)]
        v: Vec<i64>,
    },
    /// Run a named verification suite.
    Verify { suite: String },
}

fn parse_caps(s: &str) -> Result<Caps, String> {
    let mut caps = Caps::default();
    for part in s.split(',').filter(|p| !p.is_empty()) {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| format!("expected key=value, got {part}"))?;
        let n: usize = value.parse().map_err(|e| format!("{key}: {e}"))?;
        match key {
            "dim" => caps.dim = n,
            "enum" => caps.enumeration = n,
            _ => return Err(format!("unknown cap {key}")),
        }
    }
    Ok(caps)
}

/// Outcome of one command: the report plus the exit code.
struct Outcome {
    report: Value,
    code: u8,
}

fn usage_error(e: &CoreError) -> bool {
    matches!(
        e,
        CoreError::UnknownFamily(_) | CoreError::RankOutOfRange { .. } | CoreError::Parse(_)
    )
}

fn error_outcome(e: CoreError, extra: Value) -> Outcome {
    let code = if usage_error(&e) {
        2
    } else if matches!(e, CoreError::Certification(_)) {
        3
    } else {
        1
    };
    let mut report = json!({ "error": e.to_string() });
    if let (Value::Object(r), Value::Object(x)) = (&mut report, extra) {
        r.extend(x);
    }
    Outcome { report, code }
}

fn catalog(family: &str) -> Result<Value, CoreError> {
    let e = by_name(family)?;
    let q = &e.quiver;
    let roots = root_system(&e)?;
    let defect = defect_weight(q)?;
    let extending = extending_data(&e).ok().map(|x| x.display());
    Ok(json!({
        "family": e.name(),
        "rank": e.rank,
        "quiver": q.to_json(),
        "null_root": roots.null_root,
        "tier": e.tier,
        "computed_tier": roots.computed_tier,
        "defect": defect.integer_coords(),
        "defect_on_ranks": roots.defect,
        "coxeter": q.coxeter_transformation(),
        "tubes": roots.tubes,
        "extending_vertex": e.extending_vertex,
        "extending_type": extending,
    }))
}

fn decompose(family: &str, v: &[i64], seed: u64) -> Outcome {
    let entry = match by_name(family) {
        Ok(e) => e,
        Err(e) => return error_outcome(e, json!({})),
    };
    match folded_decomposition(&entry, v, seed) {
        Ok(r) => match r.check(&entry.quiver) {
            Ok(()) => Outcome {
                report: serde_json::to_value(&r).expect("serializable"),
                code: 0,
            },
            Err(why) => error_outcome(CoreError::Certification(why), json!({ "seeds": r.seeds })),
        },
        Err(e) => error_outcome(e, json!({ "seeds": [seed] })),
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Catalog { family } => match catalog(family) {
            Ok(report) => Outcome { report, code: 0 },
            Err(e) => error_outcome(e, json!({ "family": family })),
        },
        Command::Decompose { family, v } => decompose(family, v, cli.seed),
        Command::Verify { suite } => {
            let cfg = SuiteConfig {
                seed: cli.seed,
                primes: cli.primes.clone(),
                caps: cli.caps,
            };
            match run_suite(suite, &cfg) {
                Some(r) => Outcome {
                    code: if r.passed { 0 } else { 1 },
                    report: serde_json::to_value(&r).expect("serializable"),
                },
                None => Outcome {
                    report: json!({ "error": format!("unknown suite {suite}"), "suites": SUITES }),
                    code: 2,
                },
            }
        }
    }
}

fn tsv(report: &Value) -> String {
    let mut out = String::new();
    if let Some(checks) = report.get("checks").and_then(Value::as_array) {
        for c in checks {
            let verdict = if c["passed"].as_bool() == Some(true) {
                "pass"
            } else {
                "fail"
            };
            out.push_str(&format!(
                "{}\t{}\t{}\n",
                c["criterion"],
                c["name"].as_str().unwrap_or(""),
                verdict
            ));
        }
        return out;
    }
    if let Some(map) = report.as_object() {
        for (k, v) in map {
            out.push_str(&format!("{k}\t{v}\n"));
        }
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let Outcome { report, code } = run(&cli);
    let mut report = report;
    if let Value::Object(map) = &mut report {
        map.insert("schema".into(), json!(SCHEMA));
    }
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("serializable") + "\n",
        Format::Tsv => tsv(&report),
    };
    // A closed pipe on stdout is not an error worth reporting.
    let _ = std::io::stdout().write_all(text.as_bytes());
    eprintln!("glsw: exit {code} after {:.2} s", start.elapsed().as_secs_f64());
    ExitCode::from(code)
}
