use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use narayana_core::arith::{parse_rat, render_rat};
use narayana_core::identities::{run_suite, Status, DEFAULT_SEED};
use narayana_core::lambda::{hall_littlewood_principal, sfraction};
use narayana_core::sequences::{narayana_alphabet, SequenceName};
use narayana_core::{dsl, Error, PolyQQ, Rat};
use serde_json::{json, Value};

const POLY_TABLE_CAP: usize = 200;
const INT_TABLE_CAP: usize = 5000;
const CF_CAP: usize = 20;
const HL_CAP: usize = 30;

#[derive(Parser)]
#[command(name = "narayana-lab", version, about = "Exact Narayana and λ-ring calculations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a bracket query such as "h3[4]" or "P{3,4}".
    Eval {
        expr: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print rows 0..=max-n of a named sequence.
    Table {
        name: String,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Evaluate each row at this rational value of q.
        #[arg(long, allow_hyphen_values = true)]
        at_q: Option<String>,
    },
    /// Run the identity suite and write a report.
    Verify {
        #[arg(long = "id")]
        ids: Vec<String>,
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, env = "NARAYANA_LAB_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Maximum number of cases evaluated at once.
        #[arg(long)]
        jobs: Option<usize>,
        /// Write the report here instead of standard output.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// S-fraction coefficients of the Narayana generating function.
    Cf {
        #[arg(long)]
        depth: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Hall–Littlewood principal specialization P_r(1^n; q).
    Hl {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Io(String),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verify) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command) -> CmdResult {
    match command {
        Command::Eval { expr, format } => cmd_eval(&expr, format),
        Command::Table { name, max_n, format, at_q } => cmd_table(&name, max_n, format, at_q.as_deref()),
        Command::Verify { ids, max_n, seed, jobs, report } => cmd_verify(ids, max_n, seed, jobs, report),
        Command::Cf { depth, format } => cmd_cf(depth, format),
        Command::Hl { r, n, format } => cmd_hl(r, n, format),
    }
}

fn cap(what: &str, value: usize, limit: usize) -> Result<(), Failure> {
    if value > limit {
        return Err(Failure::Usage(format!("{what} = {value} exceeds the cap of {limit}")));
    }
    Ok(())
}

fn coeffs_json(p: &PolyQQ) -> Value {
    match p.q_coeffs() {
        Some(cs) => Value::from(cs.iter().map(render_rat).collect::<Vec<_>>()),
        None => Value::Null,
    }
}

fn poly_json(p: &PolyQQ) -> Value {
    json!({ "value": p.to_string(), "coeffs": coeffs_json(p) })
}

fn csv_row(label: Option<String>, p: &PolyQQ) -> Result<String, Failure> {
    let cs = p
        .q_coeffs()
        .ok_or_else(|| Failure::Usage(format!("{p} has no ascending coefficient list")))?;
    let mut fields: Vec<String> = label.into_iter().collect();
    fields.extend(cs.iter().map(render_rat));
    Ok(fields.join(",") + "\n")
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json renders") + "\n"
}

fn render_parse_error(input: &str, e: &Error) -> String {
    match e {
        Error::Parse { offset, .. } => format!("{e}\n  {input}\n  {}^", " ".repeat(*offset)),
        _ => e.to_string(),
    }
}

fn cmd_eval(input: &str, format: Format) -> CmdResult {
    let expr = dsl::parse(input).map_err(|e| Failure::Usage(render_parse_error(input, &e)))?;
    let value = dsl::eval(&expr)?;
    Ok(match format {
        Format::Text => format!("{value}\n"),
        Format::Csv => csv_row(None, &value)?,
        Format::Json => {
            let mut doc = poly_json(&value);
            doc["expr"] = Value::from(expr.to_string());
            pretty(&doc)
        }
    })
}

fn cmd_table(name: &str, max_n: usize, format: Format, at_q: Option<&str>) -> CmdResult {
    let seq = SequenceName::from_str(name)?;
    let limit = match seq {
        SequenceName::Catalan | SequenceName::SchroederSmall | SequenceName::SchroederLarge => INT_TABLE_CAP,
        _ => POLY_TABLE_CAP,
    };
    cap("max-n", max_n, limit)?;
    let at: Option<Rat> = at_q.map(parse_rat).transpose()?;
    let mut rows = Vec::new();
    for n in seq.first_index()..=max_n {
        let mut value = seq.value(n)?;
        if let Some(x) = &at {
            value = value.eval_q(x)?;
        }
        rows.push((n, value));
    }
    Ok(match format {
        Format::Text => rows.iter().map(|(n, v)| format!("{n}: {v}\n")).collect(),
        Format::Csv => {
            let mut out = String::new();
            for (n, v) in &rows {
                out += &csv_row(Some(n.to_string()), v)?;
            }
            out
        }
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|(n, v)| {
                    let mut row = poly_json(v);
                    row["n"] = Value::from(*n);
                    row
                })
                .collect();
            pretty(&json!({
                "table": seq.as_str(),
                "max_n": max_n,
                "at_q": at.as_ref().map(render_rat),
                "rows": rows,
            }))
        }
    })
}

fn cmd_verify(ids: Vec<String>, max_n: usize, seed: u64, jobs: Option<usize>, report: Option<PathBuf>) -> CmdResult {
    let jobs = jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    if jobs == 0 {
        return Err(Failure::Usage("--jobs must be positive".into()));
    }
    let selected = (!ids.is_empty()).then_some(ids.as_slice());
    let suite = run_suite(selected, max_n, seed, jobs)?;
    let doc = suite.to_json() + "\n";
    let out = match report {
        Some(path) => {
            fs::write(&path, &doc).map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))?;
            let mut summary = format!("{} passed, {} failed\n", suite.counts.pass, suite.counts.fail);
            for case in suite.results.iter().filter(|c| c.status == Status::Fail) {
                summary += &format!("FAIL {} {}\n", case.id, serde_json::to_string(&case.params).unwrap_or_default());
            }
            summary
        }
        None => doc,
    };
    if suite.passed() {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Verify)
    }
}

fn cmd_cf(depth: usize, format: Format) -> CmdResult {
    cap("depth", depth, CF_CAP)?;
    let coeffs = sfraction(&narayana_alphabet(), depth)?;
    Ok(match format {
        Format::Text | Format::Csv => {
            let sep = if format == Format::Text { ", " } else { "," };
            coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(sep) + "\n"
        }
        Format::Json => pretty(&json!({
            "depth": depth,
            "coefficients": coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })),
    })
}

fn cmd_hl(r: usize, n: usize, format: Format) -> CmdResult {
    cap("r", r, HL_CAP)?;
    cap("n", n, HL_CAP)?;
    let value = hall_littlewood_principal(r, n)?;
    Ok(match format {
        Format::Text => format!("{value}\n"),
        Format::Csv => csv_row(None, &value)?,
        Format::Json => {
            let mut doc = poly_json(&value);
            doc["r"] = Value::from(r);
            doc["n"] = Value::from(n);
            pretty(&doc)
        }
    })
}
