use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use milnor::invariants::{enumerate_admissible_with_budget, enumerate_partitions, DEFAULT_BUDGET};
use milnor::FieldDescriptor;
use milnor_cli::candidates::{check, parse_candidates};
use milnor_cli::report::parse_curve_file;
use milnor_cli::{analyze, corpus, exit, AnalyzeError, CurveReport};
use rayon::prelude::*;
use serde_json::json;

#[derive(Parser)]
#[command(name = "milnor", version, about = "Jacobian algebras, Tjurina numbers and syzygies of plane curves")]
struct Cli {
    /// Coefficient field: `rational` or `fp:<prime>` (`fp` alone uses 1000003).
    #[arg(long, global = true, default_value = "rational")]
    field: FieldDescriptor,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Leave out slow corpus curves.
    #[arg(long, global = true)]
    skip_slow: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one curve (`--expr`) or a file of `name: expression` lines (`--file`).
    Analyze {
        #[arg(long, conflicts_with = "file", required_unless_present = "file")]
        expr: Option<String>,
        #[arg(long)]
        file: Option<PathBuf>,
        /// Name used in the report for `--expr`.
        #[arg(long, default_value = "curve")]
        name: String,
        /// Also print the syzygy generators in text mode.
        #[arg(long)]
        generators: bool,
    },
    /// Check candidate Betti data from a JSON file against the necessary conditions.
    Validate { file: PathBuf },
    /// List ordered partitions or admissible candidate data.
    Enumerate {
        #[command(subcommand)]
        what: Enumerate,
    },
    /// Run the bundled reference curves and compare with stored values.
    Corpus {
        /// Restrict to these entries (repeatable).
        #[arg(long)]
        only: Vec<String>,
    },
}

#[derive(Subcommand)]
enum Enumerate {
    Partitions {
        #[arg(long)]
        t: i64,
    },
    Admissible {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        t: i64,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { exit::INPUT } else { exit::OK };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    ExitCode::from(run(cli) as u8)
}

fn fail(msg: impl std::fmt::Display) -> i32 {
    eprintln!("error: {msg}");
    exit::INPUT
}

fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Analyze {
            expr,
            file,
            name,
            generators,
        } => {
            let (batch, items) = match (expr, file) {
                (Some(e), _) => (false, vec![(name, e)]),
                (None, Some(path)) => {
                    let text = match std::fs::read_to_string(&path) {
                        Ok(t) => t,
                        Err(e) => return fail(format!("{}: {e}", path.display())),
                    };
                    match parse_curve_file(&text) {
                        Ok(list) => (true, list),
                        Err(e) => return fail(e),
                    }
                }
                (None, None) => unreachable!("clap requires one of --expr, --file"),
            };
            let results: Vec<Result<CurveReport, AnalyzeError>> =
                items.par_iter().map(|(n, e)| analyze(n, e, cli.field)).collect();
            emit_reports(&items, &results, batch, cli.json, generators)
        }
        Command::Validate { file } => {
            let text = match std::fs::read_to_string(&file) {
                Ok(t) => t,
                Err(e) => return fail(format!("{}: {e}", file.display())),
            };
            let list = match parse_candidates(&text) {
                Ok(l) => l,
                Err(e) => return fail(format!("{}: {e}", file.display())),
            };
            let verdicts: Vec<_> = list.iter().map(check).collect();
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&verdicts).expect("serializable"));
            } else {
                for v in &verdicts {
                    print!("{}", v.render_text());
                }
            }
            if verdicts.iter().all(|v| v.accepted) {
                exit::OK
            } else {
                exit::REJECTED
            }
        }
        Command::Enumerate { what } => match what {
            Enumerate::Partitions { t } => match enumerate_partitions(t) {
                Ok(list) => {
                    if cli.json {
                        let items: Vec<_> = list.iter().map(|p| p.parts().to_vec()).collect();
                        println!("{}", json!({ "t": t, "count": list.len(), "partitions": items }));
                    } else {
                        println!("{} ordered partitions of {t}", list.len());
                        for (i, p) in list.iter().enumerate() {
                            println!("{:>4}  {p}", i + 1);
                        }
                    }
                    exit::OK
                }
                Err(e) => fail(e),
            },
            Enumerate::Admissible { d, t, budget } => match enumerate_admissible_with_budget(d, t, budget) {
                Ok(list) => {
                    if cli.json {
                        let items: Vec<_> = list
                            .iter()
                            .map(|c| json!({ "exponents": c.exponents, "epsilons": c.epsilons }))
                            .collect();
                        println!("{}", json!({ "d": d, "t": t, "count": list.len(), "candidates": items }));
                    } else {
                        println!("{} admissible candidates for d = {d}, t = {t}", list.len());
                        for c in &list {
                            println!("  exponents {:?} epsilons {:?}", c.exponents, c.epsilons);
                        }
                    }
                    exit::OK
                }
                Err(e) => fail(e),
            },
        },
        Command::Corpus { only } => run_corpus(only, cli.skip_slow, cli.field, cli.json),
    }
}

fn emit_reports(
    items: &[(String, String)],
    results: &[Result<CurveReport, AnalyzeError>],
    batch: bool,
    json: bool,
    generators: bool,
) -> i32 {
    let mut code = exit::OK;
    let mut reports = Vec::new();
    for ((name, _), r) in items.iter().zip(results) {
        match r {
            Ok(rep) => {
                code = code.max(rep.exit_code());
                if json {
                    reports.push(rep.clone());
                } else {
                    print!("{}", rep.render_text(generators));
                }
            }
            Err(e) => {
                code = code.max(e.exit_code());
                eprintln!("error: {name}: {e}");
            }
        }
    }
    if json {
        let text = if batch {
            serde_json::to_string_pretty(&reports).expect("serializable")
        } else {
            reports.first().map(|r| r.to_json()).unwrap_or_default()
        };
        if !text.is_empty() {
            println!("{text}");
        }
    }
    code
}

fn run_corpus(only: Vec<String>, skip_slow: bool, field: FieldDescriptor, json: bool) -> i32 {
    let all = corpus::entries();
    for name in &only {
        if !all.iter().any(|e| &e.name == name) {
            return fail(format!("no corpus entry named `{name}`"));
        }
    }
    let selected: Vec<_> = all
        .into_iter()
        .filter(|e| only.is_empty() || only.contains(&e.name))
        .filter(|e| !(skip_slow && e.slow))
        .collect();
    let outcomes = corpus::run(selected, field);
    let passed = outcomes.iter().filter(|o| o.passed()).count();
    if json {
        let rows: Vec<_> = outcomes
            .iter()
            .map(|o| {
                json!({
                    "name": o.entry.name,
                    "passed": o.passed(),
                    "mismatches": o.mismatches,
                    "report": o.report.as_ref().ok(),
                })
            })
            .collect();
        let summary = json!({ "field": field.to_string(), "passed": passed, "total": outcomes.len(), "results": rows });
        println!("{}", serde_json::to_string_pretty(&summary).expect("serializable"));
    } else {
        for o in &outcomes {
            let status = if o.passed() { "PASS" } else { "FAIL" };
            let tau = o.report.as_ref().map(|r| format!("tau {}", r.tau_oracle)).unwrap_or_default();
            let exps = o.report.as_ref().map(|r| format!("exponents {:?}", r.exponents)).unwrap_or_default();
            println!("{status}  {:<14} {:<8} {}", o.entry.name, tau, exps);
            for m in &o.mismatches {
                println!("      {m}");
            }
        }
        println!("{passed}/{} passed [{field}]", outcomes.len());
    }
    if passed == outcomes.len() {
        exit::OK
    } else {
        exit::CORPUS_MISMATCH
    }
}
