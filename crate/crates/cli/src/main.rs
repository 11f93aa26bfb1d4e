//! `gsb`: check, complete and query Gröbner–Shirshov bases from
//! presentation files.

mod preset;
mod prop;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gsb_core::completion::Origin;
use gsb_core::lie::{lie_is_gsb_with, nlsw_enumerate};
use gsb_core::presentation::{parse_lie_polynomial, parse_polynomial, render_assoc, render_lie};
use gsb_core::{
    complete_with, is_gsb_with, CompletionBudget, CompletionStatus, Kind, Parallelism, Presentation,
};
use serde_json::json;

const OK: u8 = 0;
const FALSE: u8 = 1;
const BUDGET: u8 = 2;
const INPUT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "gsb",
    version,
    about = "Groebner-Shirshov bases for monoid, group and Lie presentations"
)]
struct Cli {
    /// Worker threads (0 = one per core). Defaults to GSB_THREADS, else 1.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the relations of FILE form a Groebner-Shirshov basis.
    Check {
        file: PathBuf,
        /// Only examine ambiguities of at most this length.
        #[arg(long)]
        max_deg: Option<usize>,
    },
    /// Run the Shirshov completion on FILE and print the result.
    Complete {
        file: PathBuf,
        #[arg(long)]
        max_deg: Option<usize>,
        #[arg(long)]
        max_relations: Option<usize>,
        /// Write the completed presentation here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Normal form of EXPR modulo the relations of FILE.
    Nf {
        file: PathBuf,
        expr: String,
        /// Complete the relations first (up to --max-deg).
        #[arg(long)]
        complete: bool,
        #[arg(long)]
        max_deg: Option<usize>,
    },
    /// Irreducible words (or Lyndon-Shirshov words for Lie) up to a degree.
    Irr {
        file: PathBuf,
        #[arg(long)]
        max_deg: usize,
        /// Print only the number of irreducible elements.
        #[arg(long)]
        count: bool,
    },
    /// Write a catalog presentation.
    Preset {
        #[command(subcommand)]
        which: preset::PresetCommand,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Run a randomized or exhaustive property check.
    Prop {
        #[command(subcommand)]
        which: prop::PropCommand,
    },
}

pub(crate) struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub(crate) fn input(message: impl ToString) -> Self {
        Failure {
            code: INPUT,
            message: message.to_string(),
        }
    }
}

pub(crate) type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { INPUT } else { OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let par = match cli.threads {
        Some(n) => Parallelism::threads(n),
        None => Parallelism::from_env(),
    };
    match run(cli.command, cli.json, &par) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn load(path: &Path) -> Result<Presentation, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    Presentation::parse(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

pub(crate) fn write_out(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(command: Command, as_json: bool, par: &Parallelism) -> Outcome {
    match command {
        Command::Check { file, max_deg } => check(&load(&file)?, max_deg, as_json, par),
        Command::Complete {
            file,
            max_deg,
            max_relations,
            out,
        } => {
            let mut budget = CompletionBudget::default();
            if let Some(d) = max_deg {
                budget.max_deg = d;
            }
            if let Some(r) = max_relations {
                budget.max_relations = r;
            }
            complete(&load(&file)?, budget, out.as_deref(), as_json, par)
        }
        Command::Nf {
            file,
            expr,
            complete,
            max_deg,
        } => normal_form(&load(&file)?, &expr, complete, max_deg, par),
        Command::Irr {
            file,
            max_deg,
            count,
        } => irreducible(&load(&file)?, max_deg, count, as_json),
        Command::Preset { which, out } => preset::run(which, out.as_deref()),
        Command::Prop { which } => prop::run(which, as_json, par),
    }
}

fn check(p: &Presentation, max_deg: Option<usize>, as_json: bool, par: &Parallelism) -> Outcome {
    let (ok, count, failures) = if p.kind == Kind::Lie {
        let system = p.lie_system().map_err(Failure::input)?;
        let (ok, fails) = lie_is_gsb_with(&system, max_deg, par);
        let reports: Vec<_> = fails
            .iter()
            .map(|c| {
                json!({
                    "kind": c.kind,
                    "w": p.alphabet.render(&c.w),
                    "f_id": c.f_id,
                    "g_id": c.g_id,
                    "value": render_lie(&c.value, &p.alphabet),
                })
            })
            .collect();
        (ok, system.len(), reports)
    } else {
        let system = p.rewrite_system().map_err(Failure::input)?;
        let (ok, fails) = is_gsb_with(&system, max_deg, par);
        let reports: Vec<_> = fails
            .iter()
            .map(|c| serde_json::to_value(c.report(&p.alphabet)).expect("serializable"))
            .collect();
        (ok, system.len(), reports)
    };
    if as_json {
        let v = json!({ "gsb": ok, "relations": count, "max_deg": max_deg, "failures": failures });
        println!("{}", serde_json::to_string_pretty(&v).expect("json"));
    } else {
        let verdict = if ok { "yes" } else { "no" };
        println!(
            "GSB: {verdict} ({count} relations, {} failures)",
            failures.len()
        );
        if !ok {
            println!("{}", serde_json::to_string_pretty(&failures).expect("json"));
        }
    }
    Ok(if ok { OK } else { FALSE })
}

fn status_text(s: CompletionStatus) -> String {
    match s {
        CompletionStatus::Complete => "complete".into(),
        CompletionStatus::TruncatedAtDegree(d) => format!("truncated at degree {d}"),
        CompletionStatus::BudgetExhausted => "budget exhausted".into(),
    }
}

fn complete(
    p: &Presentation,
    budget: CompletionBudget,
    out: Option<&Path>,
    as_json: bool,
    par: &Parallelism,
) -> Outcome {
    if p.kind == Kind::Lie {
        return Err(Failure::input(
            "completion runs on monoid and group presentations",
        ));
    }
    let inputs = p.associative_relations().map_err(Failure::input)?;
    let res = complete_with(&p.alphabet, &inputs, budget, par).map_err(Failure::input)?;
    let code = if res.is_complete() { OK } else { BUDGET };
    let completed = Presentation::monoid(p.alphabet.clone(), res.system.polynomials())
        .map_err(Failure::input)?
        .with_expected("status", status_text(res.status).replace(' ', "_"))
        .with_expected("relations", res.system.len());
    if as_json {
        let v = res.to_json();
        write_out(
            out,
            &format!("{}\n", serde_json::to_string_pretty(&v).expect("json")),
        )?;
    } else {
        eprintln!(
            "completion: {} ({} relations, {} added)",
            status_text(res.status),
            res.system.len(),
            res.added
                .iter()
                .filter(|r| !matches!(r.origin, Origin::Input { .. }))
                .count()
        );
        write_out(out, &completed.emit())?;
    }
    Ok(code)
}

fn normal_form(
    p: &Presentation,
    expr: &str,
    complete: bool,
    max_deg: Option<usize>,
    par: &Parallelism,
) -> Outcome {
    if p.kind == Kind::Lie {
        let f = parse_lie_polynomial(&p.alphabet, expr).map_err(Failure::input)?;
        let system = p.lie_system().map_err(Failure::input)?;
        println!("{}", render_lie(&system.normal_form(&f), &p.alphabet));
        return Ok(OK);
    }
    let f = parse_polynomial(&p.alphabet, expr).map_err(Failure::input)?;
    let system = if complete {
        let budget = max_deg.map_or_else(CompletionBudget::default, CompletionBudget::with_max_deg);
        let inputs = p.associative_relations().map_err(Failure::input)?;
        let res = complete_with(&p.alphabet, &inputs, budget, par).map_err(Failure::input)?;
        if !res.is_complete() {
            eprintln!(
                "warning: completion {}; normal form may not be unique",
                status_text(res.status)
            );
        }
        res.system
    } else {
        p.rewrite_system().map_err(Failure::input)?
    };
    println!("{}", render_assoc(&system.reduce(&f), &p.alphabet));
    Ok(OK)
}

fn irreducible(p: &Presentation, max_deg: usize, count: bool, as_json: bool) -> Outcome {
    let rendered: Vec<String> = if p.kind == Kind::Lie {
        let system = p.lie_system().map_err(Failure::input)?;
        let assoc = system.associative_system().map_err(Failure::input)?;
        (1..=max_deg)
            .flat_map(|d| nlsw_enumerate(&p.alphabet, d))
            .filter(|n| !assoc.is_reducible(&n.word()))
            .map(|n| n.render(&p.alphabet))
            .collect()
    } else {
        let system = p.rewrite_system().map_err(Failure::input)?;
        let words = system.irr_words(max_deg).map_err(Failure::input)?;
        words
            .iter()
            .map(|w| {
                if w.is_empty() {
                    "1".to_string()
                } else {
                    p.alphabet.render(w)
                }
            })
            .collect()
    };
    if as_json {
        let v = if count {
            json!({ "count": rendered.len() })
        } else {
            json!(rendered)
        };
        println!("{v}");
    } else if count {
        println!("{}", rendered.len());
    } else {
        for r in &rendered {
            println!("{r}");
        }
    }
    Ok(OK)
}
