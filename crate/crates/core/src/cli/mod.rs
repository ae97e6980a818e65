//! The `polyldc` command line: parse expressions, run constructions and law
//! suites, and report in text or JSON.

pub mod expr;
pub mod report;

use std::fmt::Write as _;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{self, FiniteMonoid};
use crate::closure;
use crate::cores::{self, Side};
use crate::duality;
use crate::error::{PolyError, Result};
use crate::law::LawReport;
use crate::monoidal;
use crate::polycore::{hom_count, set_size_cap, FiniteSet, Polynomial};
use crate::suites::{self, SuiteOptions};

pub use expr::{eval, parse, parse_poly, print, Expr};
pub use report::{exit, exit_code, ErrorInfo, MapRecord, Report, Status, SCHEMA};

#[derive(Debug, Parser)]
#[command(
    name = "polyldc",
    version,
    about = "Finite polynomial functors: constructions and law checking"
)]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Size cap on positions and table entries.
    #[arg(long, global = true, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    cap: Option<u64>,
    /// Seed for sampled law instances.
    #[arg(long, global = true, value_name = "N", default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the normal form of an expression.
    Show {
        expr: String,
        /// Draw one corolla per position.
        #[arg(long)]
        forest: bool,
        /// Use ⊗, ◁ and superscript exponents.
        #[arg(long)]
        unicode: bool,
    },
    /// Count the elements of p(N).
    Eval {
        expr: String,
        #[arg(long, value_name = "N")]
        at: u64,
    },
    /// Count the maps between two polynomials.
    Homcount { dom: String, cod: String },
    /// Dirichlet product.
    Tensor { lhs: String, rhs: String },
    /// Substitution product.
    Sub { lhs: String, rhs: String },
    /// Internal hom of the Dirichlet product.
    Close { lhs: String, rhs: String },
    /// Coclosure of the substitution product.
    Coclose { lhs: String, rhs: String },
    /// Verify the canonical duality of a set of size N.
    CheckDual {
        #[arg(long, value_name = "N")]
        size: usize,
    },
    /// Find every duality between polynomials within the bounds.
    SearchDuals {
        #[arg(long, value_name = "P")]
        max_pos: usize,
        #[arg(long, value_name = "D")]
        max_dir: usize,
    },
    /// Left and right core membership.
    Core {
        expr: String,
        /// Also probe indep against every polynomial within (2, 2).
        #[arg(long)]
        probe: bool,
    },
    /// Verify the linear bialgebra of a monoid read from a JSON file.
    CheckBialgebra {
        #[arg(long, value_name = "FILE")]
        monoid: String,
        #[arg(long)]
        side: Side,
    },
    /// Run a named law suite.
    Laws {
        #[arg(long, value_name = "NAME")]
        suite: String,
        #[arg(long, value_name = "P", default_value_t = 2)]
        max_pos: usize,
        #[arg(long, value_name = "D", default_value_t = 2)]
        max_dir: usize,
        #[arg(long, value_name = "N", default_value_t = 32)]
        samples: usize,
    },
}

/// What a run prints and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// A command's results: the JSON value and the text rendering.
struct Output {
    results: Value,
    text: String,
    pass: bool,
}

impl Output {
    fn new(results: impl Serialize, text: String) -> Result<Output> {
        let results = serde_json::to_value(results).map_err(|e| PolyError::InvalidInput(e.to_string()))?;
        Ok(Output {
            results,
            text,
            pass: true,
        })
    }

    fn law(results: impl Serialize, text: String, pass: bool) -> Result<Output> {
        Ok(Output {
            pass,
            ..Output::new(results, text)?
        })
    }
}

/// Runs one invocation; `args` excludes the program name.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(std::iter::once("polyldc".to_string()).chain(args.iter().cloned())) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::OK };
            let rendered = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), rendered)
            } else {
                (rendered, String::new())
            };
            return Outcome { stdout, stderr, code };
        }
    };
    if let Some(cap) = cli.cap {
        set_size_cap(cap);
    }
    let result = dispatch(&cli);
    let (status, code) = match &result {
        Ok(out) if out.pass => (Status::Ok, exit::OK),
        Ok(_) => (Status::LawFailed, exit::LAW_FAILED),
        Err(e) => (Status::Error, exit_code(e)),
    };
    if cli.json {
        let (results, error) = match result {
            Ok(out) => (out.results, None),
            Err(e) => (Value::Null, Some(ErrorInfo::from_error(&e))),
        };
        let report = Report {
            schema: SCHEMA.to_string(),
            command: args,
            status,
            exit_code: code,
            results,
            error,
        };
        let mut stdout = serde_json::to_string_pretty(&report).expect("reports serialize");
        stdout.push('\n');
        return Outcome {
            stdout,
            stderr: String::new(),
            code,
        };
    }
    match result {
        Ok(out) => Outcome {
            stdout: out.text,
            stderr: String::new(),
            code,
        },
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code,
        },
    }
}

/// JSON numbers up to `u64::MAX`, decimal strings beyond.
fn count_value(n: u128) -> Value {
    match u64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

fn forest(p: &Polynomial) -> Vec<String> {
    let width = p.num_positions().saturating_sub(1).to_string().len();
    p.cards()
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            let ticks = if c == 0 { ".".to_string() } else { "|".repeat(c) };
            format!("{i:>width$} {ticks}")
        })
        .collect()
}

fn law_text(r: &LawReport, depth: usize, out: &mut String) {
    let _ = writeln!(out, "{}{}", "  ".repeat(depth), r.summary());
    for p in &r.parts {
        law_text(p, depth + 1, out);
    }
}

fn laws_text(rs: &[LawReport]) -> String {
    let mut out = String::new();
    for r in rs {
        law_text(r, 0, &mut out);
    }
    out
}

fn binary(lhs: &str, rhs: &str, op: fn(&Polynomial, &Polynomial) -> Result<Polynomial>) -> Result<Output> {
    let (p, q) = (parse_poly(lhs)?, parse_poly(rhs)?);
    let r = op(&p, &q)?;
    let text = format!("{r}\n");
    Output::new(
        json!({ "lhs": p.notation(), "rhs": q.notation(), "result": r.notation() }),
        text,
    )
}

fn dispatch(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Show {
            expr,
            forest: draw,
            unicode,
        } => {
            let e = parse(expr)?;
            let p = eval(&e)?;
            let shown = if *unicode { p.notation_unicode() } else { p.notation() };
            let mut text = format!("{shown}\n");
            let lines = draw.then(|| forest(&p));
            for l in lines.iter().flatten() {
                let _ = writeln!(text, "{l}");
            }
            let mut results = json!({
                "expr": print(&e, *unicode),
                "normal_form": shown,
                "positions": p.num_positions(),
                "directions": p.cards(),
            });
            if let Some(lines) = lines {
                results["forest"] = json!(lines);
            }
            Output::new(results, text)
        }
        Command::Eval { expr, at } => {
            let p = parse_poly(expr)?;
            let n = p.eval_count(*at as u128)?;
            Output::new(
                json!({ "polynomial": p.notation(), "at": at, "count": count_value(n) }),
                format!("{n}\n"),
            )
        }
        Command::Homcount { dom, cod } => {
            let (p, q) = (parse_poly(dom)?, parse_poly(cod)?);
            let n = hom_count(&p, &q)?;
            Output::new(
                json!({ "dom": p.notation(), "cod": q.notation(), "count": count_value(n) }),
                format!("{n}\n"),
            )
        }
        Command::Tensor { lhs, rhs } => binary(lhs, rhs, monoidal::tensor),
        Command::Sub { lhs, rhs } => binary(lhs, rhs, monoidal::substitute),
        Command::Close { lhs, rhs } => binary(lhs, rhs, closure::close),
        Command::Coclose { lhs, rhs } => binary(lhs, rhs, closure::coclose),
        Command::CheckDual { size } => {
            let w = duality::canonical_dual(&FiniteSet::new(*size))?;
            let laws = vec![
                duality::verify_dual_pair(&w)?,
                duality::verify_mix_eta_epsilon(&w)?,
                duality::verify_retract_section(&w)?,
            ];
            let pass = laws.iter().all(|r| r.pass);
            let text = format!("{} ⊣⊣ {}\n{}", w.left, w.right, laws_text(&laws));
            Output::law(
                json!({
                    "left": w.left.notation(),
                    "right": w.right.notation(),
                    "eta": MapRecord::from(&w.eta),
                    "epsilon": MapRecord::from(&w.epsilon),
                    "laws": laws,
                }),
                text,
                pass,
            )
        }
        Command::SearchDuals { max_pos, max_dir } => {
            let found = duality::search_duals(*max_pos, *max_dir)?;
            let cyclic = duality::cyclic_pairs(&found);
            let mut text = String::new();
            let pairs: Vec<Value> = found
                .iter()
                .map(|d| {
                    let _ = writeln!(text, "{} ⊣⊣ {} (witnesses: {})", d.left, d.right, d.witnesses.len());
                    let ws: Vec<Value> = d
                        .witnesses
                        .iter()
                        .map(|w| json!({ "eta": MapRecord::from(&w.eta), "epsilon": MapRecord::from(&w.epsilon) }))
                        .collect();
                    json!({ "left": d.left.notation(), "right": d.right.notation(), "witnesses": ws })
                })
                .collect();
            let cyc: Vec<Value> = cyclic
                .iter()
                .map(|(p, q)| json!({ "left": p.notation(), "right": q.notation() }))
                .collect();
            for (p, q) in &cyclic {
                let _ = writeln!(text, "cyclic: {p} ⊣⊣ {q}");
            }
            Output::new(
                json!({ "max_pos": max_pos, "max_dir": max_dir, "pairs": pairs, "cyclic": cyc }),
                text,
            )
        }
        Command::Core { expr, probe } => {
            let p = parse_poly(expr)?;
            let (l, r) = (cores::in_left_core(&p), cores::in_right_core(&p));
            let mut text = format!("left-core: {l}\nright-core: {r}\n");
            let mut results = json!({ "polynomial": p.notation(), "left_core": l, "right_core": r });
            if r {
                let star = cores::star_obj(&p)?;
                let _ = writeln!(text, "star: {star}");
                results["star"] = json!(star.notation());
            }
            let mut pass = true;
            if *probe {
                let probes = vec![
                    cores::verify_core_membership(&p, Side::Left, 2, 2)?,
                    cores::verify_core_membership(&p, Side::Right, 2, 2)?,
                ];
                pass = probes[0].pass == l && probes[1].pass == r;
                for rep in &probes {
                    let _ = writeln!(text, "probe {}: {}", rep.law, rep.note.as_deref().unwrap_or(""));
                }
                results["probes"] = json!(probes);
            }
            Output::law(results, text, pass)
        }
        Command::CheckBialgebra { monoid, side } => {
            let raw = std::fs::read_to_string(monoid)
                .map_err(|e| PolyError::InvalidInput(format!("cannot read {monoid}: {e}")))?;
            let mon = FiniteMonoid::from_json(&raw)?;
            let rep = algebra::verify_linear_bialgebra(&mon, *side)?;
            let carrier = match side {
                Side::Left => Polynomial::linear(mon.order()),
                Side::Right => Polynomial::representable(mon.order()),
            };
            let text = format!("carrier: {carrier}\n{}", laws_text(std::slice::from_ref(&rep)));
            let pass = rep.pass;
            Output::law(
                json!({ "side": side, "order": mon.order(), "carrier": carrier.notation(), "report": rep }),
                text,
                pass,
            )
        }
        Command::Laws {
            suite,
            max_pos,
            max_dir,
            samples,
        } => {
            let opts = SuiteOptions {
                max_pos: *max_pos,
                max_dir: *max_dir,
                seed: cli.seed,
                samples: *samples,
            };
            let rep = suites::run_suite(suite, &opts)?;
            let text = laws_text(std::slice::from_ref(&rep));
            let pass = rep.pass;
            Output::law(json!({ "suite": suite, "options": opts, "report": rep }), text, pass)
        }
    }
}
