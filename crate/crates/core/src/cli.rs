//! Command-line front end. [`run`] is the whole program minus process
//! plumbing, so it can be driven in-process by tests.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::corpus::{self, EntryKind};
use crate::document::{self, PresentationDocument};
use crate::error::Error;
use crate::floer::{self, BundleSpec};
use crate::invariants::{self, Normalization};
use crate::lens;
use crate::par::Exec;
use crate::ring::{format_rational, Rational};
use crate::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

pub const NORMALIZATION_ENV: &str = "LESCOP_NORMALIZATION";

#[derive(Parser, Debug)]
#[command(name = "lescop", version, about = "Exact invariants of surgery presentations")]
struct Cli {
    /// Emit one JSON object per input on its own line.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Alexander polynomial and Delta''(1) of one component.
    Alexander {
        file: String,
        #[arg(long)]
        component: String,
    },
    /// Lescop invariant.
    Lescop { files: Vec<String> },
    /// Euler characteristic of instanton Floer homology.
    Chi {
        files: Vec<String>,
        #[arg(long, value_enum, default_value_t = RouteArg::Both)]
        route: RouteArg,
    },
    /// Sato-Levine invariant of a two-component presentation.
    SatoLevine { files: Vec<String> },
    /// Square of Milnor's triple linking number of a three-component presentation.
    Mu2 { files: Vec<String> },
    /// Casson invariant of an integral homology sphere given by a surgery chain.
    Casson { chainfile: PathBuf },
    /// Representation count for the lens space L(p, q).
    Lens {
        #[arg(long = "p", allow_negative_numbers = true)]
        p: i64,
    },
    /// Run every applicable cross-check.
    Verify { files: Vec<String> },
    /// List the built-in corpus, optionally writing it out as files.
    Examples {
        #[arg(long)]
        write: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    Closed,
    Triangle,
    Both,
}

#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A parsed input: a file path, or `@name` for a corpus entry.
struct Input {
    label: String,
    doc: PresentationDocument,
    kind: EntryKind,
}

fn load(arg: &str) -> Result<Input, String> {
    if let Some(name) = arg.strip_prefix('@') {
        let e = corpus::lookup(name).ok_or_else(|| format!("{arg}: no corpus entry named `{name}`"))?;
        return Ok(Input { label: arg.to_owned(), doc: e.document, kind: e.kind });
    }
    let text = std::fs::read_to_string(arg).map_err(|e| format!("{arg}: {e}"))?;
    let doc = document::parse(&text).map_err(|e| format!("{arg}: {e}"))?;
    Ok(Input { label: arg.to_owned(), doc, kind: EntryKind::Plain })
}

fn default_mode() -> Result<Normalization, String> {
    match std::env::var(NORMALIZATION_ENV) {
        Ok(v) => v.parse().map_err(|e| format!("{NORMALIZATION_ENV}: {e}")),
        Err(_) => Ok(Normalization::Derived),
    }
}

fn q(r: &Rational) -> String {
    format_rational(r)
}

/// Result of one input: a JSON record, a human-readable line, and an exit
/// code contribution.
struct Row {
    json: Value,
    text: String,
    code: i32,
}

fn input_error(msg: String) -> Row {
    Row { json: json!({ "error": msg }), text: msg, code: EXIT_INPUT }
}

fn error_row(label: &str, e: Error) -> Row {
    let code = if e.is_input_error() { EXIT_INPUT } else { EXIT_CHECK_FAILED };
    Row { json: json!({ "file": label, "error": e.to_string() }), text: format!("{label}: {e}"), code }
}

fn for_each_input<F>(files: &[String], mode: Normalization, f: F) -> Vec<Row>
where
    F: Fn(&Input, Normalization) -> Result<Row, Error> + Sync + Send,
{
    Exec::default().map(files, |arg| match load(arg) {
        Err(msg) => input_error(msg),
        Ok(input) => {
            let mode = input.doc.normalization.unwrap_or(mode);
            f(&input, mode).unwrap_or_else(|e| error_row(&input.label, e))
        }
    })
}

fn lescop_row(input: &Input, mode: Normalization) -> Result<Row, Error> {
    let p = &input.doc.presentation;
    let l = invariants::lescop(p, mode)?;
    Ok(Row {
        json: json!({
            "file": input.label,
            "b1": p.len(),
            "torsion": p.base_order,
            "lescop": q(&l),
            "normalization": mode.as_str(),
        }),
        text: format!("{:<28} b1={:<2} |Tor|={:<4} lescop = {}", input.label, p.len(), p.base_order, q(&l)),
        code: EXIT_OK,
    })
}

fn chi_row(input: &Input, route: RouteArg) -> Result<Row, Error> {
    let p = &input.doc.presentation;
    let n = p.len();
    let bundle = input.doc.bundle_w2.clone().map(BundleSpec::new).unwrap_or_else(|| BundleSpec::all_ones(n));
    let closed = matches!(route, RouteArg::Closed | RouteArg::Both).then(|| floer::chi_closed_form(p, &bundle)).transpose()?;
    let tri = matches!(route, RouteArg::Triangle | RouteArg::Both).then(|| floer::chi_via_triangle(p, &bundle)).transpose()?;
    let agree = match (&closed, &tri) {
        (Some(a), Some(b)) => Some(a.chi == b.chi),
        _ => None,
    };
    let report = closed.as_ref().or(tri.as_ref()).expect("at least one route");
    let mut routes = serde_json::Map::new();
    let mut text = format!("{:<28}", input.label);
    for r in closed.iter().chain(tri.iter()) {
        routes.insert(r.route.as_str().into(), Value::String(r.chi.to_string()));
        let _ = write!(text, " {}={}", r.route.as_str(), r.chi);
    }
    let mut obj = json!({
        "file": input.label,
        "b1": n,
        "torsion": p.base_order,
        "bundle_w2": bundle.w2.iter().map(|&b| u8::from(b)).collect::<Vec<_>>(),
        "ambiguity": report.ambiguity.as_str(),
        "routes": routes,
    });
    let _ = write!(text, " ambiguity={}", report.ambiguity.as_str());
    if let Some(a) = agree {
        obj["agree"] = Value::Bool(a);
        let _ = write!(text, " {}", if a { "agree" } else { "DISAGREE" });
    }
    if let Some(note) = &report.note {
        obj["note"] = Value::String(note.clone());
    }
    if input.kind == EntryKind::KnotBorromeanSum {
        let reduced = floer::reduced_knot_chi(&report.chi);
        obj["reduced_knot_chi"] = Value::String(q(&reduced));
        let _ = write!(text, " reduced_knot_chi={}", q(&reduced));
    }
    Ok(Row { json: obj, text, code: if agree == Some(false) { EXIT_CHECK_FAILED } else { EXIT_OK } })
}

fn sato_levine_row(input: &Input, mode: Normalization) -> Result<Row, Error> {
    let r = invariants::sato_levine_report(&input.doc.presentation)?;
    let mut text = format!("{:<28} s = {} ({mode})", input.label, q(r.get(mode)));
    if !r.modes_agree() {
        let _ = write!(text, " [mode mismatch: derived {}, literal {}]", q(&r.derived), q(&r.literal));
    }
    Ok(Row {
        json: json!({
            "file": input.label,
            "sato_levine": q(r.get(mode)),
            "normalization": mode.as_str(),
            "derived": q(&r.derived),
            "literal": q(&r.literal),
            "mode_mismatch": !r.modes_agree(),
        }),
        text,
        code: EXIT_OK,
    })
}

fn mu2_row(input: &Input, mode: Normalization) -> Result<Row, Error> {
    let m = invariants::milnor_mu_squared(&input.doc.presentation, mode)?;
    Ok(Row {
        json: json!({ "file": input.label, "mu_squared": q(&m), "normalization": mode.as_str() }),
        text: format!("{:<28} mu^2 = {}", input.label, q(&m)),
        code: EXIT_OK,
    })
}

fn verify_row(input: &Input, mode: Normalization) -> Result<Row, Error> {
    let checks = verify::verify(&input.doc, mode)?;
    let passed = verify::all_passed(&checks);
    let mut text = format!("{}: {}\n", input.label, if passed { "ok" } else { "FAILED" });
    for c in &checks {
        let _ = writeln!(text, "  {:<4} {:<24} {}", c.status.as_str(), c.name, c.detail);
    }
    text.pop();
    Ok(Row {
        json: json!({
            "file": input.label,
            "passed": passed,
            "checks": checks.iter().map(|c| json!({
                "name": c.name, "status": c.status.as_str(), "detail": c.detail,
            })).collect::<Vec<_>>(),
        }),
        text,
        code: if passed { EXIT_OK } else { EXIT_CHECK_FAILED },
    })
}

fn emit(rows: Vec<Row>, json_out: bool) -> Outcome {
    let mut out = Outcome::default();
    for row in rows {
        out.code = out.code.max(row.code);
        let is_error = row.json.get("error").is_some();
        if json_out {
            let _ = writeln!(out.stdout, "{}", row.json);
        }
        if is_error {
            let _ = writeln!(out.stderr, "error: {}", row.text);
        } else if !json_out {
            let _ = writeln!(out.stdout, "{}", row.text);
        }
    }
    out
}

fn single(row: Result<Row, Error>, label: &str, json_out: bool) -> Outcome {
    emit(vec![row.unwrap_or_else(|e| error_row(label, e))], json_out)
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: rendered, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: rendered }
            };
        }
    };
    let mode = match default_mode() {
        Ok(m) => m,
        Err(msg) => return Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: format!("error: {msg}\n") },
    };
    let json_out = cli.json;
    let need_files = |files: &[String]| {
        files.is_empty().then(|| Outcome {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: "error: at least one input file is required\n".into(),
        })
    };

    match cli.command {
        Command::Alexander { file, component } => {
            let input = match load(&file) {
                Ok(i) => i,
                Err(msg) => return emit(vec![input_error(msg)], json_out),
            };
            let row = (|| {
                let a = invariants::alexander(&input.doc.presentation, &component)?;
                let d2 = a.second_derivative_at_one();
                let terms: Vec<Value> = a
                    .terms()
                    .rev()
                    .map(|(k, c)| json!({ "exponent": q(&Rational::new(k.into(), 2.into())), "coefficient": q(c) }))
                    .collect();
                Ok(Row {
                    json: json!({
                        "file": input.label,
                        "component": component,
                        "alexander": a.to_string(),
                        "terms": terms,
                        "delta2": q(&d2),
                    }),
                    text: format!("{} [{component}]\n  Delta(t)    = {a}\n  Delta''(1)  = {}", input.label, q(&d2)),
                    code: EXIT_OK,
                })
            })();
            single(row, &file, json_out)
        }
        Command::Lescop { files } => need_files(&files).unwrap_or_else(|| emit(for_each_input(&files, mode, lescop_row), json_out)),
        Command::Chi { files, route } => need_files(&files)
            .unwrap_or_else(|| emit(for_each_input(&files, mode, |i, _| chi_row(i, route)), json_out)),
        Command::SatoLevine { files } => {
            need_files(&files).unwrap_or_else(|| emit(for_each_input(&files, mode, sato_levine_row), json_out))
        }
        Command::Mu2 { files } => need_files(&files).unwrap_or_else(|| emit(for_each_input(&files, mode, mu2_row), json_out)),
        Command::Verify { files } => {
            need_files(&files).unwrap_or_else(|| emit(for_each_input(&files, mode, verify_row), json_out))
        }
        Command::Casson { chainfile } => {
            let label = chainfile.display().to_string();
            let text = match std::fs::read_to_string(&chainfile) {
                Ok(t) => t,
                Err(e) => return emit(vec![input_error(format!("{label}: {e}"))], json_out),
            };
            let row = (|| {
                let chain = document::parse_chain(&text)?;
                let lambda = invariants::casson(&chain)?;
                let chi = floer::taubes_chi(&chain)?;
                Ok(Row {
                    json: json!({ "file": label, "steps": chain.steps.len(), "casson": q(&lambda), "taubes_chi": q(&chi) }),
                    text: format!("{label:<28} casson = {}  chi = {}", q(&lambda), q(&chi)),
                    code: EXIT_OK,
                })
            })();
            single(row, &label, json_out)
        }
        Command::Lens { p } => {
            let row = lens::rep_classes(p).map(|b| Row {
                json: json!({ "p": b.p, "central": b.central_classes, "spheres": b.sphere_classes, "factor": b.euler_factor }),
                text: format!(
                    "L({p}, q): central classes {}, 2-sphere classes {}, Euler factor {}",
                    b.central_classes, b.sphere_classes, b.euler_factor
                ),
                code: EXIT_OK,
            });
            single(row, "lens", json_out)
        }
        Command::Examples { write } => {
            let entries = corpus::corpus();
            if let Some(dir) = &write {
                if let Err(e) = std::fs::create_dir_all(dir) {
                    return emit(vec![input_error(format!("{}: {e}", dir.display()))], json_out);
                }
                for e in &entries {
                    let path = dir.join(format!("{}.json", e.name));
                    if let Err(err) = std::fs::write(&path, document::serialize(&e.document)) {
                        return emit(vec![input_error(format!("{}: {err}", path.display()))], json_out);
                    }
                }
            }
            let rows = entries
                .iter()
                .map(|e| {
                    let p = &e.document.presentation;
                    Row {
                        json: json!({
                            "name": e.name,
                            "description": e.description,
                            "b1": p.len(),
                            "torsion": p.base_order,
                        }),
                        text: format!("@{:<18} b1={} |Tor|={:<2} {}", e.name, p.len(), p.base_order, e.description),
                        code: EXIT_OK,
                    }
                })
                .collect();
            emit(rows, json_out)
        }
    }
}
