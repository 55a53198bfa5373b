//! `gross`: evaluate numerals, sets, measurements and numeral systems.
//!
//! Exit status is 0 on success, 1 on a domain error and 2 on a syntax or
//! usage error. With `--format json` stdout carries exactly one object,
//! `{"result": ...}` or `{"error": {"kind", "message"}}`.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use grossone::derived::{cmp_defined, resolve_finite};
use grossone::geometry::{half_plane_demo, RealInterval, Strip};
use grossone::gnum::cmp;
use grossone::measure::{
    self, canonical_measurement, min_extraction_measurement, DEFAULT_EXTRACTION_BOUND,
};
use grossone::numeral_system::{self, DEFAULT_SCAN_LIMIT};
use grossone::{expr, Error, GrossNumber, NumeralSystem};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(
    name = "gross",
    version,
    about = "Exact arithmetic with grossone numerals"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,

    /// Write ① as G1.
    #[arg(long, global = true)]
    ascii: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate an arithmetic expression, e.g. "(①+1)^2 - 3①".
    Eval { expr: String },
    /// Number of elements of a set, e.g. "[-①..①] \ {0}".
    Card { set: String },
    /// Compare two expressions.
    Cmp { left: String, right: String },
    /// Measurement of a set, optionally checked against a numeral system.
    Measure {
        set: String,
        /// "piraha", "finite:<digits>:<base>" or "gross:<terms>:<coeff_digits>:<exp_digits>".
        #[arg(long)]
        system: Option<String>,
        #[arg(long, value_enum, default_value = "canonical")]
        method: Method,
        /// Extraction limit for --method extraction.
        #[arg(long, default_value_t = DEFAULT_EXTRACTION_BOUND)]
        bound: u64,
    },
    /// Greatest finite and least infinite integer of a numeral system.
    System {
        descriptor: String,
        /// Report whether a numeral is expressible (repeatable).
        #[arg(long)]
        check: Vec<String>,
        /// Confirm φ and ψ by exhaustive enumeration.
        #[arg(long)]
        scan: bool,
        #[arg(long, default_value_t = DEFAULT_SCAN_LIMIT)]
        scan_limit: u128,
    },
    /// A number defined by g(x) ≤ κ < g(x+1), e.g. "sqrtfloor(①)".
    Define {
        form: String,
        /// Compare with an integer (repeatable).
        #[arg(long = "cmp")]
        against: Vec<String>,
    },
    /// Worked examples.
    #[command(subcommand)]
    Demo(Demo),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Canonical,
    Extraction,
}

#[derive(Subcommand, Debug)]
enum Demo {
    /// Reflect A = [-b, a] × [-c, c] in x = a, then in x = d, and compare with A.
    Halfplane {
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        a: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        d: String,
        #[arg(long, default_value = "①", allow_hyphen_values = true)]
        b: String,
        #[arg(long, default_value = "①", allow_hyphen_values = true)]
        c: String,
    },
}

/// Rendered output of a successful command.
struct Output {
    text: String,
    json: Value,
}

fn numeral(x: &GrossNumber) -> Value {
    Value::String(x.to_string())
}

fn finite(text: &str, what: &str) -> Result<GrossNumber, Error> {
    let x = expr::eval(text)?;
    if x.is_finite() {
        Ok(x)
    } else {
        Err(Error::Domain(format!("--{what} must be finite, got {x}")))
    }
}

fn system(descriptor: &str) -> Result<NumeralSystem, Error> {
    Ok(descriptor.parse::<NumeralSystem>()?)
}

fn run(command: Command) -> Result<Output, Error> {
    match command {
        Command::Eval { expr } => {
            let x = expr::eval(&expr)?;
            Ok(Output {
                text: x.to_string(),
                json: json!({ "value": numeral(&x), "class": x.classify() }),
            })
        }
        Command::Card { set } => {
            let s = expr::parse_set(&set)?;
            let n = s.cardinality();
            Ok(Output {
                text: n.to_string(),
                json: json!({ "set": s.to_string(), "cardinality": numeral(&n) }),
            })
        }
        Command::Cmp { left, right } => {
            let (x, y) = (expr::eval(&left)?, expr::eval(&right)?);
            let sign = cmp(&x, &y);
            Ok(Output {
                text: format!("{x} {} {y}", sign.relation()),
                json: json!({
                    "left": numeral(&x),
                    "right": numeral(&y),
                    "sign": sign.to_string(),
                    "relation": sign.relation(),
                }),
            })
        }
        Command::Measure {
            set,
            system: descriptor,
            method,
            bound,
        } => {
            let s = expr::parse_set(&set)?;
            let sys = descriptor.as_deref().map(system).transpose()?;
            let m = match (&sys, method) {
                (Some(sys), Method::Canonical) => sys.measure_in(&s)?,
                (None, Method::Canonical) => canonical_measurement(&s)?,
                (_, Method::Extraction) => {
                    let m = min_extraction_measurement(&s, bound)?;
                    if let Some(sys) = &sys {
                        sys.measure_in(&s)?;
                    }
                    m
                }
            };
            let glyph = grossone::gnum::Glyph::Circled;
            Ok(Output {
                text: measure::to_text(&m, glyph).trim_end().to_string(),
                json: json!({
                    "system": sys.map(|s| s.to_string()),
                    "measurement": measure::to_json(&m, glyph),
                }),
            })
        }
        Command::System {
            descriptor,
            check,
            scan,
            scan_limit,
        } => {
            let sys = system(&descriptor)?;
            let phi = sys.max_finite()?;
            let psi = sys.min_infinite().ok();
            let mut lines = vec![format!("system {sys}"), format!("phi {phi}")];
            lines.push(match &psi {
                Some(psi) => format!("psi {psi}"),
                None => "psi none".to_string(),
            });
            let mut checks = Vec::new();
            for text in &check {
                let x = expr::eval(text)?;
                let ok = sys.expressible(&x);
                lines.push(format!("expressible {x} {ok}"));
                checks.push(json!({ "numeral": numeral(&x), "expressible": ok }));
            }
            let mut scanned = Value::Null;
            if scan {
                let exec = grossone::batch::Execution::Parallel;
                let found_phi = numeral_system::scan_max_finite(&sys, scan_limit, exec)?;
                let found_psi = numeral_system::scan_min_infinite(&sys, scan_limit, exec).ok();
                let upper = found_psi.clone().unwrap_or_else(|| found_phi.clone());
                let between = numeral_system::scan_integers(&sys, scan_limit, exec, |x| {
                    x >= &found_phi && x <= &upper
                })?;
                let size = numeral_system::integer_space_size(&sys);
                lines.push(format!("scan descriptions {size}"));
                lines.push(format!("scan phi {found_phi}"));
                lines.push(match &found_psi {
                    Some(p) => format!("scan psi {p}"),
                    None => "scan psi none".to_string(),
                });
                let listed: Vec<String> = between.iter().map(|x| x.to_string()).collect();
                lines.push(format!("scan between {}", listed.join(" ")));
                scanned = json!({
                    "descriptions": size.to_string(),
                    "phi": numeral(&found_phi),
                    "psi": found_psi.as_ref().map(numeral),
                    "between": listed,
                });
            }
            Ok(Output {
                text: lines.join("\n"),
                json: json!({
                    "system": sys.to_string(),
                    "phi": numeral(&phi),
                    "psi": psi.as_ref().map(numeral),
                    "checks": checks,
                    "scan": scanned,
                }),
            })
        }
        Command::Define { form, against } => {
            let d = expr::parse_defined(&form)?;
            let value = d
                .kappa()
                .is_finite()
                .then(|| resolve_finite(&d))
                .transpose()?;
            let mut lines = vec![d.to_string()];
            if let Some(v) = &value {
                lines.push(format!("value {v}"));
            }
            let mut comparisons = Vec::new();
            for text in &against {
                let y = expr::eval(text)?;
                let sign = cmp_defined(&d, &y);
                let relation = sign.map_or("?", |s| s.relation());
                lines.push(format!("{d} {relation} {y}"));
                comparisons.push(json!({
                    "with": numeral(&y),
                    "sign": sign.map_or("incomparable".to_string(), |s| s.to_string()),
                    "relation": relation,
                }));
            }
            Ok(Output {
                text: lines.join("\n"),
                json: json!({
                    "defined": d.to_string(),
                    "kappa": numeral(d.kappa()),
                    "value": value.as_ref().map(numeral),
                    "comparisons": comparisons,
                }),
            })
        }
        Command::Demo(Demo::Halfplane { a, d, b, c }) => {
            let (a, d) = (finite(&a, "a")?, finite(&d, "d")?);
            let (b, c) = (expr::eval(&b)?, expr::eval(&c)?);
            let r = half_plane_demo(&a, &d, &b, &c)?;
            let range = |x: &RealInterval| format!("[{}, {}]", x.lo(), x.hi());
            let strip = |s: &Strip| format!("{} × {}", range(&s.x), range(&s.y));
            let pair = |x: &RealInterval| json!([numeral(x.lo()), numeral(x.hi())]);
            let strip_json = |s: &Strip| json!({ "x": pair(&s.x), "y": pair(&s.y) });
            let side = |x: &Option<RealInterval>| x.as_ref().map(pair);
            let text = [
                format!("A = {}", strip(&r.a_strip)),
                format!("C = {}", strip(&r.c_strip)),
                format!("B = {}", strip(&r.b_strip)),
                format!("B subset of A: {}", r.b_subset_of_a),
                format!("uncovered extent: {}", r.uncovered.length),
                format!(
                    "classical: A = {}, C = {}, B = {}, B subset of A: {}",
                    r.classical.a_x, r.classical.c_x, r.classical.b_x, r.classical.b_subset_of_a
                ),
            ]
            .join("\n");
            Ok(Output {
                text,
                json: json!({
                    "a": strip_json(&r.a_strip),
                    "c": strip_json(&r.c_strip),
                    "b": strip_json(&r.b_strip),
                    "b_subset_of_a": r.b_subset_of_a,
                    "uncovered": {
                        "left": side(&r.uncovered.left),
                        "right": side(&r.uncovered.right),
                        "length": numeral(&r.uncovered.length),
                    },
                    "classical": {
                        "a": r.classical.a_x.to_string(),
                        "c": r.classical.c_x.to_string(),
                        "b": r.classical.b_x.to_string(),
                        "b_subset_of_a": r.classical.b_subset_of_a,
                    },
                }),
            })
        }
    }
}

fn emit(text: String, ascii: bool) {
    if ascii {
        println!("{}", text.replace('①', "G1"));
    } else {
        println!("{text}");
    }
}

fn wants_json(args: &[String]) -> bool {
    args.windows(2)
        .any(|w| w[0] == "--format" && w[1] == "json")
        || args.iter().any(|a| a == "--format=json")
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() && wants_json(&args) => {
            let message = e.kind().to_string();
            emit(
                json!({ "error": { "kind": "UsageError", "message": message } }).to_string(),
                args.iter().any(|a| a == "--ascii"),
            );
            return ExitCode::from(2);
        }
        Err(e) => e.exit(),
    };
    let json_mode = cli.format == Format::Json;
    match run(cli.command) {
        Ok(out) => {
            let text = if json_mode {
                json!({ "result": out.json }).to_string()
            } else {
                out.text
            };
            emit(text, cli.ascii);
            ExitCode::SUCCESS
        }
        Err(e) => {
            let code = if e.is_syntax() { 2 } else { 1 };
            if json_mode {
                let body = json!({ "error": { "kind": e.name(), "message": e.to_string() } });
                emit(body.to_string(), cli.ascii);
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(code)
        }
    }
}
