mod knot_spec;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;
use twobridge::alexander::{conway_even_form, second_derivative_at_one, seifert_from_conway, signature, alexander_poly};
use twobridge::casson::{lambda_from_system, total_seminorm, SurgerySlope};
use twobridge::names;
use twobridge::obstruction::{census, census_with_threads, obstruct, ObstructionReport};
use twobridge::rational::{crossing_number, kx_family, normal_form, simple_cf, SchubertForm};
use twobridge::slopes::enumerate_bscf;
use twobridge::Error;

/// Exact invariants and cosmetic-surgery obstructions for two-bridge knots.
///
/// Knots are given as S(a,b), as an even Conway form C[e1,...,e2g], as a
/// table name such as 9_27, or with --kx x for C[2x,2,-2x,2x,2,-2x].
#[derive(Parser)]
#[command(name = "twobridge", version)]
struct Cli {
    /// Print the output document as pretty JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Print compact JSON; census reports go one per line.
    #[arg(long, global = true, conflicts_with = "json")]
    jsonl: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct KnotArg {
    /// S(a,b), C[e1,...,e2g] or a knot name.
    #[arg(allow_hyphen_values = true)]
    knot: Option<String>,
    /// Use the knot C[2x,2,-2x,2x,2,-2x].
    #[arg(long, value_name = "X", conflicts_with = "knot")]
    kx: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form, crossing number, genus, Conway form and simple continued fraction.
    Info(KnotArg),
    /// Boundary-slope continued fractions with n+, n-, slope N and weight W.
    Slopes(KnotArg),
    /// Alexander polynomial, Delta''(1) and signature.
    Alexander(KnotArg),
    /// Total seminorm and SL(2,C) Casson invariant of a surgery.
    Casson {
        /// Use the knot C[2x,2,-2x,2x,2,-2x].
        #[arg(long, value_name = "X")]
        kx: Option<u64>,
        /// KNOT, or the slope when --kx is given.
        #[arg(allow_hyphen_values = true)]
        first: String,
        /// Surgery slope p/q or p.
        #[arg(allow_hyphen_values = true)]
        second: Option<String>,
    },
    /// Obstruction verdict for one knot, or for every knot of a census.
    Obstruct {
        #[command(flatten)]
        knot: KnotArg,
        /// All two-bridge knots with at most N crossings.
        #[arg(long, value_name = "N", conflicts_with_all = ["knot", "kx"])]
        census: Option<u32>,
        /// Keep reports whose field equals the value, e.g. sigma=0.
        #[arg(long, value_name = "KEY=VALUE")]
        filter: Vec<String>,
        /// Worker threads for the census.
        #[arg(long, value_name = "N")]
        threads: Option<usize>,
    },
}

#[derive(Debug)]
pub enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(_) | Error::Meridian | Error::Evaluation { .. } => {
                Failure::Input(e.to_string())
            }
            Error::Normalization | Error::Singular | Error::Internal(_) => {
                Failure::Internal(e.to_string())
            }
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Lines,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = if cli.json {
        Format::Json
    } else if cli.jsonl {
        Format::Lines
    } else {
        Format::Text
    };
    match run(cli.command, format) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            // A closed pipe is not an error worth reporting.
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn resolve(arg: &KnotArg) -> Result<SchubertForm, Failure> {
    match (&arg.knot, arg.kx) {
        (_, Some(x)) => Ok(kx_family(x)?),
        (Some(spec), None) => knot_spec::parse(spec),
        (None, None) => Err(Failure::Input("a knot or --kx is required".into())),
    }
}

fn emit(command: &str, format: Format, payload: Value, text: impl FnOnce() -> String) -> String {
    match format {
        Format::Text => text(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&render::document(command, payload))
                .expect("serializable");
            s.push('\n');
            s
        }
        Format::Lines => {
            let mut s =
                serde_json::to_string(&render::document(command, payload)).expect("serializable");
            s.push('\n');
            s
        }
    }
}

fn run(command: Command, format: Format) -> Result<String, Failure> {
    match command {
        Command::Info(arg) => {
            let input = resolve(&arg)?;
            let canonical = normal_form(&input);
            let knot = canonical.form;
            let conway = conway_even_form(&knot)?;
            let info = render::Info {
                input: input.to_string(),
                knot: knot.to_string(),
                mirrored: canonical.mirrored,
                name: names::name_of(&knot).map(str::to_string),
                alpha: knot.alpha().clone(),
                beta: knot.beta().clone(),
                crossing_number: crossing_number(&knot),
                genus: conway.genus(),
                conway: conway.entries().to_vec(),
                simple_cf: simple_cf(&knot.fraction())?,
            };
            Ok(emit("info", format, render::info_json(&info), || render::info_text(&info)))
        }
        Command::Slopes(arg) => {
            let canonical = normal_form(&resolve(&arg)?);
            let sys = enumerate_bscf(&canonical.form)?;
            let name = names::name_of(&sys.knot);
            Ok(emit(
                "slopes",
                format,
                render::slopes_json(&sys, canonical.mirrored, name),
                || render::slopes_text(&sys, canonical.mirrored, name),
            ))
        }
        Command::Alexander(arg) => {
            let canonical = normal_form(&resolve(&arg)?);
            let seifert = seifert_from_conway(&conway_even_form(&canonical.form)?);
            let polynomial = alexander_poly(&seifert)?;
            let a = render::Alexander {
                knot: canonical.form.to_string(),
                mirrored: canonical.mirrored,
                name: names::name_of(&canonical.form).map(str::to_string),
                delta_second: second_derivative_at_one(&polynomial),
                sigma: signature(&seifert)?,
                polynomial,
            };
            Ok(emit("alexander", format, render::alexander_json(&a), || {
                render::alexander_text(&a)
            }))
        }
        Command::Casson { kx, first, second } => {
            let (input, slope) = match (kx, second) {
                (Some(x), None) => (kx_family(x)?, first),
                (None, Some(slope)) => (knot_spec::parse(&first)?, slope),
                _ => {
                    return Err(Failure::Input(
                        "casson takes KNOT SLOPE, or --kx X SLOPE".into(),
                    ))
                }
            };
            let slope: SurgerySlope = slope.parse()?;
            if slope.is_meridian() {
                return Err(Error::Meridian.into());
            }
            let canonical = normal_form(&input);
            let sys = enumerate_bscf(&canonical.form)?;
            let delta = alexander_poly(&seifert_from_conway(&conway_even_form(&canonical.form)?))?;
            let oriented = if canonical.mirrored { slope.negated() } else { slope.clone() };
            let c = render::Casson {
                input: input.to_string(),
                knot: canonical.form.to_string(),
                mirrored: canonical.mirrored,
                seminorm: total_seminorm(&sys, &oriented),
                lambda: lambda_from_system(&sys, &delta, &oriented)?,
                slope,
            };
            Ok(emit("casson", format, render::casson_json(&c), || render::casson_text(&c)))
        }
        Command::Obstruct {
            knot,
            census: Some(n),
            filter,
            threads,
        } => {
            debug_assert!(knot.knot.is_none() && knot.kx.is_none());
            let filters = parse_filters(&filter)?;
            let reports = match threads {
                Some(0) => return Err(Failure::Input("--threads must be positive".into())),
                Some(t) => census_with_threads(n, t)?,
                None => census(n)?,
            };
            let kept: Vec<(ObstructionReport, Value)> = reports
                .into_iter()
                .map(|r| {
                    let v = render::report_json(&r);
                    (r, v)
                })
                .filter(|(_, v)| matches(v, &filters))
                .collect();
            Ok(match format {
                Format::Text => {
                    let reports: Vec<_> = kept.into_iter().map(|(r, _)| r).collect();
                    render::census_text(&reports)
                }
                Format::Json => {
                    let payload = Value::Array(kept.into_iter().map(|(_, v)| v).collect());
                    emit("census", format, payload, String::new)
                }
                Format::Lines => kept
                    .iter()
                    .map(|(_, v)| serde_json::to_string(v).expect("serializable") + "\n")
                    .collect(),
            })
        }
        Command::Obstruct { knot, filter, threads, .. } => {
            if threads.is_some() {
                return Err(Failure::Input("--threads applies to --census only".into()));
            }
            let filters = parse_filters(&filter)?;
            let report = obstruct(&resolve(&knot)?)?;
            let value = render::report_json(&report);
            if !matches(&value, &filters) {
                return Ok(String::new());
            }
            Ok(emit("obstruct", format, value, || render::report_text(&report)))
        }
    }
}

const FILTER_KEYS: &[&str] = &[
    "knot",
    "mirrored",
    "name",
    "crossing_number",
    "delta_second",
    "sigma",
    "casson_difference",
    "verdict",
];

fn parse_filters(raw: &[String]) -> Result<Vec<(String, String)>, Failure> {
    raw.iter()
        .map(|f| {
            let (k, v) = f
                .split_once('=')
                .ok_or_else(|| Failure::Input(format!("filter {f:?} is not KEY=VALUE")))?;
            let k = k.trim();
            if !FILTER_KEYS.contains(&k) {
                return Err(Failure::Input(format!(
                    "unknown filter key {k:?}; expected one of {}",
                    FILTER_KEYS.join(", ")
                )));
            }
            Ok((k.to_string(), v.trim().to_string()))
        })
        .collect()
}

fn matches(report: &Value, filters: &[(String, String)]) -> bool {
    filters.iter().all(|(k, want)| match &report[k.as_str()] {
        Value::String(s) => s == want,
        Value::Null => want == "null",
        other => other.to_string() == *want,
    })
}
