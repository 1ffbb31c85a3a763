//! JSON payloads and plain-text tables for each command.

use num_bigint::BigInt;
use serde_json::{json, Map, Value};
use twobridge::casson::{LambdaValue, SurgerySlope};
use twobridge::laurent::LaurentPolynomial;
use twobridge::obstruction::ObstructionReport;
use twobridge::rational::{ContinuedFraction, Rational};
use twobridge::slopes::SlopeSystem;

pub const SCHEMA_VERSION: &str = "1";

/// Exact JSON integer of any size.
pub fn int(v: &BigInt) -> Value {
    serde_json::from_str(&v.to_string()).expect("integer literal")
}

/// `"p/q"`, or `"p"` for integral values.
pub fn rational(r: &Rational) -> Value {
    Value::String(rational_text(r))
}

pub fn rational_text(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn ints(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

pub fn document(command: &str, payload: Value) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "payload": payload,
    })
}

pub struct Info {
    pub input: String,
    pub knot: String,
    pub mirrored: bool,
    pub name: Option<String>,
    pub alpha: BigInt,
    pub beta: BigInt,
    pub crossing_number: BigInt,
    pub genus: usize,
    pub conway: Vec<BigInt>,
    pub simple_cf: ContinuedFraction,
}

pub fn info_json(i: &Info) -> Value {
    json!({
        "input": i.input,
        "knot": i.knot,
        "alpha": int(&i.alpha),
        "beta": int(&i.beta),
        "mirrored": i.mirrored,
        "name": i.name,
        "crossing_number": int(&i.crossing_number),
        "genus": i.genus,
        "conway": ints(&i.conway),
        "simple_cf": ints(i.simple_cf.terms()),
    })
}

pub fn info_text(i: &Info) -> String {
    let conway: Vec<String> = i.conway.iter().map(BigInt::to_string).collect();
    rows(&[
        ("knot", i.knot.clone()),
        ("input", i.input.clone()),
        ("mirrored", i.mirrored.to_string()),
        ("name", i.name.clone().unwrap_or_else(|| "-".into())),
        ("crossings", i.crossing_number.to_string()),
        ("genus", i.genus.to_string()),
        ("conway", format!("C[{}]", conway.join(","))),
        ("simple cf", i.simple_cf.to_string()),
    ])
}

pub fn slopes_json(sys: &SlopeSystem, mirrored: bool, name: Option<&str>) -> Value {
    let records: Vec<Value> = sys
        .records
        .iter()
        .map(|r| {
            json!({
                "cf": ints(r.cf.terms()),
                "n_plus": r.n_plus,
                "n_minus": r.n_minus,
                "slope": r.slope,
                "weight": int(&r.weight),
            })
        })
        .collect();
    json!({
        "knot": sys.knot.to_string(),
        "mirrored": mirrored,
        "name": name,
        "longitude_index": sys.longitude_index,
        "records": records,
    })
}

pub fn slopes_text(sys: &SlopeSystem, mirrored: bool, name: Option<&str>) -> String {
    let mut out = format!(
        "{}{}{}: {} expansions\n",
        sys.knot,
        name.map(|n| format!(" ({n})")).unwrap_or_default(),
        if mirrored { ", mirror of the input" } else { "" },
        sys.records.len()
    );
    let width = sys
        .records
        .iter()
        .map(|r| r.cf.to_string().len())
        .max()
        .unwrap_or(0)
        .max(2);
    out.push_str(&format!(
        "{:>3}  {:<width$}  {:>3}  {:>3}  {:>5}  {}\n",
        "#", "cf", "n+", "n-", "N", "W"
    ));
    for (i, r) in sys.records.iter().enumerate() {
        let mark = if i == sys.longitude_index { "  longitude" } else { "" };
        out.push_str(&format!(
            "{:>3}  {:<width$}  {:>3}  {:>3}  {:>5}  {}{mark}\n",
            i + 1,
            r.cf.to_string(),
            r.n_plus,
            r.n_minus,
            r.slope,
            r.weight
        ));
    }
    out
}

pub struct Alexander {
    pub knot: String,
    pub mirrored: bool,
    pub name: Option<String>,
    pub polynomial: LaurentPolynomial,
    pub delta_second: BigInt,
    pub sigma: i64,
}

pub fn alexander_json(a: &Alexander) -> Value {
    let coefficients: Map<String, Value> = a
        .polynomial
        .terms()
        .map(|(e, c)| (e.to_string(), int(c)))
        .collect();
    json!({
        "knot": a.knot,
        "mirrored": a.mirrored,
        "name": a.name,
        "polynomial": coefficients,
        "display": a.polynomial.to_string(),
        "delta_second": int(&a.delta_second),
        "sigma": a.sigma,
    })
}

pub fn alexander_text(a: &Alexander) -> String {
    rows(&[
        ("knot", a.knot.clone()),
        ("mirrored", a.mirrored.to_string()),
        ("name", a.name.clone().unwrap_or_else(|| "-".into())),
        ("Delta(t)", a.polynomial.to_string()),
        ("Delta''(1)", a.delta_second.to_string()),
        ("sigma", a.sigma.to_string()),
    ])
}

pub struct Casson {
    pub input: String,
    pub knot: String,
    pub mirrored: bool,
    pub slope: SurgerySlope,
    pub seminorm: Rational,
    pub lambda: LambdaValue,
}

pub fn casson_json(c: &Casson) -> Value {
    json!({
        "input": c.input,
        "knot": c.knot,
        "mirrored": c.mirrored,
        "slope": c.slope.to_string(),
        "seminorm": rational(&c.seminorm),
        "lambda": rational(&c.lambda.value),
        "hypotheses_ok": c.lambda.hypotheses_ok,
        "caveats": c.lambda.caveats,
    })
}

pub fn casson_text(c: &Casson) -> String {
    let mut r = vec![
        ("input", c.input.clone()),
        ("slope", c.slope.to_string()),
        ("seminorm", rational_text(&c.seminorm)),
        ("lambda", rational_text(&c.lambda.value)),
        ("hypotheses ok", c.lambda.hypotheses_ok.to_string()),
    ];
    for caveat in &c.lambda.caveats {
        r.push(("caveat", caveat.clone()));
    }
    rows(&r)
}

pub fn report_json(r: &ObstructionReport) -> Value {
    json!({
        "knot": r.knot.to_string(),
        "mirrored": r.mirrored,
        "name": r.name,
        "crossing_number": int(&r.crossing_number),
        "delta_second": int(&r.delta_second),
        "sigma": r.sigma,
        "casson_difference": rational(&r.casson_difference),
        "verdict": r.verdict.as_str(),
        "caveats": r.caveats,
    })
}

pub fn report_text(r: &ObstructionReport) -> String {
    let mut out = vec![
        ("knot", r.knot.to_string()),
        ("mirrored", r.mirrored.to_string()),
        ("name", r.display_name()),
        ("crossings", r.crossing_number.to_string()),
        ("Delta''(1)", r.delta_second.to_string()),
        ("sigma", r.sigma.to_string()),
        ("casson difference", rational_text(&r.casson_difference)),
        ("verdict", r.verdict.to_string()),
    ];
    for caveat in &r.caveats {
        out.push(("caveat", caveat.clone()));
    }
    rows(&out)
}

pub fn census_text(reports: &[ObstructionReport]) -> String {
    let header = ["name", "knot", "c", "Delta''(1)", "sigma", "casson", "verdict"];
    let body: Vec<[String; 7]> = reports
        .iter()
        .map(|r| {
            [
                r.display_name(),
                r.knot.to_string(),
                r.crossing_number.to_string(),
                r.delta_second.to_string(),
                r.sigma.to_string(),
                rational_text(&r.casson_difference),
                r.verdict.to_string(),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &body {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, (cell, w)) in cells.iter().zip(widths).enumerate() {
            if i + 1 == cells.len() {
                s.push_str(cell);
            } else {
                s.push_str(&format!("{cell:<w$}  "));
            }
        }
        s.push('\n');
        s
    };
    let mut out = line(header.to_vec());
    for row in &body {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out.push_str(&format!("{} knots\n", reports.len()));
    out
}

fn rows(pairs: &[(&str, String)]) -> String {
    let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    pairs
        .iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect()
}
