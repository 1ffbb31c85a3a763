//! Acceptance checks, all exact. Each test prints one PASS or FAIL line
//! (written past the test harness capture) and fails on any mismatch.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::collections::BTreeSet;
use std::io::Write;
use std::process::Command;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

use twobridge::alexander::{
    conway_even_form, kx_alexander_closed, knot_alexander, knot_seifert_matrix,
    second_derivative_at_one, seifert_determinant_at, seifert_from_conway, signature,
};
use twobridge::casson::{cosmetic_difference, lambda_difference};
use twobridge::laurent::LaurentPolynomial;
use twobridge::obstruction::{census, obstruct, Verdict};
use twobridge::rational::{
    cf_eval, kx_family, normal_form, simple_cf, Rational, SchubertForm,
};
use twobridge::slopes::{enumerate_bscf, mmr_substitution_enumerate, SlopeSystem};

fn conclude(title: &str, failures: Vec<String>) {
    {
        let mut out = std::io::stdout().lock();
        if failures.is_empty() {
            writeln!(out, "\nPASS  {title}").unwrap();
        } else {
            writeln!(out, "\nFAIL  {title} ({} mismatches)", failures.len()).unwrap();
            for f in failures.iter().take(12) {
                writeln!(out, "        {f}").unwrap();
            }
        }
    }
    assert!(failures.is_empty(), "{title}: {failures:#?}");
}

fn cli(args: &[&str]) -> Value {
    let out = Command::new(env!("CARGO_BIN_EXE_twobridge"))
        .args(args)
        .output()
        .expect("binary runs");
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn s(a: i64, b: i64) -> SchubertForm {
    SchubertForm::from_i64(a, b).unwrap()
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `(terms, n+, n-, N, W)` for the ten expansions of 18/49, as tabulated.
const NINE_27_TABLE: [(&[i64], usize, usize, i64, i64); 10] = [
    (&[0, 2, 2, -2, 2, 2, -2], 3, 3, 0, 1),
    (&[0, 2, 2, -2, 3, -3], 1, 4, -6, 4),
    (&[0, 3, -3, -2, 3], 2, 2, 0, 8),
    (&[0, 3, -4, 2, 2], 3, 1, 4, 6),
    (&[0, 3, -4, 3, -2], 4, 0, 8, 12),
    (&[1, -2, 2, 2, 2, -3], 1, 4, -6, 2),
    (&[1, -2, 2, 3, -2, -2], 2, 3, -2, 2),
    (&[1, -2, 2, 3, -3, 2], 2, 3, -2, 4),
    (&[1, -2, 3, -2, 2, 2, -2], 2, 4, -4, 2),
    (&[1, -2, 3, -2, 3, -3], 0, 5, -10, 8),
];

#[test]
fn nine_27_slope_table() {
    let mut failures = Vec::new();
    let doc = cli(&["slopes", "S(49,19)", "--json"]);
    let records = doc["payload"]["records"].as_array().expect("records").clone();
    if records.len() != 10 {
        failures.push(format!("expected 10 expansions, got {}", records.len()));
    }
    for (case, (terms, n_plus, n_minus, slope, weight)) in NINE_27_TABLE.iter().enumerate() {
        let want: Vec<Value> = terms.iter().map(|&t| t.into()).collect();
        let Some(got) = records.iter().find(|r| r["cf"].as_array() == Some(&want)) else {
            failures.push(format!("case {}: {terms:?} not enumerated", case + 1));
            continue;
        };
        let got = (
            got["n_plus"].as_u64().unwrap() as usize,
            got["n_minus"].as_u64().unwrap() as usize,
            got["slope"].as_i64().unwrap(),
            got["weight"].as_i64().unwrap(),
        );
        if got != (*n_plus, *n_minus, *slope, *weight) {
            failures.push(format!(
                "case {} {terms:?}: tabulated (n+, n-, N, W) = {:?}, computed {got:?}",
                case + 1,
                (n_plus, n_minus, slope, weight)
            ));
        }
    }
    let sys = enumerate_bscf(&normal_form(&s(49, 19)).form).unwrap();
    if sys.records.len() != 10 {
        failures.push(format!("library enumerates {} expansions", sys.records.len()));
    }
    conclude("9_27 slope table (10 expansions, every column)", failures);
}

fn check_kx_table(x: u64, sys: &SlopeSystem, failures: &mut Vec<String>) {
    let cases = common::kx_cases(x as i64);
    if sys.records.len() != 25 {
        failures.push(format!("x = {x}: {} expansions", sys.records.len()));
    }
    for case in cases {
        let terms = case.terms_big();
        match sys.records.iter().find(|r| r.cf.terms() == terms.as_slice()) {
            None => failures.push(format!("x = {x}, case {}: not enumerated", case.number)),
            Some(r) => {
                let got = (r.n_plus, r.n_minus, r.slope, r.weight.clone());
                let want = (case.n_plus, case.n_minus, case.slope, BigInt::from(case.weight));
                if got != want {
                    failures.push(format!("x = {x}, case {}: {want:?} vs {got:?}", case.number));
                }
            }
        }
    }
}

#[test]
fn kx_slope_tables() {
    let mut failures = Vec::new();
    for x in 2..=6u64 {
        let sys = enumerate_bscf(&kx_family(x).unwrap()).unwrap();
        check_kx_table(x, &sys, &mut failures);
        let xi = x as i64;
        for (case, slope, weight) in [
            (15, 8 * xi, 16 * xi * (2 * xi - 1)),
            (23, -4 * xi, 2 * (2 * xi - 1).pow(3)),
            (25, -8 * xi - 2, 8 * xi * (2 * xi - 1)),
        ] {
            let c = &common::kx_cases(xi)[case - 1];
            if (c.slope, c.weight) != (slope, weight) {
                failures.push(format!("x = {x}: closed form of case {case} mistabulated"));
            }
        }
    }
    let doc = cli(&["slopes", "--kx", "2", "--json"]);
    if doc["payload"]["records"].as_array().map(Vec::len) != Some(25) {
        failures.push("slopes --kx 2 does not list 25 records".into());
    }
    conclude("K_x slope tables for x = 2..6 (25 expansions each)", failures);
}

#[test]
fn kx_cosmetic_difference() {
    let mut failures = Vec::new();
    for x in 2..=10i64 {
        let sys = enumerate_bscf(&kx_family(x as u64).unwrap()).unwrap();
        let got = cosmetic_difference(&sys);
        let want = int(8 * x * x - 12 * x + 2);
        if got != want {
            failures.push(format!("x = {x}: {got} vs 8x^2-12x+2 = {want}"));
        }
    }
    // x = 1 against the tabulated case weights.
    let sys = enumerate_bscf(&kx_family(1).unwrap()).unwrap();
    let got = cosmetic_difference(&sys);
    let oracle: i64 = NINE_27_TABLE
        .iter()
        .map(|&(_, _, _, n, w)| match n.signum() {
            -1 => w,
            1 => -w,
            _ => 0,
        })
        .sum();
    let oracle = Rational::new(oracle.into(), 2.into());
    if got.is_zero() {
        failures.push("x = 1: difference vanishes".into());
    }
    if got != oracle {
        failures.push(format!("x = 1: computed {got}, tabulated case weights give {oracle}"));
    }
    let doc = cli(&["obstruct", "--kx", "1", "--json"]);
    if doc["payload"]["casson_difference"] != Value::String(oracle.to_string()) {
        failures.push(format!(
            "obstruct --kx 1 reports {}, tabulated case weights give {oracle}",
            doc["payload"]["casson_difference"]
        ));
    }
    conclude("K_x Casson difference 8x^2-12x+2 (x = 2..10) and x = 1", failures);
}

#[test]
fn tau_trivial_alexander_table() {
    let mut failures = Vec::new();
    let table = common::tau_trivial_table();
    if table.len() != 13 {
        failures.push(format!("{} rows", table.len()));
    }
    for (name, alpha, beta, coeffs, second) in table {
        let genus = (coeffs.len() as i64 - 1) / 2;
        let want = LaurentPolynomial::from_coeffs(-genus, &coeffs);
        let got = knot_alexander(&s(alpha, beta)).unwrap();
        if got != want {
            failures.push(format!("{name}: Delta = {got}, tabulated {want}"));
        }
        let d2 = second_derivative_at_one(&got);
        if d2 != BigInt::from(second) {
            failures.push(format!("{name}: Delta''(1) = {d2}, tabulated {second}"));
        }
    }
    let doc = cli(&["alexander", "S(25,9)", "--json"]);
    if doc["payload"]["delta_second"] != Value::from(4) {
        failures.push("alexander S(25,9) does not give Delta''(1) = 4".into());
    }
    conclude("Alexander polynomials and Delta''(1) of the 13 tau-trivial knots", failures);
}

#[test]
fn nine_crossing_census() {
    let mut failures = Vec::new();
    let reports = census(9).unwrap();
    let want: BTreeSet<(BigInt, BigInt)> = common::tau_trivial_table()
        .iter()
        .map(|&(_, a, b, _, _)| (a.into(), s(a, b).class_key()))
        .collect();
    let trivial: Vec<_> = reports.iter().filter(|r| r.sigma == 0).collect();
    let got: BTreeSet<(BigInt, BigInt)> = trivial
        .iter()
        .map(|r| (r.knot.alpha().clone(), r.knot.class_key()))
        .collect();
    if got != want || trivial.len() != 13 {
        failures.push(format!("sigma = 0 classes {got:?}"));
    }
    let nine_27 = (BigInt::from(49), s(49, 19).class_key());
    for r in &reports {
        let is_927 = (r.knot.alpha().clone(), r.knot.class_key()) == nine_27;
        if r.verdict != Verdict::from_values(&r.delta_second, r.sigma, &r.casson_difference) {
            failures.push(format!("{}: verdict out of tier order", r.knot));
        }
        if r.sigma == 0 && r.delta_second.is_zero() && !is_927 {
            failures.push(format!("{}: Delta''(1) = 0", r.knot));
        }
        let ok = if is_927 {
            r.delta_second.is_zero() && r.verdict == Verdict::NoHomologySphereCosmeticSl2c
        } else {
            matches!(r.verdict, Verdict::NoCosmeticBoyerLines | Verdict::NoCosmeticNiWuTau)
        };
        if !ok {
            failures.push(format!("{}: verdict {}", r.display_name(), r.verdict));
        }
    }
    let out = Command::new(env!("CARGO_BIN_EXE_twobridge"))
        .args(["obstruct", "--census", "9", "--filter", "sigma=0", "--jsonl"])
        .output()
        .unwrap();
    let lines = String::from_utf8(out.stdout).unwrap().lines().count();
    if lines != 13 {
        failures.push(format!("obstruct --census 9 --filter sigma=0 gives {lines} lines"));
    }
    conclude("census through 9 crossings: 13 tau-trivial classes, only 9_27 reaches SL(2,C)", failures);
}

#[test]
fn kx_alexander_identities() {
    let mut failures = Vec::new();
    for x in 1..=6u64 {
        let knot = kx_family(x).unwrap();
        let seifert = seifert_from_conway(&conway_even_form(&knot).unwrap());
        let pipeline = twobridge::alexander::alexander_poly(&seifert).unwrap();
        if pipeline != kx_alexander_closed(x) {
            failures.push(format!("x = {x}: pipeline {pipeline} vs closed form"));
        }
    }
    for x in 1..=20u64 {
        let d2 = second_derivative_at_one(&kx_alexander_closed(x));
        if !d2.is_zero() {
            failures.push(format!("x = {x}: Delta''(1) = {d2}"));
        }
    }
    for x in 1..=10u64 {
        let sigma = signature(&knot_seifert_matrix(&kx_family(x).unwrap()).unwrap()).unwrap();
        if sigma != 0 {
            failures.push(format!("x = {x}: sigma = {sigma}"));
        }
    }
    for x in 1..=10u64 {
        let v = obstruct(&kx_family(x).unwrap()).unwrap().verdict;
        if v != Verdict::NoHomologySphereCosmeticSl2c {
            failures.push(format!("x = {x}: verdict {v}"));
        }
    }
    conclude("K_x Alexander closed form, Delta''(1) = 0 and sigma = 0", failures);
}

fn even_presentations(max_alpha: i64) -> impl Iterator<Item = SchubertForm> {
    (3..=max_alpha).step_by(2).flat_map(|a| {
        (2..a)
            .step_by(2)
            .filter(move |b| num_integer::gcd(a, *b) == 1)
            .map(move |b| s(a, b))
    })
}

#[test]
fn substitution_enumerator_agreement() {
    let mut failures = Vec::new();
    let mut checked = 0usize;
    let knots = even_presentations(200).chain((1..=4).map(|x| kx_family(x).unwrap()));
    for knot in knots {
        let dfs = enumerate_bscf(&knot).unwrap().term_set();
        let subs: BTreeSet<Vec<BigInt>> = mmr_substitution_enumerate(&simple_cf(&knot.fraction()).unwrap())
            .unwrap()
            .into_iter()
            .map(|cf| cf.into_terms())
            .collect();
        if dfs != subs {
            failures.push(format!("{knot}: {} vs {} expansions", dfs.len(), subs.len()));
        }
        checked += 1;
    }
    if checked < 4000 {
        failures.push(format!("only {checked} knots checked"));
    }
    conclude("substitution enumerator equals exhaustive search (alpha <= 200, K_1..K_4)", failures);
}

#[test]
fn property_sweeps() {
    let mut failures = Vec::new();
    let minus_one = -BigInt::one();
    for alpha in (3i64..=1999).step_by(2) {
        for beta in 1..alpha {
            if num_integer::gcd(alpha, beta) != 1 {
                continue;
            }
            let r = Rational::new(beta.into(), alpha.into());
            let cf = simple_cf(&r).unwrap();
            if cf_eval(&cf).unwrap() != r {
                failures.push(format!("{beta}/{alpha}: round trip through {cf}"));
            }
            if beta % 2 == 0 {
                let seifert = seifert_from_conway(&conway_even_form(&s(alpha, beta)).unwrap());
                let det = seifert_determinant_at(&seifert, &minus_one).abs();
                if det != BigInt::from(alpha) {
                    failures.push(format!("S({alpha},{beta}): |Delta(-1)| = {det}"));
                }
            }
        }
    }
    for knot in even_presentations(200) {
        let sys = enumerate_bscf(&knot).unwrap();
        let d = cosmetic_difference(&sys);
        for q in 1..=10 {
            if lambda_difference(&sys, &BigInt::one(), &BigInt::from(q)) != d {
                failures.push(format!("{knot}: difference depends on q = {q}"));
            }
        }
    }
    for knot in even_presentations(61) {
        let d = knot_alexander(&knot).unwrap().eval_unit(-1).abs();
        if d != *knot.alpha() {
            failures.push(format!("{knot}: full polynomial gives |Delta(-1)| = {d}"));
        }
    }
    for knot in even_presentations(99) {
        let a = obstruct(&knot).unwrap();
        let b = obstruct(&knot.mirror()).unwrap();
        if a.knot != b.knot
            || a.delta_second != b.delta_second
            || a.sigma != b.sigma
            || a.casson_difference.abs() != b.casson_difference.abs()
            || a.verdict != b.verdict
        {
            failures.push(format!("{knot}: mirror changes the report"));
        }
    }
    let fig8 = enumerate_bscf(&s(5, 2)).unwrap().distinct_slopes();
    if fig8 != vec![-4, 0, 4] {
        failures.push(format!("figure-eight slopes {fig8:?}"));
    }
    conclude(
        "round trip and |Delta(-1)| = alpha (alpha < 2000), q-independence, mirror robustness, figure-eight slopes",
        failures,
    );
}
