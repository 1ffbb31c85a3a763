//! Cosmetic-surgery obstructions for two-bridge knots.
//!
//! Three tests are applied in order: `Delta''(1) != 0`, then `sigma != 0`
//! (for alternating knots this is `tau != 0`), then a nonzero SL(2,C) Casson
//! difference for the homology-sphere surgeries `+-1/q`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::alexander::{alexander_poly, conway_even_form, second_derivative_at_one, seifert_from_conway, signature};
use crate::casson::cosmetic_difference;
use crate::error::{Error, Result};
use crate::names;
use crate::rational::{crossing_number, normal_form, Rational, SchubertForm};
use crate::slopes::enumerate_bscf;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    /// `Delta''(1) != 0`: no purely cosmetic surgeries at all.
    NoCosmeticBoyerLines,
    /// `sigma != 0`: no purely cosmetic surgeries at all.
    NoCosmeticNiWuTau,
    /// No purely cosmetic pair among the homology-sphere surgeries `+-1/q`.
    NoHomologySphereCosmeticSl2c,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::NoCosmeticBoyerLines => "NoCosmetic_BoyerLines",
            Verdict::NoCosmeticNiWuTau => "NoCosmetic_NiWuTau",
            Verdict::NoHomologySphereCosmeticSl2c => "NoHomologySphereCosmetic_SL2C",
            Verdict::Inconclusive => "Inconclusive",
        }
    }

    /// 1, 2 or 3 for the test that decided, 0 when none did.
    pub fn tier(self) -> u8 {
        match self {
            Verdict::NoCosmeticBoyerLines => 1,
            Verdict::NoCosmeticNiWuTau => 2,
            Verdict::NoHomologySphereCosmeticSl2c => 3,
            Verdict::Inconclusive => 0,
        }
    }

    pub fn from_values(delta_second: &BigInt, sigma: i64, casson_difference: &Rational) -> Self {
        if !delta_second.is_zero() {
            Verdict::NoCosmeticBoyerLines
        } else if sigma != 0 {
            Verdict::NoCosmeticNiWuTau
        } else if !casson_difference.is_zero() {
            Verdict::NoHomologySphereCosmeticSl2c
        } else {
            Verdict::Inconclusive
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionReport {
    /// Normal form of the input.
    pub knot: SchubertForm,
    /// Whether the input is the mirror image of `knot`.
    pub mirrored: bool,
    pub name: Option<String>,
    pub crossing_number: BigInt,
    pub delta_second: BigInt,
    /// Signature of `knot`.
    pub sigma: i64,
    /// Casson difference of the input knot; its sign flips under mirroring.
    pub casson_difference: Rational,
    pub verdict: Verdict,
    pub caveats: Vec<String>,
}

impl ObstructionReport {
    /// Table name, or `S(a,b)` for knots outside the table.
    pub fn display_name(&self) -> String {
        self.name.clone().unwrap_or_else(|| self.knot.to_string())
    }
}

pub fn obstruct(s: &SchubertForm) -> Result<ObstructionReport> {
    let canonical = normal_form(s);
    let knot = canonical.form;
    let conway = conway_even_form(&knot)?;
    let seifert = seifert_from_conway(&conway);
    let delta = alexander_poly(&seifert)?;
    let delta_second = second_derivative_at_one(&delta);
    let sigma = signature(&seifert)?;
    let sys = enumerate_bscf(&knot)?;
    let mut casson_difference = cosmetic_difference(&sys);
    let mut caveats = Vec::new();
    if canonical.mirrored {
        casson_difference = -casson_difference;
        caveats.push(format!(
            "input is the mirror of {knot}; casson_difference refers to the input"
        ));
    }
    let verdict = Verdict::from_values(&delta_second, sigma, &casson_difference);
    match verdict {
        Verdict::NoHomologySphereCosmeticSl2c => caveats.push(
            "only purely cosmetic pairs among the homology-sphere surgeries +-1/q are excluded"
                .to_string(),
        ),
        Verdict::Inconclusive => caveats.push("no obstruction applies".to_string()),
        _ => {}
    }
    Ok(ObstructionReport {
        name: names::name_of(&knot).map(str::to_string),
        crossing_number: crossing_number(&knot),
        knot,
        mirrored: canonical.mirrored,
        delta_second,
        sigma,
        casson_difference,
        verdict,
        caveats,
    })
}

/// Candidate slope pair `(p/q1, -p/q1)` for a purely cosmetic surgery.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiWuPair {
    pub p: BigInt,
    pub q1: BigInt,
}

impl NiWuPair {
    pub fn q2(&self) -> BigInt {
        -&self.q1
    }
}

/// Every `q` in `1..=q_max` coprime to `p` with `q^2 = -1 (mod p)`.
pub fn niwu_candidate_slopes(p: &BigInt, q_max: u64) -> Vec<NiWuPair> {
    assert!(p.is_positive(), "p must be positive");
    (1..=q_max)
        .map(BigInt::from)
        .filter(|q| q.gcd(p).is_one() && ((q * q) + 1u32).is_multiple_of(p))
        .map(|q1| NiWuPair { p: p.clone(), q1 })
        .collect()
}

/// Representatives of the two-bridge knot classes with at most `max_crossings`
/// crossings, mirror pairs merged, ordered by `(alpha, beta)` of the normal form.
pub fn census_knots(max_crossings: u32) -> Vec<SchubertForm> {
    // Every knot with n crossings has alpha <= F(n+1).
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..max_crossings + 2 {
        (a, b) = (b, a + b);
    }
    let bound = a;
    let max = BigInt::from(max_crossings);
    let mut classes = BTreeMap::new();
    for alpha in (3..=bound).step_by(2) {
        for beta in 1..alpha {
            if alpha.gcd(&beta) != 1 {
                continue;
            }
            let s = SchubertForm::from_i64(alpha as i64, beta as i64).expect("valid");
            if crossing_number(&s) > max {
                continue;
            }
            classes
                .entry((alpha, s.class_key()))
                .or_insert_with(|| normal_form(&s).form);
        }
    }
    let mut knots: Vec<SchubertForm> = classes.into_values().collect();
    knots.sort_by(|x, y| (x.alpha(), x.beta()).cmp(&(y.alpha(), y.beta())));
    knots
}

/// One report per two-bridge knot class with at most `max_crossings` crossings,
/// computed on the global thread pool.
pub fn census(max_crossings: u32) -> Result<Vec<ObstructionReport>> {
    if max_crossings < 3 {
        return Err(Error::Domain(format!(
            "census needs at least 3 crossings, got {max_crossings}"
        )));
    }
    census_knots(max_crossings).par_iter().map(obstruct).collect()
}

/// As [`census`] on a dedicated pool of `threads` workers.
pub fn census_with_threads(max_crossings: u32, threads: usize) -> Result<Vec<ObstructionReport>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Internal(e.to_string()))?;
    pool.install(|| census(max_crossings))
}
