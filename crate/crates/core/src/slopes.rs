//! Boundary-slope continued fractions of two-bridge knots.
//!
//! Every expansion `[c, b1, ..., bn]` of `beta/alpha` whose partial quotients all
//! satisfy `|bi| >= 2` carries an essential surface. Its boundary slope is
//! `2((n+ - n-) - (n0+ - n0-))`, where `n+`/`n-` count the terms whose sign
//! agrees/disagrees with the alternating pattern `+ - + - ...` and the `n0`
//! counts come from the unique all-even expansion (the Seifert surface).
//!
//! Two independent enumerators are provided: [`enumerate_bscf`] searches all
//! such expansions directly, and [`mmr_substitution_enumerate`] rewrites the
//! simple continued fraction at sets of non-adjacent positions.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::{cf_eval, simple_cf, ContinuedFraction, Rational, SchubertForm};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundarySlopeRecord {
    pub cf: ContinuedFraction,
    pub n_plus: usize,
    pub n_minus: usize,
    /// The boundary slope `N`; always even.
    pub slope: i64,
    /// `W = prod(|b| - 1)` over the partial quotients.
    pub weight: BigInt,
}

impl BoundarySlopeRecord {
    pub fn is_all_even(&self) -> bool {
        self.cf.tail().iter().all(Integer::is_even)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlopeSystem {
    pub knot: SchubertForm,
    pub records: Vec<BoundarySlopeRecord>,
    pub longitude_index: usize,
}

impl SlopeSystem {
    pub fn longitude(&self) -> &BoundarySlopeRecord {
        &self.records[self.longitude_index]
    }

    /// Distinct boundary slopes, ascending.
    pub fn distinct_slopes(&self) -> Vec<i64> {
        self.records
            .iter()
            .map(|r| r.slope)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    /// Term lists of every record, as a set.
    pub fn term_set(&self) -> BTreeSet<Vec<BigInt>> {
        self.records
            .iter()
            .map(|r| r.cf.terms().to_vec())
            .collect()
    }
}

/// `(n+, n-)`: position `j` (1-based over the partial quotients) matches when
/// its sign is `+` for odd `j` and `-` for even `j`.
pub fn pattern_counts(cf: &ContinuedFraction) -> (usize, usize) {
    let matches = cf
        .tail()
        .iter()
        .enumerate()
        .filter(|(i, b)| if i % 2 == 0 { b.is_positive() } else { b.is_negative() })
        .count();
    (matches, cf.tail().len() - matches)
}

pub fn weight(cf: &ContinuedFraction) -> Result<BigInt> {
    let two = BigInt::from(2);
    cf.tail().iter().try_fold(BigInt::one(), |acc, b| {
        let m = b.abs();
        if m < two {
            return Err(Error::Domain(format!(
                "weight needs every partial quotient of {cf} to satisfy |b| >= 2"
            )));
        }
        Ok(acc * (m - 1u32))
    })
}

pub fn slope_of(cf: &ContinuedFraction, longitude: &ContinuedFraction) -> i64 {
    let (p, m) = pattern_counts(cf);
    let (p0, m0) = pattern_counts(longitude);
    2 * ((p as i64 - m as i64) - (p0 as i64 - m0 as i64))
}

/// All boundary-slope continued fractions of `s`, which must have even beta
/// (see [`crate::rational::canonicalize`]).
///
/// The integer part is 0 or 1. The remaining target `t` is expanded depth
/// first; at `t = p/q` the next term is `floor(t)` or `ceil(t)`, or `t` itself
/// when `t` is an integer, and the search recurses on `1/(t - a)`. A tail with
/// every `|b| >= 2` has absolute value above 1, so no other choice can lead to
/// a valid expansion, and the residual denominator strictly decreases.
pub fn enumerate_bscf(s: &SchubertForm) -> Result<SlopeSystem> {
    if s.beta().is_odd() {
        return Err(Error::Domain(format!(
            "{s} has odd beta; canonicalize before enumerating boundary slopes"
        )));
    }
    let target = s.fraction();
    let simple = simple_cf(&target)?;
    let depth_bound: usize = simple
        .tail()
        .iter()
        .sum::<BigInt>()
        .to_usize()
        .map_or(usize::MAX, |n| n + 2);

    let mut found: Vec<Vec<BigInt>> = Vec::new();
    for c in [0i64, 1] {
        let c = BigInt::from(c);
        let rest = &target - Rational::from_integer(c.clone());
        let mut prefix = vec![c];
        expand(&rest.recip(), &mut prefix, depth_bound, &mut found)?;
    }

    let mut seen = BTreeSet::new();
    found.retain(|t| seen.insert(t.clone()));

    let cfs: Vec<ContinuedFraction> = found
        .into_iter()
        .map(ContinuedFraction::new)
        .collect::<Result<_>>()?;
    build_system(s.clone(), cfs)
}

fn expand(
    t: &Rational,
    prefix: &mut Vec<BigInt>,
    depth_bound: usize,
    out: &mut Vec<Vec<BigInt>>,
) -> Result<()> {
    if prefix.len() > depth_bound {
        return Err(Error::Internal(format!(
            "boundary slope search exceeded depth {depth_bound}"
        )));
    }
    let two = BigInt::from(2);
    if t.is_integer() {
        if t.numer().abs() >= two {
            prefix.push(t.numer().clone());
            out.push(prefix.clone());
            prefix.pop();
        }
        return Ok(());
    }
    let floor = t.floor().to_integer();
    let ceil = &floor + 1;
    for a in [floor, ceil] {
        if a.abs() < two {
            continue;
        }
        let residual = t - Rational::from_integer(a.clone());
        prefix.push(a);
        expand(&residual.recip(), prefix, depth_bound, out)?;
        prefix.pop();
    }
    Ok(())
}

/// Package continued fractions into records relative to the unique all-even one.
pub fn build_system(knot: SchubertForm, cfs: Vec<ContinuedFraction>) -> Result<SlopeSystem> {
    let evens: Vec<usize> = cfs
        .iter()
        .enumerate()
        .filter(|(_, cf)| cf.tail().iter().all(Integer::is_even))
        .map(|(i, _)| i)
        .collect();
    let longitude_index = match evens.as_slice() {
        [i] => *i,
        _ => {
            return Err(Error::Internal(format!(
                "{knot}: expected exactly one all-even expansion, found {}",
                evens.len()
            )))
        }
    };
    let longitude = cfs[longitude_index].clone();
    let records = cfs
        .into_iter()
        .map(|cf| {
            let (n_plus, n_minus) = pattern_counts(&cf);
            let slope = slope_of(&cf, &longitude);
            let weight = weight(&cf)?;
            Ok(BoundarySlopeRecord {
                cf,
                n_plus,
                n_minus,
                slope,
                weight,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SlopeSystem {
        knot,
        records,
        longitude_index,
    })
}

/// Rewrite `simple` at the given 1-based positions (indices into the partial
/// quotients; position 1 also bumps the integer part). Positions must be
/// pairwise non-adjacent.
///
/// At position `k` with preceding term `b0` and following terms `b2, b3, ...`:
/// an even term `2m` becomes `b0+1, (-2,2)^(m-1), -2, b2+1, b3, ...`; an odd
/// term `2m+1` becomes `b0+1, (-2,2)^m, -b2-1, -b3, ...`. Both rewrites
/// preserve the value for any tail, so they are applied right to left to the
/// current term list.
pub fn apply_substitutions(
    simple: &ContinuedFraction,
    positions: &[usize],
) -> Result<ContinuedFraction> {
    let n = simple.tail().len();
    let mut sorted = positions.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.iter().any(|&k| k == 0 || k > n) {
        return Err(Error::Domain(format!(
            "substitution positions must lie in 1..={n}"
        )));
    }
    if sorted.windows(2).any(|w| w[1] == w[0] + 1) {
        return Err(Error::Domain("substitution positions must be non-adjacent".into()));
    }
    if simple.tail().iter().any(|b| !b.is_positive()) {
        return Err(Error::Domain(format!(
            "{simple} is not a simple continued fraction"
        )));
    }

    let mut terms = simple.terms().to_vec();
    for &k in sorted.iter().rev() {
        let a = terms[k].clone();
        let mut replacement = vec![&terms[k - 1] + 1];
        let rest = &terms[k + 1..];
        let (half, rem) = a.div_rem(&BigInt::from(2));
        let half = half.to_usize().ok_or_else(|| {
            Error::Domain(format!("partial quotient {a} too large to substitute"))
        })?;
        if rem.is_zero() {
            for _ in 1..half {
                replacement.push(BigInt::from(-2));
                replacement.push(BigInt::from(2));
            }
            replacement.push(BigInt::from(-2));
            if let Some((first, others)) = rest.split_first() {
                replacement.push(first + 1);
                replacement.extend(others.iter().cloned());
            }
        } else {
            for _ in 0..half {
                replacement.push(BigInt::from(-2));
                replacement.push(BigInt::from(2));
            }
            if let Some((first, others)) = rest.split_first() {
                replacement.push(-first - 1);
                replacement.extend(others.iter().map(|b| -b));
            }
        }
        terms.truncate(k - 1);
        terms.extend(replacement);
    }
    ContinuedFraction::new(terms)
}

/// Boundary-slope continued fractions obtained from every admissible set of
/// non-adjacent substitution positions, sorted by term list.
pub fn mmr_substitution_enumerate(simple: &ContinuedFraction) -> Result<Vec<ContinuedFraction>> {
    let n = simple.tail().len();
    let two = BigInt::from(2);
    let mut out = BTreeSet::new();
    let mut chosen = Vec::new();
    let mut subsets = Vec::new();
    non_adjacent_subsets(1, n, &mut chosen, &mut subsets);
    for positions in subsets {
        let cf = apply_substitutions(simple, &positions)?;
        if cf.tail().iter().all(|b| b.abs() >= two) {
            out.insert(cf);
        }
    }
    Ok(out.into_iter().collect())
}

fn non_adjacent_subsets(
    next: usize,
    n: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if next > n {
        out.push(chosen.clone());
        return;
    }
    non_adjacent_subsets(next + 1, n, chosen, out);
    chosen.push(next);
    non_adjacent_subsets(next + 2, n, chosen, out);
    chosen.pop();
}

/// True when every record evaluates to the knot's fraction.
pub fn values_preserved(sys: &SlopeSystem) -> bool {
    let target = sys.knot.fraction();
    sys.records
        .iter()
        .all(|r| cf_eval(&r.cf).map(|v| v == target).unwrap_or(false))
}
