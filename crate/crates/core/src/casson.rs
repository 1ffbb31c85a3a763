//! Total Culler-Shalen seminorm and the SL(2,C) Casson invariant of Dehn
//! surgeries on two-bridge knots.
//!
//! With boundary slopes `N_i` and weights `W_i`,
//! `||p/q||_T = (-|p| + sum_i W_i |p - q N_i|) / 2`, and when the surgery
//! formula applies `lambda(K(p/q))` is `||p/q||_T / 2` for even `p` and
//! `||p/q||_T / 2 - (alpha - 1) / 4` for odd `p`. Every sum runs over
//! continued-fraction records, so two records with the same slope both count.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::alexander::knot_alexander;
use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::rational::{normal_form, Rational, SchubertForm};
use crate::slopes::{enumerate_bscf, SlopeSystem};

/// Surgery slope `p/q` with `q >= 1` and `gcd(|p|, q) = 1`; `1/0` is the meridian.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SurgerySlope {
    p: BigInt,
    q: BigInt,
}

impl SurgerySlope {
    /// Sign is moved to `p`; `(+-1, 0)` gives the meridian.
    pub fn new(p: BigInt, q: BigInt) -> Result<Self> {
        let (p, q) = if q.is_negative() { (-p, -q) } else { (p, q) };
        if q.is_zero() {
            if p.abs().is_one() {
                return Ok(Self::meridian());
            }
            return Err(Error::Domain(format!("{p}/0 is not a slope")));
        }
        if !p.gcd(&q).is_one() {
            return Err(Error::Domain(format!("slope {p}/{q} is not reduced")));
        }
        Ok(Self { p, q })
    }

    pub fn from_i64(p: i64, q: i64) -> Result<Self> {
        Self::new(p.into(), q.into())
    }

    pub fn meridian() -> Self {
        Self {
            p: BigInt::one(),
            q: BigInt::zero(),
        }
    }

    pub fn is_meridian(&self) -> bool {
        self.q.is_zero()
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn negated(&self) -> Self {
        if self.is_meridian() {
            return self.clone();
        }
        Self {
            p: -&self.p,
            q: self.q.clone(),
        }
    }
}

impl fmt::Display for SurgerySlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for SurgerySlope {
    type Err = Error;

    /// Accepts `p/q` or a bare integer `p`.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let parse = |v: &str| {
            v.parse::<BigInt>()
                .map_err(|_| Error::Domain(format!("cannot parse slope component {v:?}")))
        };
        match s.split_once('/') {
            Some((p, q)) => Self::new(parse(p)?, parse(q)?),
            None => Self::new(parse(&s)?, BigInt::one()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaValue {
    pub value: Rational,
    pub hypotheses_ok: bool,
    pub caveats: Vec<String>,
}

/// Geometric intersection number `|p - q N|` of `p/q` with the integral slope `N`.
pub fn slope_distance(r: &SurgerySlope, n: i64) -> BigInt {
    (&r.p - &r.q * BigInt::from(n)).abs()
}

pub fn total_seminorm(sys: &SlopeSystem, r: &SurgerySlope) -> Rational {
    let sum: BigInt = sys
        .records
        .iter()
        .map(|rec| &rec.weight * slope_distance(r, rec.slope))
        .sum();
    Rational::new(sum - r.p.abs(), BigInt::from(2))
}

/// Casson invariant of `K(p/q)` from an already computed slope system and
/// Alexander polynomial, in the orientation of `sys.knot`.
pub fn lambda_from_system(
    sys: &SlopeSystem,
    delta: &LaurentPolynomial,
    r: &SurgerySlope,
) -> Result<LambdaValue> {
    if r.is_meridian() {
        return Err(Error::Meridian);
    }
    let half_norm = total_seminorm(sys, r) / Rational::from_integer(2.into());
    let value = if r.p.is_even() {
        half_norm
    } else {
        half_norm - Rational::new(sys.knot.alpha() - 1, BigInt::from(4))
    };

    let mut caveats = Vec::new();
    let mut ok = true;
    let p_abs = r.p.abs();
    let p_prime = if p_abs.is_even() { &p_abs / 2 } else { p_abs.clone() };
    if p_prime.is_zero() {
        ok = false;
        caveats.push(
            "p = 0: the root-of-unity hypothesis degenerates; value given without guarantee"
                .to_string(),
        );
    } else if !root_of_unity_check(delta, &p_prime) {
        ok = false;
        caveats.push(format!(
            "a {p_prime}-th root of unity is a root of the Alexander polynomial"
        ));
    }
    if r.q.is_one() && r.p.is_even() {
        caveats.push("strictness unverified".to_string());
        let hit = sys
            .records
            .iter()
            .any(|rec| BigInt::from(rec.slope) == r.p);
        if hit {
            ok = false;
            caveats.push(format!("{r} is a boundary slope"));
        }
    }
    Ok(LambdaValue {
        value,
        hypotheses_ok: ok,
        caveats,
    })
}

/// `lambda_SL(2,C)(K(p/q))` for the knot `s` as given. A mirrored input is
/// evaluated on its canonical form at `-p/q`.
pub fn lambda_surgery(s: &SchubertForm, r: &SurgerySlope) -> Result<LambdaValue> {
    if r.is_meridian() {
        return Err(Error::Meridian);
    }
    let canonical = normal_form(s);
    let sys = enumerate_bscf(&canonical.form)?;
    let delta = knot_alexander(&canonical.form)?;
    let r = if canonical.mirrored { r.negated() } else { r.clone() };
    lambda_from_system(&sys, &delta, &r)
}

/// `(1/4) sum_i W_i (|p - q N_i| - |-p - q N_i|)`, which is
/// `lambda(K(p/q)) - lambda(K(-p/q))` for odd `p`.
pub fn lambda_difference(sys: &SlopeSystem, p: &BigInt, q: &BigInt) -> Rational {
    let sum: BigInt = sys
        .records
        .iter()
        .map(|rec| {
            let qn = q * BigInt::from(rec.slope);
            &rec.weight * ((p - &qn).abs() - (-p - &qn).abs())
        })
        .sum();
    Rational::new(sum, BigInt::from(4))
}

/// `(sum_{N<0} W - sum_{N>0} W) / 2`; a nonzero value rules out purely
/// cosmetic pairs among the homology-sphere surgeries `+-1/q`.
pub fn cosmetic_difference(sys: &SlopeSystem) -> Rational {
    let sum: BigInt = sys
        .records
        .iter()
        .map(|rec| match rec.slope.signum() {
            -1 => rec.weight.clone(),
            1 => -&rec.weight,
            _ => BigInt::zero(),
        })
        .sum();
    Rational::new(sum, BigInt::from(2))
}

/// True iff no `p'`-th root of unity is a root of `delta`, i.e. the resultant of
/// `t^g delta(t)` and `t^p' - 1` is nonzero.
///
/// A primitive `d`-th root of unity is a root exactly when the cyclotomic
/// polynomial `Phi_d` divides `delta`, which needs `phi(d) <= deg`; only
/// divisors `d` of `p'` in that finite range are tested.
pub fn root_of_unity_check(delta: &LaurentPolynomial, p_prime: &BigInt) -> bool {
    if !p_prime.is_positive() || delta.is_zero() {
        return false;
    }
    let low = delta.min_exp().expect("nonzero");
    let f = to_q(&delta.shift(-low).to_dense().expect("shifted to t^0"));
    let m = degree(&f) as u64;
    // phi(d) >= sqrt(d / 2), so phi(d) <= m forces d <= 2 m^2.
    let bound = 2 * m * m;
    let bound = p_prime.to_u64().map_or(bound, |p| p.min(bound));
    for d in 1..=bound {
        if !(p_prime % d).is_zero() || totient(d) > m {
            continue;
        }
        if rem(&f, &cyclotomic(d)).is_empty() {
            return false;
        }
    }
    true
}

fn totient(mut n: u64) -> u64 {
    let mut out = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

fn mobius(mut n: u64) -> i32 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// `Phi_d = prod_{e | d} (t^e - 1)^mu(d / e)`.
fn cyclotomic(d: u64) -> Dense {
    let binomial = |e: u64| {
        let mut v = vec![Rational::zero(); e as usize + 1];
        v[0] = -Rational::one();
        v[e as usize] = Rational::one();
        v
    };
    let mut num = vec![Rational::one()];
    let mut den = vec![Rational::one()];
    for e in (1..=d).filter(|e| d % e == 0) {
        match mobius(d / e) {
            1 => num = mul(&num, &binomial(e)),
            -1 => den = mul(&den, &binomial(e)),
            _ => {}
        }
    }
    div(&num, &den)
}

/// Resultant of two integer polynomials given by coefficients `t^0, t^1, ...`.
pub fn resultant(f: &[BigInt], g: &[BigInt]) -> BigInt {
    let r = resultant_q(&trim(to_q(f)), &trim(to_q(g)));
    debug_assert!(r.is_integer());
    r.to_integer()
}

type Dense = Vec<Rational>;

fn to_q(c: &[BigInt]) -> Dense {
    trim(c.iter().map(|v| Rational::from_integer(v.clone())).collect())
}

fn trim(mut p: Dense) -> Dense {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn degree(p: &[Rational]) -> usize {
    p.len().saturating_sub(1)
}

fn mul(a: &[Rational], b: &[Rational]) -> Dense {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn rem(a: &[Rational], b: &[Rational]) -> Dense {
    let mut r = trim(a.to_vec());
    let db = degree(b);
    let lead = b.last().expect("nonzero divisor");
    while !r.is_empty() && r.len() > db {
        let shift = r.len() - 1 - db;
        let factor = r.last().expect("nonempty") / lead;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &factor * c;
        }
        r = trim(r);
    }
    r
}

fn div(a: &[Rational], b: &[Rational]) -> Dense {
    let mut r = trim(a.to_vec());
    let db = degree(b);
    let lead = b.last().expect("nonzero divisor");
    let mut q = vec![Rational::zero(); r.len().saturating_sub(db)];
    while !r.is_empty() && r.len() > db {
        let shift = r.len() - 1 - db;
        let factor = r.last().expect("nonempty") / lead;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &factor * c;
        }
        q[shift] = factor;
        r = trim(r);
    }
    debug_assert!(r.is_empty());
    trim(q)
}

fn resultant_q(f: &[Rational], g: &[Rational]) -> Rational {
    if f.is_empty() || g.is_empty() {
        return Rational::zero();
    }
    let (m, n) = (degree(f), degree(g));
    if m == 0 {
        return num_traits::pow(f[0].clone(), n);
    }
    if n == 0 {
        return num_traits::pow(g[0].clone(), m);
    }
    let sign = if (m * n) % 2 == 1 { -Rational::one() } else { Rational::one() };
    if m < n {
        return sign * resultant_q(g, f);
    }
    // Res(f, g) = (-1)^(mn) Res(g, f) = (-1)^(mn) lc(g)^(m - k) Res(g, f mod g).
    let r = rem(f, g);
    if r.is_empty() {
        return Rational::zero();
    }
    let k = degree(&r);
    let lc = g.last().expect("nonzero").clone();
    sign * num_traits::pow(lc, m - k) * resultant_q(g, &r)
}
