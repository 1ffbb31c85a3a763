//! Exact rationals, continued fractions, and the Schubert / Conway
//! presentations of two-bridge knots.
//!
//! Continued fractions use the additive convention
//! `[c, b1, ..., bn] = c + 1/(b1 + 1/(b2 + ... + 1/bn))`, so the simple
//! continued fraction of `18/49` is `[0, 2, 1, 2, 1, 1, 2]`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact reduced fraction over arbitrary-precision integers.
pub type Rational = BigRational;

/// Integer part followed by the partial quotients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ContinuedFraction {
    terms: Vec<BigInt>,
}

impl ContinuedFraction {
    pub fn new(terms: Vec<BigInt>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::Domain(
                "a continued fraction needs at least its integer part".into(),
            ));
        }
        Ok(Self { terms })
    }

    /// Panics on an empty slice.
    pub fn from_i64s(terms: &[i64]) -> Self {
        Self::new(terms.iter().map(|&t| BigInt::from(t)).collect())
            .expect("non-empty term list")
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    pub fn integer_part(&self) -> &BigInt {
        &self.terms[0]
    }

    /// Partial quotients after the integer part.
    pub fn tail(&self) -> &[BigInt] {
        &self.terms[1..]
    }

    pub fn eval(&self) -> Result<Rational> {
        cf_eval(self)
    }

    pub fn into_terms(self) -> Vec<BigInt> {
        self.terms
    }

    /// Terms as machine integers, when they all fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.terms.iter().map(ToPrimitive::to_i64).collect()
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, "]")
    }
}

/// Evaluate `c + 1/(b1 + 1/(... + 1/bn))` exactly.
pub fn cf_eval(cf: &ContinuedFraction) -> Result<Rational> {
    let mut terms = cf.terms().iter().enumerate().rev();
    let (_, last) = terms.next().expect("continued fraction is never empty");
    // Unreduced tail value num/den.
    let (mut num, mut den) = (last.clone(), BigInt::one());
    for (idx, term) in terms {
        if num.is_zero() {
            return Err(Error::Evaluation { position: idx + 1 });
        }
        (num, den) = (term * &num + den, num);
    }
    Ok(Rational::new(num, den))
}

/// The unique expansion `[0, a1, ..., an]` of `r` with every `ai >= 1` and `an >= 2`.
pub fn simple_cf(r: &Rational) -> Result<ContinuedFraction> {
    if !r.is_positive() || *r >= Rational::one() {
        return Err(Error::Domain(format!(
            "simple continued fraction needs 0 < r < 1, got {r}"
        )));
    }
    let mut terms = vec![BigInt::zero()];
    let (mut num, mut den) = (r.denom().clone(), r.numer().clone());
    while !den.is_zero() {
        let (q, rem) = num.div_rem(&den);
        terms.push(q);
        num = den;
        den = rem;
    }
    ContinuedFraction::new(terms)
}

/// Schubert normal form `S(alpha, beta)` of a two-bridge knot.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchubertForm {
    alpha: BigInt,
    beta: BigInt,
}

impl SchubertForm {
    pub fn new(alpha: BigInt, beta: BigInt) -> Result<Self> {
        if alpha < BigInt::from(3) || alpha.is_even() {
            return Err(Error::Domain(format!(
                "S({alpha},{beta}): alpha must be odd and at least 3 (even alpha is a two-bridge link)"
            )));
        }
        if !beta.is_positive() || beta >= alpha {
            return Err(Error::Domain(format!(
                "S({alpha},{beta}): beta must satisfy 0 < beta < alpha"
            )));
        }
        if !alpha.gcd(&beta).is_one() {
            return Err(Error::Domain(format!(
                "S({alpha},{beta}): alpha and beta must be coprime"
            )));
        }
        Ok(Self { alpha, beta })
    }

    pub fn from_i64(alpha: i64, beta: i64) -> Result<Self> {
        Self::new(alpha.into(), beta.into())
    }

    /// `beta` may be any integer coprime to `alpha`; it is reduced into `(0, alpha)`.
    pub fn from_residue(alpha: BigInt, beta: &BigInt) -> Result<Self> {
        let beta = beta.mod_floor(&alpha);
        Self::new(alpha, beta)
    }

    pub fn alpha(&self) -> &BigInt {
        &self.alpha
    }

    pub fn beta(&self) -> &BigInt {
        &self.beta
    }

    /// `beta / alpha`, the fraction every expansion of this knot evaluates to.
    pub fn fraction(&self) -> Rational {
        Rational::new(self.beta.clone(), self.alpha.clone())
    }

    pub fn mirror(&self) -> Self {
        Self {
            alpha: self.alpha.clone(),
            beta: &self.alpha - &self.beta,
        }
    }

    /// `beta^{-1} mod alpha`.
    pub fn beta_inverse(&self) -> BigInt {
        mod_inverse(&self.beta, &self.alpha).expect("beta is coprime to alpha")
    }

    /// Least element of `{beta, beta^-1, alpha - beta, alpha - beta^-1}`: identical for a
    /// knot and its mirror, distinct between inequivalent knots with the same alpha.
    pub fn class_key(&self) -> BigInt {
        let inv = self.beta_inverse();
        [
            self.beta.clone(),
            &self.alpha - &self.beta,
            &self.alpha - &inv,
            inv,
        ]
        .into_iter()
        .min()
        .expect("four candidates")
    }
}

impl fmt::Display for SchubertForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S({},{})", self.alpha, self.beta)
    }
}

/// A Schubert form with even beta, plus whether reaching it required mirroring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Canonical {
    pub form: SchubertForm,
    pub mirrored: bool,
}

/// Replace an odd `beta` by `alpha - beta` (the mirror image). Alpha is odd, so
/// exactly one of the two is even.
pub fn canonicalize(s: &SchubertForm) -> Canonical {
    if s.beta.is_even() {
        Canonical {
            form: s.clone(),
            mirrored: false,
        }
    } else {
        Canonical {
            form: s.mirror(),
            mirrored: true,
        }
    }
}

/// [`canonicalize`], then pick the smaller even member of `{beta, beta^-1}`.
/// Both presentations describe the same oriented knot, so the mirror flag carries
/// over. `S(49,19)` becomes `S(49,18)`, mirrored.
pub fn normal_form(s: &SchubertForm) -> Canonical {
    let Canonical { form, mirrored } = canonicalize(s);
    let inv = form.beta_inverse();
    let form = if inv.is_even() && inv < form.beta {
        SchubertForm {
            alpha: form.alpha,
            beta: inv,
        }
    } else {
        form
    };
    Canonical { form, mirrored }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Equivalence {
    Same,
    Mirror,
    Distinct,
}

/// Two-bridge classification: same knot iff `beta2 = beta1^{+-1} mod alpha`,
/// mirror images iff `beta2 = -beta1^{+-1} mod alpha`. `Same` wins for amphichiral knots.
pub fn equivalent(s1: &SchubertForm, s2: &SchubertForm) -> Equivalence {
    if s1.alpha != s2.alpha {
        return Equivalence::Distinct;
    }
    let alpha = &s1.alpha;
    let b = &s2.beta;
    let inv = s1.beta_inverse();
    if *b == s1.beta || *b == inv {
        Equivalence::Same
    } else if *b == alpha - &s1.beta || *b == alpha - &inv {
        Equivalence::Mirror
    } else {
        Equivalence::Distinct
    }
}

/// Conway form of a two-bridge knot: `2g` nonzero even entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConwayForm {
    entries: Vec<BigInt>,
}

impl ConwayForm {
    pub fn new(entries: Vec<BigInt>) -> Result<Self> {
        if entries.is_empty() || entries.len() % 2 != 0 {
            return Err(Error::Domain(format!(
                "Conway form needs a positive even number of entries, got {}",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|e| e.is_zero() || e.is_odd()) {
            return Err(Error::Domain(format!(
                "Conway form entries must be nonzero and even, got {bad}"
            )));
        }
        Ok(Self { entries })
    }

    pub fn from_i64s(entries: &[i64]) -> Result<Self> {
        Self::new(entries.iter().map(|&e| BigInt::from(e)).collect())
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn genus(&self) -> usize {
        self.entries.len() / 2
    }

    /// The expansion `[0, e1, ..., e2g]` of the knot's fraction.
    pub fn continued_fraction(&self) -> ContinuedFraction {
        let mut terms = Vec::with_capacity(self.entries.len() + 1);
        terms.push(BigInt::zero());
        terms.extend(self.entries.iter().cloned());
        ContinuedFraction { terms }
    }

    pub fn to_schubert(&self) -> Result<SchubertForm> {
        let value = cf_eval(&self.continued_fraction())?;
        SchubertForm::from_residue(value.denom().clone(), value.numer())
    }
}

impl fmt::Display for ConwayForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C[")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

/// `K_x = S((8x^2 - 1)^2, 32x^3 - 8x^2 - 8x + 2)`, the knot with Conway form
/// `[2x, 2, -2x, 2x, 2, -2x]`.
pub fn kx_family(x: u64) -> Result<SchubertForm> {
    if x < 1 {
        return Err(Error::Domain("K_x is defined for x >= 1".into()));
    }
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let root = BigInt::from(8) * &x2 - 1;
    let alpha = &root * &root;
    let beta = BigInt::from(32) * &x2 * &x - BigInt::from(8) * &x2 - BigInt::from(8) * &x + 2;
    SchubertForm::new(alpha, beta)
}

/// Closed-form simple continued fraction of `K_x`, `x >= 2`.
pub fn kx_simple_cf(x: u64) -> Result<ContinuedFraction> {
    if x < 2 {
        return Err(Error::Domain(
            "the closed-form simple continued fraction of K_x needs x >= 2".into(),
        ));
    }
    let x = x as i128;
    let terms = [0, 2 * x, 1, 1, 2 * x - 2, 1, 2 * x - 1, 1, 1, 2 * x - 1];
    ContinuedFraction::new(terms.iter().map(|&t| BigInt::from(t)).collect())
}

/// Sum of the partial quotients of the simple continued fraction of the
/// canonical form; the alternating diagram it describes is minimal.
pub fn crossing_number(s: &SchubertForm) -> BigInt {
    let canonical = canonicalize(s);
    let cf = simple_cf(&canonical.form.fraction()).expect("0 < beta/alpha < 1");
    cf.tail().iter().sum()
}

pub(crate) fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let ext = a.mod_floor(m).extended_gcd(m);
    if !ext.gcd.is_one() {
        return None;
    }
    Some(ext.x.mod_floor(m))
}
