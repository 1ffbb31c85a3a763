use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// Integer Laurent polynomial in `t`. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn monomial(coeff: BigInt, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, 0)
    }

    /// `coeffs[i]` is the coefficient of `t^(lowest + i)`.
    pub fn from_coeffs(lowest: i64, coeffs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            p.add_term(lowest + i as i64, BigInt::from(c));
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    /// Nonzero `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.values().next_back()
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(&e, v)| (e, v * c)))
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `p(t^-1) = p(t)`.
    pub fn is_symmetric(&self) -> bool {
        self.coeffs
            .iter()
            .all(|(&e, c)| self.coeffs.get(&-e) == Some(c))
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs.iter().fold(Rational::zero(), |acc, (&e, c)| {
            let power = if e >= 0 {
                num_traits::pow(t.clone(), e as usize)
            } else {
                num_traits::pow(t.recip(), (-e) as usize)
            };
            acc + power * Rational::from_integer(c.clone())
        })
    }

    /// Value at an integer point where no negative power blows up (`t = +-1`).
    pub fn eval_unit(&self, t: i64) -> BigInt {
        assert!(t == 1 || t == -1, "eval_unit takes t = 1 or t = -1");
        self.coeffs
            .iter()
            .map(|(&e, c)| if t == -1 && e.is_odd() { -c } else { c.clone() })
            .sum()
    }

    /// Coefficients `t^0 ..= t^deg` when no negative exponents occur.
    pub fn to_dense(&self) -> Option<Vec<BigInt>> {
        if self.min_exp().is_some_and(|e| e < 0) {
            return None;
        }
        let deg = self.max_exp().unwrap_or(0);
        Some((0..=deg).map(|e| self.coefficient(e)).collect())
    }

    pub fn from_dense(coeffs: &[BigInt]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, c)| (i as i64, c.clone())))
    }

    /// Exact quotient `self / divisor` in `Z[t, t^-1]`, or `None` when it does not exist.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let d_max = divisor.max_exp()?;
        let d_lead = divisor.leading_coefficient()?.clone();
        let mut rem = self.clone();
        let mut quotient = Self::zero();
        let d_min = divisor.min_exp().expect("nonzero divisor");
        let self_min = self.min_exp().unwrap_or(0);
        while let Some(r_max) = rem.max_exp() {
            let shift = r_max - d_max;
            // Every step lowers the top degree; once the quotient would reach below
            // the span of the dividend no exact quotient exists.
            if shift + d_min < self_min {
                return None;
            }
            let lead = rem.leading_coefficient().expect("nonzero");
            let (q, r) = lead.div_rem(&d_lead);
            if !r.is_zero() {
                return None;
            }
            let term = Self::monomial(q, shift);
            rem = &rem - &(&term * divisor);
            quotient = &quotient + &term;
        }
        Some(quotient)
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $m(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.coeffs.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else if i > 0 { "+" } else { "" };
            let mag = c.abs();
            write!(f, "{sign}")?;
            let show_mag = e == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}
