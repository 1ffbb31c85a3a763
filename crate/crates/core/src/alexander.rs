//! Seifert matrices of two-bridge knots, Alexander polynomials and signatures.
//!
//! A knot with even Conway form `C[e1, ..., e2g]` bounds a genus-`g` surface
//! made of a chain of twisted bands. In the basis running along the bands the
//! Seifert matrix has diagonal `(-1)^(i+1) * e_i / 2` and a `1` on both sides of
//! the diagonal in every even row.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::rational::{canonicalize, ConwayForm, ContinuedFraction, Rational, SchubertForm};

/// Square integer matrix stored by its nonzero entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertMatrix {
    size: usize,
    nonzero: BTreeMap<(usize, usize), BigInt>,
    zero: BigInt,
}

impl SeifertMatrix {
    pub fn new(entries: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = entries.len();
        if entries.iter().any(|row| row.len() != n) {
            return Err(Error::Domain("Seifert matrix must be square".into()));
        }
        let nonzero = entries
            .into_iter()
            .enumerate()
            .flat_map(|(i, row)| {
                row.into_iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(move |(j, v)| ((i, j), v))
            })
            .collect();
        Self::from_sparse(n, nonzero)
    }

    fn from_sparse(size: usize, nonzero: BTreeMap<(usize, usize), BigInt>) -> Result<Self> {
        if size == 0 || size % 2 != 0 {
            return Err(Error::Domain(format!(
                "a Seifert matrix of a knot has even positive size, got {size}"
            )));
        }
        Ok(Self {
            size,
            nonzero,
            zero: BigInt::zero(),
        })
    }

    pub fn from_i64s(rows: &[&[i64]]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn genus(&self) -> usize {
        self.size / 2
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        self.nonzero.get(&(i, j)).unwrap_or(&self.zero)
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        (0..self.size)
            .map(|i| (0..self.size).map(|j| self.get(i, j).clone()).collect())
            .collect()
    }

    /// No nonzero entry more than one step off the diagonal.
    pub fn is_tridiagonal(&self) -> bool {
        self.nonzero.keys().all(|&(i, j)| i.abs_diff(j) <= 1)
    }
}

pub fn seifert_from_conway(c: &ConwayForm) -> SeifertMatrix {
    let n = c.entries().len();
    let mut m = BTreeMap::new();
    for (i, e) in c.entries().iter().enumerate() {
        let half: BigInt = e / 2;
        // 0-based even index = 1-based odd position.
        m.insert((i, i), if i % 2 == 0 { half } else { -half });
        if i % 2 == 1 {
            m.insert((i, i - 1), BigInt::one());
            if i + 1 < n {
                m.insert((i, i + 1), BigInt::one());
            }
        }
    }
    SeifertMatrix::from_sparse(n, m).expect("Conway forms have even positive length")
}

/// Determinant of a square matrix over `Z[t, t^-1]` by fraction-free elimination.
pub fn polynomial_determinant(mut m: Vec<Vec<LaurentPolynomial>>) -> LaurentPolynomial {
    let n = m.len();
    if n == 0 {
        return LaurentPolynomial::one();
    }
    let mut negate = false;
    let mut prev = LaurentPolynomial::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return LaurentPolynomial::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let cross = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = cross
                    .div_exact(&prev)
                    .expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// `det(M - t M^T)`, before normalization.
pub fn alexander_determinant(m: &SeifertMatrix) -> LaurentPolynomial {
    let t = LaurentPolynomial::t();
    let entry = |i: usize, j: usize| {
        &LaurentPolynomial::constant(m.get(i, j).clone())
            - &(&t * &LaurentPolynomial::constant(m.get(j, i).clone()))
    };
    if m.is_tridiagonal() {
        return continuant(m.size(), entry, LaurentPolynomial::one(), |a, b| a * b, |a, b| a - b);
    }
    let n = m.size();
    polynomial_determinant((0..n).map(|i| (0..n).map(|j| entry(i, j)).collect()).collect())
}

/// Determinant of a tridiagonal matrix by `D_k = a_kk D_(k-1) - a_k,k-1 a_k-1,k D_(k-2)`.
fn continuant<T: Clone>(
    n: usize,
    entry: impl Fn(usize, usize) -> T,
    one: T,
    mul: impl Fn(&T, &T) -> T,
    sub: impl Fn(&T, &T) -> T,
) -> T {
    let mut before = one.clone();
    let mut current = one;
    for k in 0..n {
        let mut next = mul(&entry(k, k), &current);
        if k > 0 {
            next = sub(&next, &mul(&mul(&entry(k, k - 1), &entry(k - 1, k)), &before));
        }
        before = std::mem::replace(&mut current, next);
    }
    current
}

/// `det(M - t M^T)` at an integer `t`; at `t = -1` this is `+-Delta(-1)`.
pub fn seifert_determinant_at(m: &SeifertMatrix, t: &BigInt) -> BigInt {
    let entry = |i: usize, j: usize| m.get(i, j) - t * m.get(j, i);
    if m.is_tridiagonal() {
        return continuant(m.size(), entry, BigInt::one(), |a, b| a * b, |a, b| a - b);
    }
    let n = m.size();
    let rows = (0..n)
        .map(|i| (0..n).map(|j| LaurentPolynomial::constant(entry(i, j))).collect())
        .collect();
    polynomial_determinant(rows).coefficient(0)
}

/// `+- t^-g det(M - t M^T)`, with the sign making it symmetric and equal to 1 at `t = 1`.
pub fn alexander_poly(m: &SeifertMatrix) -> Result<LaurentPolynomial> {
    let det = alexander_determinant(m);
    let shifted = det.shift(-(m.genus() as i64));
    for candidate in [shifted.clone(), -shifted] {
        if candidate.is_symmetric() && candidate.eval_unit(1).is_one() {
            return Ok(candidate);
        }
    }
    Err(Error::Normalization)
}

/// The all-even expansion `[0, e1, ..., e2g]` of `beta/alpha`; beta must be even.
///
/// At a non-integer target exactly one of floor and ceiling is even, so the
/// expansion is found by a single walk.
pub fn longitude_cf(s: &SchubertForm) -> Result<ContinuedFraction> {
    if s.beta().is_odd() {
        return Err(Error::Domain(format!(
            "{s} has odd beta; the all-even expansion needs even beta"
        )));
    }
    let mut terms = vec![BigInt::zero()];
    // Current target num/den with den > 0, starting from alpha/beta.
    let (mut num, mut den) = (s.alpha().clone(), s.beta().clone());
    // 2g never exceeds the crossing number, which is at most alpha.
    let bound = s.alpha().to_usize().map_or(usize::MAX, |a| a + 2);
    loop {
        if terms.len() > bound {
            return Err(Error::Internal(format!("{s}: all-even expansion does not terminate")));
        }
        if den.is_one() {
            if num.is_odd() || num.abs() < BigInt::from(2) {
                return Err(Error::Internal(format!(
                    "{s}: all-even expansion ends in the invalid term {num}"
                )));
            }
            terms.push(num);
            break;
        }
        let floor = num.div_floor(&den);
        let a = if floor.is_even() { floor } else { floor + 1 };
        if a.is_zero() {
            return Err(Error::Internal(format!("{s}: all-even expansion hit a zero term")));
        }
        let rest = &num - &a * &den;
        (num, den) = if rest.is_negative() { (-den, -rest) } else { (den, rest) };
        terms.push(a);
    }
    ContinuedFraction::new(terms)
}

/// Even Conway form of a knot with even beta: the tail of its all-even expansion.
pub fn conway_even_form(s: &SchubertForm) -> Result<ConwayForm> {
    let cf = longitude_cf(s)?;
    if !cf.integer_part().is_zero() {
        return Err(Error::Internal(format!(
            "{s}: all-even expansion has nonzero integer part"
        )));
    }
    ConwayForm::new(cf.tail().to_vec())
}

/// `sum_k c_k k (k - 1)`.
pub fn second_derivative_at_one(d: &LaurentPolynomial) -> BigInt {
    d.terms()
        .map(|(k, c)| c * BigInt::from(k) * BigInt::from(k - 1))
        .sum()
}

pub fn kx_alexander_closed(x: u64) -> LaurentPolynomial {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let x4 = &x2 * &x2;
    let c3 = -x4.clone();
    let c2 = BigInt::from(6) * &x4 - &x2;
    let c1 = -(BigInt::from(15) * &x4 - BigInt::from(4) * &x2);
    let c0 = BigInt::from(20) * &x4 - BigInt::from(6) * &x2 + 1;
    LaurentPolynomial::from_terms([
        (-3, c3.clone()),
        (-2, c2.clone()),
        (-1, c1.clone()),
        (0, c0),
        (1, c1),
        (2, c2),
        (3, c3),
    ])
}

fn one_minus_t_pow(n: u32) -> LaurentPolynomial {
    LaurentPolynomial::from_coeffs(0, &[1, -1]).pow(n)
}

fn chain_expansion(top: BigInt, b: BigInt, c: BigInt) -> LaurentPolynomial {
    let t = LaurentPolynomial::t();
    let t2 = t.pow(2);
    let mut out = one_minus_t_pow(6).scale(&top);
    out = &out + &(&t * &one_minus_t_pow(4)).scale(&b);
    out = &out + &(&t2 * &one_minus_t_pow(2)).scale(&c);
    &out + &t.pow(3)
}

/// The degree-6 expansion
/// `ABCDEF(1-t)^6 + ((A+C)DEF - ABC(D+F) + ABEF) t(1-t)^4 + (AB+EF) t^2(1-t)^2 + t^3`.
///
/// This agrees with `det(M - t M^T)` only when `D + F = 0` (which covers
/// `K_x`); [`genus3_expansion`] is the general form.
pub fn genus3_closed_form(d: [&BigInt; 6]) -> LaurentPolynomial {
    let [a, b, c, dd, e, f] = d;
    let top = a * b * c * dd * e * f;
    let mid = (a + c) * dd * e * f - a * b * c * (dd + f) + a * b * e * f;
    let low = a * b + e * f;
    chain_expansion(top, mid, low)
}

/// `det(M - t M^T)` for the genus-3 chain with diagonal `(A, ..., F)`:
/// `ABCDEF(1-t)^6 + (ABC(D+F) + ABEF + (A+C)DEF) t(1-t)^4
///  + (AB + (A+C)(D+F) + EF) t^2(1-t)^2 + t^3`.
pub fn genus3_expansion(d: [&BigInt; 6]) -> LaurentPolynomial {
    let [a, b, c, dd, e, f] = d;
    let top = a * b * c * dd * e * f;
    let mid = a * b * c * (dd + f) + a * b * e * f + (a + c) * dd * e * f;
    let low = a * b + (a + c) * (dd + f) + e * f;
    chain_expansion(top, mid, low)
}

/// Seifert matrix with diagonal `diag` and the chain pattern, for any even size.
pub fn chain_seifert_matrix(diag: &[BigInt]) -> Result<SeifertMatrix> {
    let n = diag.len();
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        m[i][i] = diag[i].clone();
        if i % 2 == 1 {
            m[i][i - 1] = BigInt::one();
            if i + 1 < n {
                m[i][i + 1] = BigInt::one();
            }
        }
    }
    SeifertMatrix::new(m)
}

/// Signature of `M + M^T` by exact symmetric elimination over the rationals.
pub fn signature(m: &SeifertMatrix) -> Result<i64> {
    if let Some(sig) = tridiagonal_signature(m) {
        return Ok(sig);
    }
    let n = m.size();
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Rational::from_integer(m.get(i, j) + m.get(j, i)))
                .collect()
        })
        .collect();
    let mut sig = 0i64;
    for k in 0..n {
        let pivot = match (k..n).find(|&i| !a[i][i].is_zero()) {
            Some(i) => i,
            None => {
                // Zero diagonal: add row/column j to row/column i to create a 2 a_ij pivot.
                let (i, j) = (k..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[i][j].is_zero())
                    .ok_or(Error::Singular)?;
                for c in k..n {
                    let v = a[j][c].clone();
                    a[i][c] += v;
                }
                for r in k..n {
                    let v = a[r][j].clone();
                    a[r][i] += v;
                }
                i
            }
        };
        a.swap(k, pivot);
        for row in a.iter_mut() {
            row.swap(k, pivot);
        }
        let p = a[k][k].clone();
        if p.is_positive() {
            sig += 1;
        } else {
            sig -= 1;
        }
        for r in k + 1..n {
            let factor = &a[r][k] / &p;
            if factor.is_zero() {
                continue;
            }
            for c in k + 1..n {
                let v = &factor * &a[k][c];
                a[r][c] -= v;
            }
        }
        for r in k + 1..n {
            a[r][k] = Rational::zero();
            a[k][r] = Rational::zero();
        }
    }
    Ok(sig)
}

/// Pivots `d_k = a_kk - b_k^2 / d_(k-1)` of `M + M^T` when it is tridiagonal and
/// no pivot vanishes; `None` otherwise.
fn tridiagonal_signature(m: &SeifertMatrix) -> Option<i64> {
    if !m.is_tridiagonal() {
        return None;
    }
    let sym = |i: usize, j: usize| Rational::from_integer(m.get(i, j) + m.get(j, i));
    let mut sig = 0i64;
    let mut prev: Option<Rational> = None;
    for k in 0..m.size() {
        let mut d = sym(k, k);
        if let Some(p) = &prev {
            let b = sym(k, k - 1);
            d -= &b * &b / p;
        }
        if d.is_zero() {
            return None;
        }
        sig += if d.is_positive() { 1 } else { -1 };
        prev = Some(d);
    }
    Some(sig)
}

/// For alternating knots the Ozsvath-Szabo tau invariant is a multiple of the
/// signature, so it vanishes exactly when the signature does.
pub fn is_tau_zero(sigma: i64) -> bool {
    sigma == 0
}

/// Seifert matrix of any two-bridge knot via its canonical even Conway form.
pub fn knot_seifert_matrix(s: &SchubertForm) -> Result<SeifertMatrix> {
    let canonical = canonicalize(s);
    Ok(seifert_from_conway(&conway_even_form(&canonical.form)?))
}

/// Normalized Alexander polynomial of a two-bridge knot.
pub fn knot_alexander(s: &SchubertForm) -> Result<LaurentPolynomial> {
    alexander_poly(&knot_seifert_matrix(s)?)
}
