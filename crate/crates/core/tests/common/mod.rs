//! Worked boundary-slope tables for the family `K_x = C[2x,2,-2x,2x,2,-2x]`,
//! shared by the integration and acceptance suites.

#![allow(dead_code)]

use num_bigint::BigInt;

/// One worked case: term list plus `(n+, n-, N, W)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Case {
    pub number: usize,
    pub terms: Vec<i64>,
    pub n_plus: usize,
    pub n_minus: usize,
    pub slope: i64,
    pub weight: i64,
}

impl Case {
    pub fn terms_big(&self) -> Vec<BigInt> {
        self.terms.iter().map(|&t| BigInt::from(t)).collect()
    }
}

/// The ten cases for `x = 1` (`S(49,18)`).
pub fn k1_cases() -> Vec<Case> {
    let rows: [(&[i64], usize, usize, i64, i64); 10] = [
        (&[0, 2, 2, -2, 2, 2, -2], 3, 3, 0, 1),
        (&[0, 2, 2, -2, 3, -3], 1, 4, -6, 4),
        (&[0, 3, -3, -2, 3], 2, 2, 0, 8),
        (&[0, 3, -4, 2, 2], 3, 1, 4, 6),
        (&[0, 3, -4, 3, -2], 4, 0, 8, 12),
        (&[1, -2, 2, 2, 2, -3], 1, 4, -6, 2),
        (&[1, -2, 2, 3, -2, -2], 2, 3, -2, 2),
        (&[1, -2, 2, 3, -3, 2], 3, 2, 2, 4),
        (&[1, -2, 3, -2, 2, 2, -2], 2, 4, -4, 2),
        (&[1, -2, 3, -2, 3, -3], 0, 5, -10, 8),
    ];
    rows.iter()
        .enumerate()
        .map(|(i, (terms, n_plus, n_minus, slope, weight))| Case {
            number: i + 1,
            terms: terms.to_vec(),
            n_plus: *n_plus,
            n_minus: *n_minus,
            slope: *slope,
            weight: *weight,
        })
        .collect()
}

enum Piece {
    One(i64),
    /// `(a, b)^k`
    Pair(i64, i64, i64),
}

fn build(pieces: &[Piece]) -> Vec<i64> {
    let mut out = Vec::new();
    for p in pieces {
        match *p {
            Piece::One(v) => out.push(v),
            Piece::Pair(a, b, k) => {
                for _ in 0..k {
                    out.push(a);
                    out.push(b);
                }
            }
        }
    }
    out
}

fn weight_of(terms: &[i64]) -> i64 {
    terms[1..].iter().map(|t| t.abs() - 1).product()
}

/// The 25 closed-form cases for `x >= 2`. Weights of slope-0 cases are not
/// tabulated in closed form; they are read off the term list.
pub fn kx_cases(x: i64) -> Vec<Case> {
    use Piece::{One, Pair};
    assert!(x >= 2);
    let rows: Vec<(Vec<Piece>, i64, i64, i64, Option<i64>)> = vec![
        // 1
        (
            vec![One(0), One(2 * x), One(2), One(-2 * x + 1), One(-2), Pair(2, -2, x - 1), One(2), One(2), Pair(-2, 2, x - 1)],
            2 * x + 1, 2 * x + 1, 0, None,
        ),
        // 2
        (
            vec![One(0), One(2 * x), One(2), One(-2 * x + 1), One(-2), Pair(2, -2, x - 1), One(3), One(-2 * x)],
            2 * x + 2, 2, 4 * x, Some(4 * (x - 1) * (2 * x - 1).pow(2)),
        ),
        // 3
        (
            vec![One(0), One(2 * x), One(2), One(-2 * x), One(2 * x), One(2), One(-2 * x)],
            3, 3, 0, None,
        ),
        // 4
        (
            vec![One(0), One(2 * x), One(2), One(-2 * x), One(2 * x + 1), One(-2), One(-2 * x + 1)],
            2, 4, -4, Some(4 * x * (x - 1) * (2 * x - 1).pow(2)),
        ),
        // 5
        (
            vec![One(0), One(2 * x), One(2), One(-2 * x), One(2 * x + 1), One(-3), Pair(2, -2, x - 1)],
            1, 2 * x + 2, -4 * x - 2, Some(4 * x * (2 * x - 1).pow(2)),
        ),
        // 6
        (
            vec![One(0), One(2 * x + 1), One(-2), One(-2 * x + 2), One(-2), Pair(2, -2, x - 1), One(2), One(2), Pair(-2, 2, x - 1)],
            2 * x + 2, 2 * x, 4, Some(2 * x * (2 * x - 3)),
        ),
        // 7
        (
            vec![One(0), One(2 * x + 1), One(-2), One(-2 * x + 2), One(-2), Pair(2, -2, x - 1), One(3), One(-2 * x)],
            2 * x + 3, 1, 4 * x + 4, Some(4 * x * (2 * x - 1) * (2 * x - 3)),
        ),
        // 8
        (
            vec![One(0), One(2 * x + 1), One(-2), One(-2 * x + 1), One(2 * x), One(2), One(-2 * x)],
            4, 2, 4, Some(4 * x * (x - 1) * (2 * x - 1).pow(2)),
        ),
        // 9
        (
            vec![One(0), One(2 * x + 1), One(-2), One(-2 * x + 1), One(2 * x + 1), One(-2), One(-2 * x + 1)],
            3, 3, 0, None,
        ),
        // 10
        (
            vec![One(0), One(2 * x + 1), One(-2), One(-2 * x + 1), One(2 * x + 1), One(-3), Pair(2, -2, x - 1)],
            2, 2 * x + 1, -4 * x + 2, Some(16 * x * x * (x - 1)),
        ),
        // 11
        (
            vec![One(0), One(2 * x + 1), One(-3), Pair(2, -2, x - 1), One(-2 * x + 1), One(-2), One(2 * x)],
            2 * x + 2, 1, 4 * x + 2, Some(8 * x * (x - 1) * (2 * x - 1)),
        ),
        // 12
        (
            vec![One(0), One(2 * x + 1), One(-3), Pair(2, -2, x - 1), One(-2 * x), One(2), One(2 * x - 1)],
            2 * x + 1, 2, 4 * x - 2, Some(8 * x * (x - 1) * (2 * x - 1)),
        ),
        // 13
        (
            vec![One(0), One(2 * x + 1), One(-3), Pair(2, -2, x - 1), One(-2 * x), One(3), Pair(-2, 2, x - 1)],
            2 * x, 2 * x, 0, None,
        ),
        // 14
        (
            vec![One(0), One(2 * x + 1), One(-3), Pair(2, -2, x - 2), One(2), One(-3), Pair(2, -2, x - 1), One(2), One(2), Pair(-2, 2, x - 1)],
            4 * x - 1, 2 * x - 1, 4 * x, Some(8 * x),
        ),
        // 15
        (
            vec![One(0), One(2 * x + 1), One(-3), Pair(2, -2, x - 2), One(2), One(-3), Pair(2, -2, x - 1), One(3), One(-2 * x)],
            4 * x, 0, 8 * x, Some(16 * x * (2 * x - 1)),
        ),
        // 16
        (
            vec![One(1), Pair(-2, 2, x), One(2), Pair(-2, 2, x - 1), One(2 * x - 1), One(2), One(-2 * x)],
            2 * x + 1, 2 * x + 1, 0, None,
        ),
        // 17
        (
            vec![One(1), Pair(-2, 2, x), One(2), Pair(-2, 2, x - 1), One(2 * x), One(-2), One(-2 * x + 1)],
            2 * x, 2 * x + 2, -4, Some(2 * (x - 1) * (2 * x - 1)),
        ),
        // 18
        (
            vec![One(1), Pair(-2, 2, x), One(2), Pair(-2, 2, x - 1), One(2 * x), One(-3), Pair(2, -2, x - 1)],
            2 * x - 1, 4 * x, -4 * x - 2, Some(2 * (2 * x - 1)),
        ),
        // 19
        (
            vec![One(1), Pair(-2, 2, x), One(2), Pair(-2, 2, x - 2), One(-2), One(3), Pair(-2, 2, x - 1), One(-2), One(-2), Pair(2, -2, x - 1)],
            4 * x - 2, 4 * x - 1, -2, Some(2),
        ),
        // 20
        (
            vec![One(1), Pair(-2, 2, x), One(2), Pair(-2, 2, x - 2), One(-2), One(3), Pair(-2, 2, x - 1), One(-3), One(2 * x)],
            4 * x - 1, 2 * x, 4 * x - 2, Some(4 * (2 * x - 1)),
        ),
        // 21
        (
            vec![One(1), Pair(-2, 2, x - 1), One(-2), One(3), One(-2 * x + 1), One(-2), Pair(2, -2, x - 1), One(2), One(2), Pair(-2, 2, x - 1)],
            2 * x, 4 * x, -4 * x, Some(4 * (x - 1)),
        ),
        // 22
        (
            vec![One(1), Pair(-2, 2, x - 1), One(-2), One(3), One(-2 * x + 1), One(-2), Pair(2, -2, x - 1), One(3), One(-2 * x)],
            2 * x + 1, 2 * x + 1, 0, None,
        ),
        // 23
        (
            vec![One(1), Pair(-2, 2, x - 1), One(-2), One(3), One(-2 * x), One(2 * x), One(2), One(-2 * x)],
            2, 2 * x + 2, -4 * x, Some(2 * (2 * x - 1).pow(3)),
        ),
        // 24
        (
            vec![One(1), Pair(-2, 2, x - 1), One(-2), One(3), One(-2 * x), One(2 * x + 1), One(-2), One(-2 * x + 1)],
            1, 2 * x + 3, -4 * x - 4, Some(8 * x * (x - 1) * (2 * x - 1)),
        ),
        // 25
        (
            vec![One(1), Pair(-2, 2, x - 1), One(-2), One(3), One(-2 * x), One(2 * x + 1), One(-3), Pair(2, -2, x - 1)],
            0, 4 * x + 1, -8 * x - 2, Some(8 * x * (2 * x - 1)),
        ),
    ];
    rows.into_iter()
        .enumerate()
        .map(|(i, (pieces, n_plus, n_minus, slope, weight))| {
            let terms = build(&pieces);
            let weight = weight.unwrap_or_else(|| weight_of(&terms));
            Case {
                number: i + 1,
                terms,
                n_plus: n_plus as usize,
                n_minus: n_minus as usize,
                slope,
                weight,
            }
        })
        .collect()
}

/// The thirteen knots of at most nine crossings with vanishing signature:
/// name, Schubert form, symmetric Alexander coefficients from `t^-g` up, `Delta''(1)`.
pub fn tau_trivial_table() -> Vec<(&'static str, i64, i64, Vec<i64>, i64)> {
    vec![
        ("4_1", 5, 2, vec![-1, 3, -1], -2),
        ("6_1", 9, 7, vec![-2, 5, -2], -4),
        ("6_3", 13, 5, vec![1, -3, 5, -3, 1], 2),
        ("7_7", 21, 8, vec![1, -5, 9, -5, 1], -2),
        ("8_1", 13, 11, vec![-3, 7, -3], -6),
        ("8_3", 17, 4, vec![-4, 9, -4], -8),
        ("8_8", 25, 9, vec![2, -6, 9, -6, 2], 4),
        ("8_9", 25, 7, vec![-1, 3, -5, 7, -5, 3, -1], -4),
        ("8_12", 29, 12, vec![1, -7, 13, -7, 1], -6),
        ("8_13", 29, 11, vec![2, -7, 11, -7, 2], 2),
        ("9_14", 37, 14, vec![2, -9, 15, -9, 2], -2),
        ("9_19", 41, 16, vec![2, -10, 17, -10, 2], -4),
        ("9_27", 49, 19, vec![-1, 5, -11, 15, -11, 5, -1], 0),
    ]
}
