//! Rolfsen names of the two-bridge knots with at most nine crossings.

use crate::rational::SchubertForm;

/// `(name, alpha, beta)` with one representative per knot up to mirror image.
const TABLE: &[(&str, i64, i64)] = &[
    ("3_1", 3, 1),
    ("4_1", 5, 2),
    ("5_1", 5, 1),
    ("5_2", 7, 2),
    ("6_1", 9, 7),
    ("6_2", 11, 3),
    ("6_3", 13, 5),
    ("7_1", 7, 1),
    ("7_2", 11, 2),
    ("7_3", 13, 3),
    ("7_4", 15, 4),
    ("7_5", 17, 5),
    ("7_6", 19, 8),
    ("7_7", 21, 8),
    ("8_1", 13, 11),
    ("8_2", 17, 3),
    ("8_3", 17, 4),
    ("8_4", 19, 4),
    ("8_6", 23, 7),
    ("8_7", 23, 5),
    ("8_8", 25, 9),
    ("8_9", 25, 7),
    ("8_11", 27, 8),
    ("8_12", 29, 12),
    ("8_13", 29, 11),
    ("8_14", 31, 13),
    ("9_1", 9, 1),
    ("9_2", 15, 2),
    ("9_3", 19, 3),
    ("9_4", 21, 4),
    ("9_5", 23, 4),
    ("9_6", 27, 5),
    ("9_7", 29, 9),
    ("9_8", 31, 14),
    ("9_9", 31, 7),
    ("9_10", 33, 10),
    ("9_11", 33, 7),
    ("9_12", 35, 8),
    ("9_13", 37, 11),
    ("9_14", 37, 14),
    ("9_15", 39, 17),
    ("9_17", 39, 14),
    ("9_18", 41, 12),
    ("9_19", 41, 16),
    ("9_20", 41, 11),
    ("9_21", 43, 12),
    ("9_23", 45, 19),
    ("9_26", 47, 13),
    ("9_27", 49, 19),
    ("9_31", 55, 21),
];

/// All tabulated `(name, knot)` pairs.
pub fn all() -> impl Iterator<Item = (&'static str, SchubertForm)> {
    TABLE
        .iter()
        .map(|&(n, a, b)| (n, SchubertForm::from_i64(a, b).expect("valid table entry")))
}

/// Knot for a name such as `9_27`.
pub fn lookup(name: &str) -> Option<SchubertForm> {
    all().find(|(n, _)| *n == name).map(|(_, s)| s)
}

/// Name of the class of `s`, mirrors included.
pub fn name_of(s: &SchubertForm) -> Option<&'static str> {
    let key = s.class_key();
    TABLE
        .iter()
        .find(|&&(_, a, b)| {
            *s.alpha() == a.into()
                && SchubertForm::from_i64(a, b).expect("valid table entry").class_key() == key
        })
        .map(|&(n, _, _)| n)
}
