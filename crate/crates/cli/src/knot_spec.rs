//! Parsing of knot arguments: `S(a,b)`, `C[e1,...,e2g]` or a table name.

use num_bigint::BigInt;
use twobridge::names;
use twobridge::rational::{ConwayForm, SchubertForm};

use crate::Failure;

pub fn parse(input: &str) -> Result<SchubertForm, Failure> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if let Some(inner) = s.strip_prefix("S(").and_then(|r| r.strip_suffix(')')) {
        let parts = integers(inner)?;
        let [alpha, beta]: [BigInt; 2] = parts
            .try_into()
            .map_err(|_| Failure::Input(format!("{input:?}: S(a,b) takes two integers")))?;
        return Ok(SchubertForm::new(alpha, beta)?);
    }
    if let Some(inner) = s.strip_prefix("C[").and_then(|r| r.strip_suffix(']')) {
        return Ok(ConwayForm::new(integers(inner)?)?.to_schubert()?);
    }
    names::lookup(&s).ok_or_else(|| {
        Failure::Input(format!(
            "{input:?} is not S(a,b), C[e1,...] or a known knot name"
        ))
    })
}

fn integers(list: &str) -> Result<Vec<BigInt>, Failure> {
    if list.is_empty() {
        return Ok(Vec::new());
    }
    list.split(',')
        .map(|v| {
            v.parse::<BigInt>()
                .map_err(|_| Failure::Input(format!("{v:?} is not an integer")))
        })
        .collect()
}
