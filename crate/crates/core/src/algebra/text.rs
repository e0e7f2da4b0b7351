//! Parsing of the canonical text forms printed by `Display`.

use super::bipoly::BiPoly;
use super::int::Int;
use super::scalar::ParamScalar;
use crate::error::{Error, Result};

fn perr(s: &str, why: &str) -> Error {
    Error::Parse(format!("{why} in {s:?}"))
}

/// Parses an expanded integer polynomial in q and t such as `q^2*t - 3*q + 1`.
pub fn parse_bipoly(s: &str) -> Result<BiPoly> {
    let src = s;
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(perr(src, "empty polynomial"));
    }
    let mut terms = Vec::new();
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let mut neg = false;
        if bytes[i] == b'+' || bytes[i] == b'-' {
            neg = bytes[i] == b'-';
            i += 1;
        } else if i > 0 {
            return Err(perr(src, "expected sign"));
        }
        let start = i;
        while i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
            i += 1;
        }
        let (e, c) = parse_term(&s[start..i]).ok_or_else(|| perr(src, "bad term"))?;
        terms.push((e, if neg { -c } else { c }));
    }
    Ok(BiPoly::from_terms(terms))
}

fn parse_term(s: &str) -> Option<((u32, u32), Int)> {
    if s.is_empty() {
        return None;
    }
    let mut coeff = Int::ONE;
    let (mut eq, mut et) = (0u32, 0u32);
    for factor in s.split('*') {
        let (base, exp) = match factor.split_once('^') {
            Some((b, e)) => (b, e.parse::<u32>().ok()?),
            None => (factor, 1),
        };
        match base {
            "q" => eq += exp,
            "t" => et += exp,
            _ => {
                let v: Int = base.parse().ok()?;
                coeff = &coeff * &v.pow(exp);
            }
        }
    }
    Some(((eq, et), coeff))
}

/// Parses a `(num, den)` pair of canonical polynomial texts.
pub fn parse_scalar(num: &str, den: &str) -> Result<ParamScalar> {
    ParamScalar::new(parse_bipoly(num)?, parse_bipoly(den)?)
}
