//! Plain-text ideal files.
//!
//! ```text
//! # comment
//! ring n 4 char 0
//! x1^2
//! x1*x2*x3 + x3^2*x4
//! 3x1x2 - 2 x3^2
//! ```
//!
//! The header names the variable count and the characteristic (`0` for the
//! rationals). Each remaining non-blank line is one polynomial with integer
//! coefficients in `x1..xn`; `*` between factors is optional.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::field::Field;
use super::ideal::IdealBasis;
use super::poly::{Monomial, Polynomial};
use crate::error::{Error, Result};

/// Polynomial with integer coefficients, independent of the target field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    pub nvars: usize,
    pub terms: BTreeMap<Monomial, BigInt>,
}

impl IntPoly {
    pub fn to_field<F: Field>(&self, field: &F) -> Polynomial<F> {
        Polynomial::from_terms(
            field.clone(),
            self.nvars,
            self.terms
                .iter()
                .map(|(m, c)| (m.clone(), field.from_bigint(c))),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealFile {
    pub nvars: usize,
    /// `0` for the rationals
    pub characteristic: u64,
    pub generators: Vec<IntPoly>,
}

impl IdealFile {
    /// The generators over `field`, which need not match the header.
    pub fn ideal<F: Field>(&self, field: &F) -> Result<IdealBasis<F>> {
        IdealBasis::new(
            field.clone(),
            self.nvars,
            self.generators.iter().map(|g| g.to_field(field)).collect(),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Var(usize),
    Star,
    Caret,
    Plus,
    Minus,
}

fn tokenize(s: &str, line: usize) -> Result<Vec<Token>> {
    let err = |msg: String| Error::Parse { line, msg };
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let digits = |i: &mut usize| {
        let start = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
        }
        chars[start..*i].iter().collect::<String>()
    };
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\r' => i += 1,
            '*' => {
                out.push(Token::Star);
                i += 1;
            }
            '^' => {
                out.push(Token::Caret);
                i += 1;
            }
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' => {
                out.push(Token::Minus);
                i += 1;
            }
            'x' => {
                i += 1;
                let ds = digits(&mut i);
                if ds.is_empty() {
                    return Err(err("variable name needs an index, e.g. x1".into()));
                }
                let idx: usize = ds.parse().map_err(|_| err(format!("bad variable index {ds}")))?;
                out.push(Token::Var(idx));
            }
            d if d.is_ascii_digit() => {
                let ds = digits(&mut i);
                out.push(Token::Int(ds.parse().expect("digits")));
            }
            other => return Err(err(format!("unexpected character '{other}'"))),
        }
    }
    Ok(out)
}

/// Parses one polynomial in `x1..x{nvars}`.
pub fn parse_polynomial(s: &str, nvars: usize) -> Result<IntPoly> {
    parse_line(s, nvars, 0)
}

fn parse_line(s: &str, nvars: usize, line: usize) -> Result<IntPoly> {
    let err = |msg: String| Error::Parse { line, msg };
    let toks = tokenize(s, line)?;
    if toks.is_empty() {
        return Err(err("empty polynomial".into()));
    }
    let mut terms: BTreeMap<Monomial, BigInt> = BTreeMap::new();
    let mut pos = 0;
    let mut first = true;
    while pos < toks.len() {
        let mut sign = BigInt::one();
        match toks[pos] {
            Token::Plus => pos += 1,
            Token::Minus => {
                sign = -sign;
                pos += 1;
            }
            _ if first => {}
            _ => return Err(err("expected '+' or '-' between terms".into())),
        }
        first = false;
        let mut coeff = sign;
        let mut exps = vec![0u32; nvars];
        let mut factors = 0;
        loop {
            match toks.get(pos) {
                Some(Token::Int(n)) => {
                    coeff *= n;
                    pos += 1;
                }
                Some(Token::Var(v)) => {
                    let v = *v;
                    if v == 0 || v > nvars {
                        return Err(err(format!("variable x{v} outside x1..x{nvars}")));
                    }
                    pos += 1;
                    let mut e = 1u32;
                    if toks.get(pos) == Some(&Token::Caret) {
                        pos += 1;
                        match toks.get(pos) {
                            Some(Token::Int(n)) => {
                                e = u32::try_from(n.clone())
                                    .map_err(|_| err(format!("exponent {n} too large")))?;
                                pos += 1;
                            }
                            _ => return Err(err("expected integer exponent after '^'".into())),
                        }
                    }
                    exps[v - 1] += e;
                }
                _ => return Err(err("expected a coefficient or variable".into())),
            }
            factors += 1;
            match toks.get(pos) {
                Some(Token::Star) => {
                    pos += 1;
                    continue;
                }
                Some(Token::Int(_)) | Some(Token::Var(_)) => continue,
                _ => break,
            }
        }
        debug_assert!(factors > 0);
        let m = Monomial::new(exps);
        let entry = terms.entry(m.clone()).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            terms.remove(&m);
        }
    }
    Ok(IntPoly { nvars, terms })
}

fn parse_header(s: &str, line: usize) -> Result<(usize, u64)> {
    let err = || Error::Parse {
        line,
        msg: format!("expected header 'ring n <n> char <q|0>', got '{s}'"),
    };
    let words: Vec<&str> = s.split_whitespace().collect();
    match words.as_slice() {
        ["ring", "n", n, "char", q] => {
            let n: usize = n.parse().map_err(|_| err())?;
            let q: u64 = q.parse().map_err(|_| err())?;
            if n == 0 {
                return Err(err());
            }
            Ok((n, q))
        }
        _ => Err(err()),
    }
}

pub fn parse_ideal_file(text: &str) -> Result<IdealFile> {
    let mut header = None;
    let mut generators = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line = no + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        match header {
            None => header = Some(parse_header(content, line)?),
            Some((n, _)) => generators.push(parse_line(content, n, line)?),
        }
    }
    let (nvars, characteristic) = header.ok_or(Error::Parse {
        line: 0,
        msg: "missing 'ring' header".into(),
    })?;
    Ok(IdealFile {
        nvars,
        characteristic,
        generators,
    })
}
