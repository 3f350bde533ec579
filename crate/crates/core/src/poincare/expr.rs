//! Numerator expressions as they appear in fixtures.
//!
//! Integers, identifiers, `^` with an integer exponent, parentheses and
//! products by juxtaposition or `*`. Inside parentheses `...` asks for
//! symmetric completion of that group under the declared variable pair;
//! at top level it is a no-op (the palindrome directive supplies the
//! missing terms).

use super::poly::SparsePoly;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use std::collections::HashMap;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Open,
    Close,
    Ellipsis,
}

fn lex(s: &str) -> std::result::Result<Vec<Tok>, String> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i] as char;
        match c {
            ' ' | '\t' => i += 1,
            '+' => { out.push(Tok::Plus); i += 1 }
            '-' => { out.push(Tok::Minus); i += 1 }
            '*' => { out.push(Tok::Star); i += 1 }
            '^' => { out.push(Tok::Caret); i += 1 }
            '(' => { out.push(Tok::Open); i += 1 }
            ')' => { out.push(Tok::Close); i += 1 }
            '.' => {
                if s[i..].starts_with("...") {
                    out.push(Tok::Ellipsis);
                    i += 3;
                } else {
                    return Err(format!("stray '.' at column {}", i + 1));
                }
            }
            '0'..='9' => {
                let st = i;
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                out.push(Tok::Int(s[st..i].parse().unwrap()));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let st = i;
                while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_') {
                    i += 1;
                }
                out.push(Tok::Ident(s[st..i].to_string()));
            }
            _ => return Err(format!("unexpected '{c}' at column {}", i + 1)),
        }
    }
    Ok(out)
}

/// Names visible to an expression.
pub struct Scope<'a> {
    pub vars: &'a [String],
    pub lets: &'a HashMap<String, SparsePoly>,
    pub symmetric: Option<(usize, usize)>,
}

struct Parser<'a, 'b> {
    toks: Vec<Tok>,
    pos: usize,
    scope: &'b Scope<'a>,
}

impl Parser<'_, '_> {
    fn nvars(&self) -> usize {
        self.scope.vars.len()
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    // sum := [sign] term (sign term)*
    fn sum(&mut self, depth: usize) -> std::result::Result<SparsePoly, String> {
        let mut acc = SparsePoly::zero(self.nvars());
        let mut ellipsis = false;
        let mut first = true;
        loop {
            let neg = match self.peek() {
                Some(Tok::Plus) => { self.pos += 1; false }
                Some(Tok::Minus) => { self.pos += 1; true }
                _ if first => false,
                _ => break,
            };
            first = false;
            if self.peek() == Some(&Tok::Ellipsis) {
                self.pos += 1;
                ellipsis = true;
                continue;
            }
            let t = self.product(depth)?;
            acc = if neg { acc.sub(&t) } else { acc.add(&t) };
        }
        if ellipsis && depth > 0 {
            let (a, b) = self.scope.symmetric.ok_or("'...' inside parentheses needs a symmetric-pairs directive")?;
            acc = complete_symmetric(&acc, a, b);
        }
        Ok(acc)
    }

    fn product(&mut self, depth: usize) -> std::result::Result<SparsePoly, String> {
        let mut acc = self.power(depth)?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.power(depth)?);
                }
                Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::Open) => acc = acc.mul(&self.power(depth)?),
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self, depth: usize) -> std::result::Result<SparsePoly, String> {
        let base = self.atom(depth)?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.next() {
                Some(Tok::Int(e)) => {
                    let e: u32 = e.try_into().map_err(|_| "exponent too large".to_string())?;
                    return Ok(base.pow(e));
                }
                _ => return Err("expected an integer exponent after '^'".into()),
            }
        }
        Ok(base)
    }

    fn atom(&mut self, depth: usize) -> std::result::Result<SparsePoly, String> {
        match self.next() {
            Some(Tok::Int(c)) => Ok(SparsePoly::one(self.nvars()).scale(&c)),
            Some(Tok::Ident(name)) => {
                if let Some(i) = self.scope.vars.iter().position(|v| *v == name) {
                    Ok(SparsePoly::variable(self.nvars(), i))
                } else if let Some(p) = self.scope.lets.get(&name) {
                    Ok(p.clone())
                } else {
                    Err(format!("unknown name '{name}'"))
                }
            }
            Some(Tok::Open) => {
                let inner = self.sum(depth + 1)?;
                match self.next() {
                    Some(Tok::Close) => Ok(inner),
                    _ => Err("missing ')'".into()),
                }
            }
            Some(t) => Err(format!("unexpected token {t:?}")),
            None => Err("unexpected end of expression".into()),
        }
    }
}

/// Add the mirror image under a ↔ b of every term whose mirror is absent.
pub fn complete_symmetric(p: &SparsePoly, a: usize, b: usize) -> SparsePoly {
    let mut out = p.clone();
    for (m, c) in p.terms() {
        let mut r = m.clone();
        r.swap(a, b);
        if p.coeff(&r) == BigInt::default() {
            out.add_term(r, c.clone());
        }
    }
    out
}

pub fn evaluate(text: &str, scope: &Scope<'_>) -> Result<SparsePoly> {
    let err = |m: String| Error::Data(format!("expression '{text}': {m}"));
    let toks = lex(text).map_err(err)?;
    let mut p = Parser { toks, pos: 0, scope };
    let v = p.sum(0).map_err(err)?;
    if p.pos < p.toks.len() {
        return Err(err(format!("trailing input at token {}", p.pos + 1)));
    }
    Ok(v)
}
