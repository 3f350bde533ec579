//! Line-oriented fixture documents. Parsing keeps every line as an item so
//! that printing a parsed canonical file reproduces it byte for byte.

use super::expr::{evaluate, Scope};
use super::poly::{Monomial, SparsePoly};
use super::series::{palindromic_complete, Meta, RationalSeries, Role, Variable};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::One;
use std::collections::HashMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub enum Item {
    Comment(String),
    Blank,
    Name(String),
    Meta(Meta),
    Variables(Vec<Variable>),
    SymmetricPair(String, String),
    Palindrome(Vec<u32>),
    Numerator,
    Denominator,
    Term { coeff: BigInt, exps: Monomial },
    Expr(String),
    Let { name: String, text: String },
    Factor(Monomial),
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct Fixture {
    pub items: Vec<Item>,
}

#[derive(PartialEq, Clone, Copy)]
enum Section {
    Header,
    Numerator,
    Denominator,
}

fn ints<T: std::str::FromStr>(s: &str, line: usize) -> Result<Vec<T>> {
    s.split_whitespace()
        .map(|w| w.parse::<T>().map_err(|_| Error::parse(line, format!("expected an integer, found '{w}'"))))
        .collect()
}

impl Fixture {
    pub fn parse(text: &str) -> Result<Self> {
        let mut items = Vec::new();
        let mut section = Section::Header;
        for (i, raw) in text.lines().enumerate() {
            let ln = i + 1;
            let line = raw.trim_end();
            if line.is_empty() {
                items.push(Item::Blank);
                continue;
            }
            if line.starts_with('#') {
                items.push(Item::Comment(line.to_string()));
                continue;
            }
            if line == "numerator:" {
                if section != Section::Header {
                    return Err(Error::parse(ln, "numerator: must come once, before denominator:"));
                }
                section = Section::Numerator;
                items.push(Item::Numerator);
                continue;
            }
            if line == "denominator:" {
                if section != Section::Numerator {
                    return Err(Error::parse(ln, "denominator: must follow numerator:"));
                }
                section = Section::Denominator;
                items.push(Item::Denominator);
                continue;
            }
            let item = match section {
                Section::Header => {
                    let (key, rest) = line
                        .split_once(':')
                        .ok_or_else(|| Error::parse(ln, format!("expected 'key: value', found '{line}'")))?;
                    let rest = rest.trim();
                    match key {
                        "name" => Item::Name(rest.to_string()),
                        "meta" => match ints::<u32>(rest, ln)?[..] {
                            [n, k1, k2] if n > 0 => Item::Meta(Meta { n, k1, k2 }),
                            _ => return Err(Error::parse(ln, "meta needs n k1 k2 with n > 0")),
                        },
                        "variables" => Item::Variables(
                            rest.split_whitespace()
                                .map(|v| Variable::parse(v).map_err(|m| Error::parse(ln, m)))
                                .collect::<Result<_>>()?,
                        ),
                        "symmetric-pairs" => match rest.split_whitespace().collect::<Vec<_>>()[..] {
                            [a, b] => Item::SymmetricPair(a.to_string(), b.to_string()),
                            _ => return Err(Error::parse(ln, "symmetric-pairs takes two variable names")),
                        },
                        "palindrome" => Item::Palindrome(ints(rest, ln)?),
                        _ => return Err(Error::parse(ln, format!("unknown directive '{key}'"))),
                    }
                }
                Section::Numerator => {
                    if let Some(e) = line.strip_prefix("expr ") {
                        Item::Expr(e.trim().to_string())
                    } else if let Some(l) = line.strip_prefix("let ") {
                        let (name, text) =
                            l.split_once('=').ok_or_else(|| Error::parse(ln, "let needs 'name = expression'"))?;
                        let name = name.trim();
                        if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                            return Err(Error::parse(ln, format!("bad let name '{name}'")));
                        }
                        Item::Let { name: name.to_string(), text: text.trim().to_string() }
                    } else {
                        let mut v = ints::<BigInt>(line, ln)?.into_iter();
                        let coeff = v.next().unwrap();
                        let exps = v
                            .map(|e| u32::try_from(e).map_err(|_| Error::parse(ln, "exponents must be non-negative")))
                            .collect::<Result<_>>()?;
                        Item::Term { coeff, exps }
                    }
                }
                Section::Denominator => Item::Factor(ints(line, ln)?),
            };
            items.push(item);
        }
        if section != Section::Denominator {
            return Err(Error::parse(text.lines().count(), "missing numerator: or denominator: section"));
        }
        Ok(Fixture { items })
    }

    fn variables(&self) -> Option<&[Variable]> {
        self.items.iter().find_map(|i| match i {
            Item::Variables(v) => Some(v.as_slice()),
            _ => None,
        })
    }

    /// Evaluate into a series: expressions, symmetric shorthand, then
    /// palindromic completion.
    pub fn to_series(&self) -> Result<RationalSeries> {
        let vars = self.variables().ok_or_else(|| Error::Data("fixture has no variables: line".into()))?.to_vec();
        let names: Vec<String> = vars.iter().map(|v| v.name.clone()).collect();
        let nv = vars.len();
        let index = |n: &str| {
            names.iter().position(|v| v == n).ok_or_else(|| Error::Data(format!("unknown variable '{n}'")))
        };
        let mut meta = None;
        let mut name = String::new();
        let mut symmetric = None;
        let mut palindrome = None;
        let mut lets: HashMap<String, SparsePoly> = HashMap::new();
        let mut num = SparsePoly::zero(nv);
        let mut den = Vec::new();
        for item in &self.items {
            match item {
                Item::Name(n) => name = n.clone(),
                Item::Meta(m) => meta = Some(*m),
                Item::SymmetricPair(a, b) => symmetric = Some((index(a)?, index(b)?)),
                Item::Palindrome(a) => {
                    if a.len() != nv {
                        return Err(Error::Data(format!("palindrome needs {nv} exponents")));
                    }
                    palindrome = Some(a.clone())
                }
                Item::Term { coeff, exps } => {
                    if exps.len() != nv {
                        return Err(Error::Data(format!("term {coeff} {exps:?} needs {nv} exponents")));
                    }
                    num.add_term(exps.clone(), coeff.clone());
                }
                Item::Let { name, text } => {
                    let v = evaluate(text, &Scope { vars: &names, lets: &lets, symmetric })?;
                    lets.insert(name.clone(), v);
                }
                Item::Expr(text) => {
                    num = num.add(&evaluate(text, &Scope { vars: &names, lets: &lets, symmetric })?);
                }
                Item::Factor(mu) => {
                    if mu.len() != nv || mu.iter().all(|&e| e == 0) {
                        return Err(Error::Data(format!("denominator factor {mu:?} must be a nonconstant monomial in {nv} variables")));
                    }
                    den.push(mu.clone());
                }
                _ => {}
            }
        }
        let meta = meta.ok_or_else(|| Error::Data("fixture has no meta: line".into()))?;
        if let Some(a) = palindrome {
            num = palindromic_complete(&num, &a)?;
        }
        if !num.constant_term().is_one() {
            return Err(Error::Data(format!("numerator of '{name}' must have constant term 1")));
        }
        Ok(RationalSeries { name, meta, vars, numerator: num, denominator: den })
    }

    /// Plain fixture listing every numerator term.
    pub fn from_series(s: &RationalSeries) -> Self {
        let mut items = vec![
            Item::Name(s.name.clone()),
            Item::Meta(s.meta),
            Item::Variables(s.vars.clone()),
            Item::Numerator,
        ];
        let mut terms: Vec<_> = s.numerator.terms().collect();
        terms.sort_by_key(|(m, _)| (super::poly::total(m), (*m).clone()));
        items.extend(terms.into_iter().map(|(m, c)| Item::Term { coeff: c.clone(), exps: m.clone() }));
        items.push(Item::Denominator);
        items.extend(s.denominator.iter().cloned().map(Item::Factor));
        Fixture { items }
    }
}

fn join(v: &[u32]) -> String {
    v.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")
}

impl fmt::Display for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Item::Comment(c) => f.write_str(c),
            Item::Blank => Ok(()),
            Item::Name(n) => write!(f, "name: {n}"),
            Item::Meta(m) => write!(f, "meta: {} {} {}", m.n, m.k1, m.k2),
            Item::Variables(vs) => {
                f.write_str("variables:")?;
                vs.iter().try_for_each(|v| write!(f, " {v}"))
            }
            Item::SymmetricPair(a, b) => write!(f, "symmetric-pairs: {a} {b}"),
            Item::Palindrome(a) => write!(f, "palindrome: {}", join(a)),
            Item::Numerator => f.write_str("numerator:"),
            Item::Denominator => f.write_str("denominator:"),
            Item::Term { coeff, exps } => write!(f, "{coeff}  {}", join(exps)),
            Item::Expr(e) => write!(f, "expr {e}"),
            Item::Let { name, text } => write!(f, "let {name} = {text}"),
            Item::Factor(m) => f.write_str(&join(m)),
        }
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.items.iter().try_for_each(|i| writeln!(f, "{i}"))
    }
}

impl Role {
    pub fn parse(s: &str) -> std::result::Result<Role, String> {
        let mut r = Role { p: 0, k: 0 };
        for part in s.split('+') {
            let (num, kind) = part.split_at(part.len().saturating_sub(1));
            let c: u32 = if num.is_empty() { 1 } else { num.parse().map_err(|_| format!("bad role '{s}'"))? };
            match kind {
                "p" => r.p += c,
                "k" => r.k += c,
                _ => return Err(format!("bad role '{s}' (expected terms like p, k, 2p+2k)")),
            }
        }
        Ok(r)
    }
}

impl Variable {
    pub fn parse(s: &str) -> std::result::Result<Variable, String> {
        let (name, role) = s.split_once(':').ok_or_else(|| format!("variable '{s}' needs a role, e.g. x1:p"))?;
        if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(format!("bad variable name '{name}'"));
        }
        Ok(Variable { name: name.to_string(), role: Role::parse(role)? })
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |c: u32, s: &str| match c {
            0 => None,
            1 => Some(s.to_string()),
            c => Some(format!("{c}{s}")),
        };
        let parts: Vec<String> = [part(self.p, "p"), part(self.k, "k")].into_iter().flatten().collect();
        f.write_str(&parts.join("+"))
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.name, self.role)
    }
}
