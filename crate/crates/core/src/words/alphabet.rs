use crate::error::{Error, Result};
use std::fmt;

/// How a matrix of the tuple is constrained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub enum LetterKind {
    /// Arbitrary matrix; its adjoint is a different function.
    Generic,
    /// x* = x.
    P,
    /// y* = −y.
    K,
}

/// Ordered list of named matrices, e.g. `x y` or `x:p y:k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    kinds: Vec<LetterKind>,
}

impl Alphabet {
    pub fn new(entries: Vec<(String, LetterKind)>) -> Result<Self> {
        let mut names = Vec::new();
        let mut kinds = Vec::new();
        for (n, k) in entries {
            if !valid_name(&n) {
                return Err(Error::parse(0, format!("invalid letter name '{n}'")));
            }
            if names.contains(&n) {
                return Err(Error::parse(0, format!("duplicate letter '{n}'")));
            }
            names.push(n);
            kinds.push(k);
        }
        if names.is_empty() {
            return Err(Error::parse(0, "empty alphabet"));
        }
        Ok(Alphabet { names, kinds })
    }

    /// `name` or `name:p` / `name:k` / `name:g`, whitespace separated.
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for tok in text.split_whitespace() {
            let (name, kind) = match tok.split_once(':') {
                None => (tok, LetterKind::Generic),
                Some((n, "p")) => (n, LetterKind::P),
                Some((n, "k")) => (n, LetterKind::K),
                Some((n, "g")) => (n, LetterKind::Generic),
                Some((_, other)) => return Err(Error::parse(0, format!("unknown letter kind '{other}'"))),
            };
            entries.push((name.to_string(), kind));
        }
        Self::new(entries)
    }

    /// k generic matrices named x, y (k ≤ 2) or x1..xk.
    pub fn generic(k: usize) -> Self {
        let names: Vec<String> = match k {
            1 => vec!["x".into()],
            2 => vec!["x".into(), "y".into()],
            _ => (1..=k).map(|i| format!("x{i}")).collect(),
        };
        Alphabet { kinds: vec![LetterKind::Generic; names.len()], names }
    }

    /// k₁ matrices in 𝔭 and k₂ in 𝔨.
    pub fn split(k1: usize, k2: usize) -> Self {
        let mut names = Vec::new();
        let mut kinds = Vec::new();
        for i in 1..=k1 {
            names.push(if k1 == 1 { "x".to_string() } else { format!("x{i}") });
            kinds.push(LetterKind::P);
        }
        for i in 1..=k2 {
            names.push(if k2 == 1 { "y".to_string() } else { format!("y{i}") });
            kinds.push(LetterKind::K);
        }
        Alphabet { names, kinds }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, id: usize) -> &str {
        &self.names[id]
    }

    pub fn kind(&self, id: usize) -> LetterKind {
        self.kinds[id]
    }

    pub fn kinds(&self) -> &[LetterKind] {
        &self.kinds
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// (copies of 𝔭, copies of 𝔨) contributed by each matrix.
    pub fn roles(&self) -> Vec<(u32, u32)> {
        self.kinds
            .iter()
            .map(|k| match k {
                LetterKind::Generic => (1, 1),
                LetterKind::P => (1, 0),
                LetterKind::K => (0, 1),
            })
            .collect()
    }

    pub fn has_typed_letters(&self) -> bool {
        self.kinds.iter().any(|k| *k != LetterKind::Generic)
    }
}

fn valid_name(n: &str) -> bool {
    let mut cs = n.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_alphabetic()) && cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (n, k)) in self.names.iter().zip(&self.kinds).enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(n)?;
            match k {
                LetterKind::Generic => {}
                LetterKind::P => f.write_str(":p")?,
                LetterKind::K => f.write_str(":k")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        for s in ["x y", "x:p y:k", "z", "x1:p x2:p y1:k"] {
            assert_eq!(Alphabet::parse(s).unwrap().to_string(), s);
        }
        assert!(Alphabet::parse("x x").is_err());
        assert!(Alphabet::parse("x:q").is_err());
        assert!(Alphabet::parse("1x").is_err());
        assert!(Alphabet::parse("").is_err());
    }

    #[test]
    fn constructors() {
        assert_eq!(Alphabet::generic(2).to_string(), "x y");
        assert_eq!(Alphabet::split(1, 1).to_string(), "x:p y:k");
        assert_eq!(Alphabet::split(2, 1).to_string(), "x1:p x2:p y:k");
        assert_eq!(Alphabet::split(1, 1).roles(), vec![(1, 0), (0, 1)]);
    }
}
