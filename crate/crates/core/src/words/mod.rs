//! Trace words in generic matrices and their adjoints.
//!
//! A word is a sequence of letters; a letter names one of the matrices
//! of an [`Alphabet`] and may carry a star (symplectic adjoint). The
//! trace of a word only depends on its [`TraceClass`].

mod alphabet;
mod canon;
mod enumerate;
mod wordfile;

pub use alphabet::{Alphabet, LetterKind};
pub use canon::{canonicalize, TraceClass};
pub use enumerate::{enumerate_classes, kuzmin_bound, razmyslov_bound};
pub use wordfile::{WordEntry, WordList};

use crate::error::{Error, Result};
use std::fmt;

/// Letter order is (matrix_id, starred) with unstarred first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub matrix_id: u16,
    pub starred: bool,
}

impl Letter {
    pub fn new(matrix_id: u16, starred: bool) -> Self {
        Letter { matrix_id, starred }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    pub letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letter counts per matrix; stars count toward the base letter.
    pub fn multidegree(&self, matrices: usize) -> Vec<u32> {
        let mut d = vec![0u32; matrices];
        for l in &self.letters {
            d[l.matrix_id as usize] += 1;
        }
        d
    }

    pub fn rotate(&self, k: usize) -> Word {
        let n = self.letters.len();
        Word { letters: (0..n).map(|i| self.letters[(i + k) % n]).collect() }
    }

    /// Word of w*: reverse the sequence and flip every star.
    pub fn star_reverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| Letter::new(l.matrix_id, !l.starred)).collect(),
        }
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        WordDisplay { word: self, alphabet }
    }
}

struct WordDisplay<'a> {
    word: &'a Word,
    alphabet: &'a Alphabet,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.word.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.alphabet.name(l.matrix_id as usize))?;
            if l.starred {
                f.write_str("*")?;
            }
        }
        Ok(())
    }
}

/// Parses whitespace-separated letters such as `x x* y`.
pub fn parse_word(text: &str, alphabet: &Alphabet) -> Result<Word> {
    let mut letters = Vec::new();
    for tok in text.split_whitespace() {
        let (name, starred) = match tok.strip_suffix('*') {
            Some(base) => (base, true),
            None => (tok, false),
        };
        let id = alphabet
            .index_of(name)
            .ok_or_else(|| Error::parse(0, format!("unknown letter '{tok}' for alphabet {alphabet}")))?;
        letters.push(Letter::new(id as u16, starred));
    }
    if letters.is_empty() {
        return Err(Error::parse(0, "empty word"));
    }
    Ok(Word { letters })
}
