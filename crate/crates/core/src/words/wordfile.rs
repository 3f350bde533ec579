use super::{parse_word, Alphabet, Word};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct WordEntry {
    pub word: Word,
    /// 1-based line number in the source file.
    pub line: usize,
    /// Trailing `#` comment, if any (typically the printed spelling).
    pub note: Option<String>,
}

/// A list of words with a declared alphabet.
///
/// Format: `#` comments, one `alphabet: ...` header, then one word per
/// line. Optional `degree: d` lines assert the total degree of the
/// words that follow.
#[derive(Clone, Debug, PartialEq)]
pub struct WordList {
    pub alphabet: Alphabet,
    pub entries: Vec<WordEntry>,
}

impl WordList {
    pub fn parse(text: &str) -> Result<Self> {
        let mut alphabet: Option<Alphabet> = None;
        let mut entries = Vec::new();
        let mut degree: Option<usize> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let (body, note) = match raw.split_once('#') {
                Some((b, c)) => (b, Some(c.trim().to_string())),
                None => (raw, None),
            };
            let body = body.trim();
            if body.is_empty() {
                continue;
            }
            if let Some(rest) = body.strip_prefix("alphabet:") {
                if alphabet.is_some() {
                    return Err(Error::parse(line, "duplicate alphabet header"));
                }
                alphabet = Some(Alphabet::parse(rest).map_err(|e| relocate(e, line))?);
                continue;
            }
            if let Some(rest) = body.strip_prefix("degree:") {
                degree = Some(rest.trim().parse().map_err(|_| Error::parse(line, "bad degree"))?);
                continue;
            }
            let a = alphabet.as_ref().ok_or_else(|| Error::parse(line, "word before the alphabet header"))?;
            let word = parse_word(body, a).map_err(|e| relocate(e, line))?;
            if let Some(d) = degree {
                if word.len() != d {
                    return Err(Error::parse(line, format!("word has degree {} inside a degree {d} group", word.len())));
                }
            }
            entries.push(WordEntry { word, line, note: note.filter(|n| !n.is_empty()) });
        }
        let alphabet = alphabet.ok_or_else(|| Error::parse(0, "missing alphabet header"))?;
        Ok(WordList { alphabet, entries })
    }

    pub fn words(&self) -> Vec<Word> {
        self.entries.iter().map(|e| e.word.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn relocate(e: Error, line: usize) -> Error {
    match e {
        Error::Parse { msg, .. } => Error::Parse { line, msg },
        other => other,
    }
}
