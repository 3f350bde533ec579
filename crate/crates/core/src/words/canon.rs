use super::{Alphabet, Letter, LetterKind, Word};
use crate::error::{Error, Result};

/// Class of a word under rotation and star-reversal.
///
/// For letters declared in 𝔭 or 𝔨 the star is resolved (x* = x,
/// y* = −y), so the class also records the sign relating the trace of
/// the original word to the trace of `canon`. A sign of 0 means the
/// trace vanishes identically (the word is equivalent to minus itself).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TraceClass {
    pub canon: Word,
    pub sign: i8,
}

impl TraceClass {
    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }
}

fn resolve_stars(w: &Word, alphabet: &Alphabet) -> (Word, i8) {
    let mut sign = 1i8;
    let letters = w
        .letters
        .iter()
        .map(|l| match alphabet.kind(l.matrix_id as usize) {
            LetterKind::Generic => *l,
            LetterKind::P => Letter::new(l.matrix_id, false),
            LetterKind::K => {
                if l.starred {
                    sign = -sign;
                }
                Letter::new(l.matrix_id, false)
            }
        })
        .collect();
    (Word { letters }, sign)
}

/// Least rotation (Booth's algorithm would do; words are short).
fn least_rotation(w: &Word) -> Word {
    let n = w.len();
    let mut best = 0;
    for k in 1..n {
        for i in 0..n {
            let a = w.letters[(k + i) % n];
            let b = w.letters[(best + i) % n];
            if a != b {
                if a < b {
                    best = k;
                }
                break;
            }
        }
    }
    w.rotate(best)
}

pub fn canonicalize(w: &Word, alphabet: &Alphabet) -> Result<TraceClass> {
    if w.is_empty() {
        return Err(Error::parse(0, "cannot canonicalize the empty word"));
    }
    if let Some(l) = w.letters.iter().find(|l| l.matrix_id as usize >= alphabet.len()) {
        return Err(Error::Incompatible(format!("letter id {} outside alphabet {alphabet}", l.matrix_id)));
    }
    let (a, sa) = resolve_stars(w, alphabet);
    let (b, sb) = resolve_stars(&w.star_reverse(), alphabet);
    let ra = least_rotation(&a);
    let rb = least_rotation(&b);
    let class = match ra.cmp(&rb) {
        std::cmp::Ordering::Less => TraceClass { canon: ra, sign: sa },
        std::cmp::Ordering::Greater => TraceClass { canon: rb, sign: sb },
        std::cmp::Ordering::Equal => TraceClass { canon: ra, sign: if sa == sb { sa } else { 0 } },
    };
    Ok(class)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;
    use std::collections::BTreeSet;

    fn class(s: &str, a: &Alphabet) -> TraceClass {
        canonicalize(&parse_word(s, a).unwrap(), a).unwrap()
    }

    #[test]
    fn examples() {
        let z = Alphabet::parse("z").unwrap();
        assert_eq!(class("z z*", &z), class("z* z", &z));
        assert_eq!(class("z", &z), class("z*", &z));
        let xy = Alphabet::parse("x y").unwrap();
        assert_eq!(class("x y", &xy), class("y x", &xy));
        assert_ne!(class("x y", &xy), class("x y*", &xy));
        assert!(canonicalize(&Word::new(vec![]), &z).is_err());
    }

    #[test]
    fn typed_letters_resolve_stars() {
        let a = Alphabet::parse("x:p y:k").unwrap();
        assert_eq!(class("x*", &a), class("x", &a));
        let c = class("y*", &a);
        assert_eq!(c.canon, parse_word("y", &a).unwrap());
        // tr y = tr y* = −tr y, so tr y vanishes.
        assert!(class("y", &a).is_zero());
        assert!(c.is_zero());
        // x²yxy² is not a palindrome up to rotation; its reversal
        // carries the sign (−1)^3.
        let w = class("x x y x y y", &a);
        let r = class("y y x y x x", &a);
        assert_eq!(w.canon, r.canon);
        assert_eq!(w.sign, -r.sign);
        assert_eq!(class("x y y", &a).sign, 1);
    }

    #[test]
    fn idempotent_and_orbit_constant_up_to_length_6() {
        // Exhaustive over the starred two-letter alphabet {x, x*, y, y*}
        // would be 4^6; the single starred letter alphabet covers the
        // star-reversal logic, the pair covers rotation.
        let xy = Alphabet::parse("x y").unwrap();
        let letters: Vec<Letter> = (0..2u16).flat_map(|m| [Letter::new(m, false), Letter::new(m, true)]).collect();
        for len in 1..=6usize {
            let total = letters.len().pow(len as u32);
            for code in 0..total {
                let mut c = code;
                let w = Word::new((0..len).map(|_| {
                    let l = letters[c % letters.len()];
                    c /= letters.len();
                    l
                }).collect());
                let k = canonicalize(&w, &xy).unwrap();
                assert_eq!(canonicalize(&k.canon, &xy).unwrap().canon, k.canon);
                for r in 0..len {
                    assert_eq!(canonicalize(&w.rotate(r), &xy).unwrap(), k);
                }
                assert_eq!(canonicalize(&w.star_reverse(), &xy).unwrap(), k);
            }
        }
    }

    #[test]
    fn orbit_counts_match_brute_force_merge() {
        // Union-find style merge of the raw orbits for words of length ≤ 6
        // over {z, z*}; the number of orbits equals the number of classes.
        let z = Alphabet::parse("z").unwrap();
        for len in 1..=6usize {
            let words: Vec<Word> = (0..1usize << len)
                .map(|code| Word::new((0..len).map(|i| Letter::new(0, code >> i & 1 == 1)).collect()))
                .collect();
            let mut seen: BTreeSet<Word> = BTreeSet::new();
            let mut orbits = 0;
            for w in &words {
                if seen.contains(w) {
                    continue;
                }
                orbits += 1;
                let mut stack = vec![w.clone()];
                while let Some(u) = stack.pop() {
                    if !seen.insert(u.clone()) {
                        continue;
                    }
                    stack.push(u.rotate(1));
                    stack.push(u.star_reverse());
                }
            }
            let classes: BTreeSet<TraceClass> = words.iter().map(|w| canonicalize(w, &z).unwrap()).collect();
            assert_eq!(classes.len(), orbits, "length {len}");
        }
    }
}
