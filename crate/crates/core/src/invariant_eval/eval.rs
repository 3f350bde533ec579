use super::sample::SamplePoint;
use crate::algebra_core::{Fp, Mat, SymplecticContext};
use crate::error::{Error, Result};
use crate::words::{Alphabet, Word};

/// tr of the word's product, starred letters read through the symplectic
/// adjoint.
pub fn eval_trace(ctx: &SymplecticContext, w: &Word, pt: &SamplePoint) -> Result<Fp> {
    if w.is_empty() {
        return Err(Error::Incompatible("empty word".into()));
    }
    let mut acc: Option<Mat<Fp>> = None;
    for l in &w.letters {
        let m = pt
            .mats
            .get(l.matrix_id as usize)
            .ok_or_else(|| Error::Incompatible(format!("letter {} but the point has {} matrices", l.matrix_id, pt.mats.len())))?;
        let m = if l.starred { ctx.adjoint(m)? } else { m.clone() };
        acc = Some(match acc {
            None => m,
            Some(a) => a.checked_mul(&m)?,
        });
    }
    Ok(acc.unwrap().trace())
}

/// Flattened matrices mod p for the hot loop: entry 2i is letter i,
/// entry 2i + 1 its adjoint.
pub struct FastPoint {
    dim: usize,
    p: u64,
    mats: Vec<Vec<u64>>,
}

const HALF: u64 = 1 << 63;

impl FastPoint {
    pub fn new(ctx: &SymplecticContext, pt: &SamplePoint) -> Result<Self> {
        let p = pt.mats.first().map(|m| m.get(0, 0).modulus()).unwrap_or(2);
        let flat = |m: &Mat<Fp>| m.entries().iter().map(|v| v.value()).collect::<Vec<u64>>();
        let mut mats = Vec::with_capacity(2 * pt.mats.len());
        for m in &pt.mats {
            mats.push(flat(m));
            mats.push(flat(&ctx.adjoint(m)?));
        }
        Ok(FastPoint { dim: ctx.dim(), p, mats })
    }

    fn mul_into(&self, a: &[u64], b: &[u64], out: &mut [u64]) {
        let d = self.dim;
        for r in 0..d {
            for c in 0..d {
                let mut acc = 0u64;
                for k in 0..d {
                    acc += a[r * d + k] * b[k * d + c];
                    if acc >= HALF {
                        acc %= self.p;
                    }
                }
                out[r * d + c] = acc % self.p;
            }
        }
    }

    /// Trace of the word, as an integer in [0, p).
    pub fn trace(&self, w: &Word) -> u64 {
        let d = self.dim;
        let idx = |i: usize| 2 * w.letters[i].matrix_id as usize + w.letters[i].starred as usize;
        let last = &self.mats[idx(w.len() - 1)];
        let mut cur = vec![0u64; d * d];
        let mut tmp = vec![0u64; d * d];
        if w.len() == 1 {
            return (0..d).map(|i| last[i * d + i]).sum::<u64>() % self.p;
        }
        cur.copy_from_slice(&self.mats[idx(0)]);
        for i in 1..w.len() - 1 {
            self.mul_into(&cur, &self.mats[idx(i)], &mut tmp);
            std::mem::swap(&mut cur, &mut tmp);
        }
        // tr(M·L) = Σ M[r][k] L[k][r]
        let mut acc = 0u64;
        for r in 0..d {
            for k in 0..d {
                acc += cur[r * d + k] * last[k * d + r];
                if acc >= HALF {
                    acc %= self.p;
                }
            }
        }
        acc % self.p
    }
}

/// Checks that every generator word fits the alphabet.
pub fn check_words(alphabet: &Alphabet, words: &[Word]) -> Result<()> {
    for (i, w) in words.iter().enumerate() {
        if w.is_empty() {
            return Err(Error::Incompatible(format!("generator {} is the empty word", i + 1)));
        }
        if w.letters.iter().any(|l| l.matrix_id as usize >= alphabet.len()) {
            return Err(Error::Incompatible(format!("generator {} uses a letter outside {alphabet}", i + 1)));
        }
    }
    Ok(())
}
