use crate::error::{Error, Result};
use crate::invariant_eval::Target;
use crate::poincare::{RationalSeries, Role};
use crate::words::{Alphabet, LetterKind};

/// How word multidegrees map onto series exponents.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grading {
    /// One series variable per matrix.
    Multi,
    /// A single series variable counting total degree.
    Total,
}

fn letter_role(k: LetterKind) -> Role {
    match k {
        LetterKind::Generic => Role { p: 1, k: 1 },
        LetterKind::P => Role { p: 1, k: 0 },
        LetterKind::K => Role { p: 0, k: 1 },
    }
}

impl Grading {
    /// Match an alphabet against a series: variable i must play the role
    /// of letter i (generic ↔ p+k, p ↔ p, k ↔ k), or a single variable
    /// collects all letters.
    pub fn between(alphabet: &Alphabet, series: &RationalSeries) -> Result<Grading> {
        let roles: Vec<Role> = alphabet.kinds().iter().map(|k| letter_role(*k)).collect();
        let vars: Vec<Role> = series.vars.iter().map(|v| v.role).collect();
        if vars == roles {
            return Ok(Grading::Multi);
        }
        let sum = roles.iter().fold(Role { p: 0, k: 0 }, |a, r| a.add(*r));
        if vars == [sum] {
            return Ok(Grading::Total);
        }
        Err(Error::Incompatible(format!(
            "alphabet '{alphabet}' does not match the variables of series '{}'",
            series.name
        )))
    }

    pub fn name(&self) -> &'static str {
        match self {
            Grading::Multi => "multidegree",
            Grading::Total => "total",
        }
    }

    pub fn degree(&self, multideg: &[u32]) -> Vec<u32> {
        match self {
            Grading::Multi => multideg.to_vec(),
            Grading::Total => vec![multideg.iter().sum()],
        }
    }

    pub fn target(&self, degree: &[u32]) -> Target {
        match self {
            Grading::Multi => Target::Exact(degree.to_vec()),
            Grading::Total => Target::Total(degree[0]),
        }
    }

    /// Every degree of total ≤ bound, by total then descending lex order.
    pub fn degrees(&self, letters: usize, bound: u32) -> Vec<Vec<u32>> {
        let nv = if *self == Grading::Total { 1 } else { letters };
        let mut out = Vec::new();
        for d in 0..=bound {
            let mut cur = Vec::new();
            compositions(d, nv, &mut cur, &mut out);
        }
        out
    }
}

fn compositions(rest: u32, parts: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if parts == 1 {
        cur.push(rest);
        out.push(cur.clone());
        cur.pop();
        return;
    }
    for first in (0..=rest).rev() {
        cur.push(first);
        compositions(rest - first, parts - 1, cur, out);
        cur.pop();
    }
}

pub fn fits(small: &[u32], big: &[u32]) -> bool {
    small.iter().zip(big).all(|(a, b)| a <= b)
}

pub fn coeff_u64(c: &num_bigint::BigInt) -> Result<u64> {
    u64::try_from(c).map_err(|_| Error::Data(format!("series coefficient {c} is not a dimension")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_lists() {
        assert_eq!(Grading::Multi.degrees(2, 1), vec![vec![0, 0], vec![1, 0], vec![0, 1]]);
        assert_eq!(Grading::Total.degrees(2, 2), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(Grading::Multi.degrees(3, 3).len(), 20);
    }
}
