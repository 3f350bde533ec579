use super::monomials::Target;
use super::rank::{Evaluator, RankConfig, RankReport};
use crate::error::{Error, Result};
use crate::words::{enumerate_classes, Alphabet};

/// Alphabet for (k₁ copies of 𝔭) ⊕ (k₂ copies of 𝔨): k generic matrices
/// when k₁ = k₂ = k, otherwise k₁ matrices in 𝔭 then k₂ in 𝔨.
pub fn dims_alphabet(k1: usize, k2: usize) -> Result<Alphabet> {
    if k1 + k2 == 0 {
        return Err(Error::Config("need at least one matrix".into()));
    }
    Ok(if k1 == k2 { Alphabet::generic(k1) } else { Alphabet::split(k1, k2) })
}

/// Dimension of a homogeneous component, spanned by products of the
/// traces of all words of length at most its total degree.
pub fn empirical_dimension(n: usize, alphabet: &Alphabet, target: &Target, cfg: &RankConfig) -> Result<(usize, RankReport)> {
    let d = target.total() as usize;
    let classes = enumerate_classes(alphabet, d, None);
    let gens = classes.into_iter().map(|c| c.canon).collect();
    let ev = Evaluator::new(n, alphabet, cfg.slice, gens)?;
    let (cols, rep) = ev.graded_dimension(target, cfg)?;
    Ok((cols.len(), rep))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_generic_matrix_n2() {
        let a = dims_alphabet(1, 1).unwrap();
        let cfg = RankConfig::default();
        // 1/((1−t)(1−t²)²(1−t³)(1−t⁴)²)
        let want = [1, 1, 3, 4, 9];
        for (d, w) in want.iter().enumerate() {
            let (_, rep) = empirical_dimension(2, &a, &Target::Total(d as u32), &cfg).unwrap();
            assert_eq!(rep.rank, *w, "degree {d}");
        }
        assert_eq!(dims_alphabet(2, 1).unwrap().to_string(), "x1:p x2:p y:k");
    }
}
