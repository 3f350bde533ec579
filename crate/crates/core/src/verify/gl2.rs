use crate::error::{Error, Result};
use serde::Serialize;
use std::collections::BTreeMap;

/// Simple GL₂-modules S_{p,q} found in a weight multiset, as
/// dimension → multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Gl2Decomposition {
    pub degree: u32,
    /// Highest weights (p, q), in the order they were stripped.
    pub highest: Vec<(u32, u32)>,
    pub dims: BTreeMap<u32, u32>,
}

impl Gl2Decomposition {
    pub fn total_dim(&self) -> u32 {
        self.dims.iter().map(|(d, m)| d * m).sum()
    }
}

/// `2^5·4^3`, exponents always written.
impl std::fmt::Display for Gl2Decomposition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.dims.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.dims.iter().map(|(d, m)| format!("{d}^{m}")).collect();
        write!(f, "{}", parts.join("·"))
    }
}

/// Repeatedly strip the weight string of the largest remaining weight.
pub fn decompose_gl2(weights: &[(u32, u32)], d: u32) -> Result<Gl2Decomposition> {
    let mut left: BTreeMap<u32, u32> = BTreeMap::new();
    for &(i, j) in weights {
        if i + j != d {
            return Err(Error::Incompatible(format!("weight ({i},{j}) is not of degree {d}")));
        }
        *left.entry(i).or_default() += 1;
    }
    let mut out = Gl2Decomposition { degree: d, highest: vec![], dims: BTreeMap::new() };
    while let Some((&p, _)) = left.iter().next_back() {
        let q = d - p;
        if p < q {
            return Err(Error::Incompatible(format!("weight ({p},{q}) left over with no higher partner; the weights are not symmetric")));
        }
        for i in q..=p {
            match left.get_mut(&i) {
                Some(c) => {
                    *c -= 1;
                    if *c == 0 {
                        left.remove(&i);
                    }
                }
                None => return Err(Error::Incompatible(format!("weight ({i},{}) missing from the string of ({p},{q})", d - i))),
            }
        }
        out.highest.push((p, q));
        *out.dims.entry(p - q + 1).or_default() += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_cases() {
        assert_eq!(decompose_gl2(&[(1, 0), (0, 1)], 1).unwrap().to_string(), "2^1");
        let w = [(2, 2), (3, 1), (1, 3), (2, 2), (4, 0), (0, 4), (2, 2), (3, 1), (1, 3)];
        assert_eq!(decompose_gl2(&w, 4).unwrap().to_string(), "1^1·3^1·5^1");
        assert!(decompose_gl2(&[(1, 0)], 1).is_err());
        assert!(decompose_gl2(&[(2, 0), (0, 2)], 2).is_err());
        assert!(decompose_gl2(&[(2, 0)], 3).is_err());
    }

    proptest! {
        #[test]
        fn recovers_any_sum_of_simples(d in 0u32..10, picks in prop::collection::vec(0u32..6, 0..6)) {
            let mut weights = Vec::new();
            let mut want: BTreeMap<u32, u32> = BTreeMap::new();
            for k in picks {
                let q = k.min(d / 2);
                let p = d - q;
                for i in q..=p {
                    weights.push((i, d - i));
                }
                *want.entry(p - q + 1).or_default() += 1;
            }
            let got = decompose_gl2(&weights, d).unwrap();
            prop_assert_eq!(got.total_dim() as usize, weights.len());
            prop_assert!(got.highest.iter().all(|&(p, q)| p + q == d && p >= q));
            prop_assert_eq!(got.dims, want);
        }
    }
}
