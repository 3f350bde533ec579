//! Row-by-row Gaussian elimination over 𝔽ₚ (p < 2³¹).
//!
//! Basis rows are kept from their pivot onwards, scaled so the pivot is
//! 1, together with Shoup companions ⌊b·2³²/p⌋ so that f·b mod p costs a
//! couple of multiplications and no division.

struct BasisRow {
    pivot: usize,
    vals: Vec<u32>,
    shoup: Vec<u32>,
}

pub struct Reducer {
    p: u64,
    cols: usize,
    rows: Vec<BasisRow>,
    by_col: Vec<Option<usize>>,
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

impl Reducer {
    pub fn new(p: u64, cols: usize) -> Self {
        assert!(p < 1 << 31, "modulus must be below 2^31");
        Reducer { p, cols, rows: Vec::new(), by_col: vec![None; cols] }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    /// Reduce `row` (entries in [0, p)) against the basis; returns true
    /// when it was independent and got added.
    pub fn insert(&mut self, mut row: Vec<u64>) -> bool {
        let Some(lead) = self.reduce(&mut row) else {
            return false;
        };
        let p = self.p;
        let inv = pow_mod(row[lead], p - 2, p);
        let vals: Vec<u32> = row[lead..].iter().map(|v| (v * inv % p) as u32).collect();
        let shoup = vals.iter().map(|&v| (((v as u64) << 32) / p) as u32).collect();
        self.by_col[lead] = Some(self.rows.len());
        self.rows.push(BasisRow { pivot: lead, vals, shoup });
        true
    }

    /// Whether `row` lies outside the current span; leaves the basis alone.
    pub fn is_independent(&self, mut row: Vec<u64>) -> bool {
        self.reduce(&mut row).is_some()
    }

    /// Eliminates every basis pivot from `row`; returns the first
    /// remaining nonzero column.
    fn reduce(&self, row: &mut [u64]) -> Option<usize> {
        debug_assert_eq!(row.len(), self.cols);
        let p = self.p;
        let mut lead = None;
        for c in 0..self.cols {
            let v = row[c];
            if v == 0 {
                continue;
            }
            let Some(bi) = self.by_col[c] else {
                if lead.is_none() {
                    lead = Some(c);
                }
                continue;
            };
            let b = &self.rows[bi];
            let f = p - v;
            for (k, (bv, bs)) in b.vals.iter().zip(&b.shoup).enumerate() {
                let q = (f * *bs as u64) >> 32;
                let prod = (f * *bv as u64).wrapping_sub(q * p);
                let mut x = row[c + k] + prod;
                if x >= p {
                    x -= p;
                }
                if x >= p {
                    x -= p;
                }
                row[c + k] = x;
            }
        }
        lead
    }

    pub fn pivots(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.rows.iter().map(|r| r.pivot).collect();
        v.sort_unstable();
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra_core::{rank, PrimeField};
    use proptest::prelude::*;

    const P: u64 = 2147483629;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn matches_dense_rank(rows in prop::collection::vec(prop::collection::vec(0u64..4, 6), 0..9), big in any::<bool>()) {
            // small entries make dependencies likely; optionally spread them
            let rows: Vec<Vec<u64>> = rows.into_iter().map(|r| r.into_iter().map(|v| if big { (v * 1_000_003_579) % P } else { v }).collect()).collect();
            let mut red = Reducer::new(P, 6);
            let mut prev = 0;
            for r in &rows {
                red.insert(r.clone());
                prop_assert!(red.rank() >= prev);
                prev = red.rank();
            }
            let f = PrimeField::new(P).unwrap();
            let dense: Vec<Vec<_>> = rows.iter().map(|r| r.iter().map(|&v| f.from_u64(v)).collect()).collect();
            prop_assert_eq!(red.rank(), rank(dense));
        }
    }

    #[test]
    fn dependent_rows_are_rejected() {
        let mut r = Reducer::new(P, 3);
        assert!(r.insert(vec![1, 2, 3]));
        assert!(!r.is_independent(vec![2, 4, 6]));
        assert!(r.is_independent(vec![0, 1, 0]));
        assert_eq!(r.rank(), 1);
        assert!(!r.insert(vec![2, 4, 6]));
        assert!(r.insert(vec![0, 0, 5]));
        assert!(!r.insert(vec![3, 6, 1]));
        assert_eq!(r.pivots(), vec![0, 2]);
        assert!(!r.insert(vec![0, 0, 0]));
        assert!(!r.is_full());
    }
}
