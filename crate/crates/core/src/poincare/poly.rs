use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector over the variables of a series.
pub type Monomial = Vec<u32>;

/// Sparse multivariate polynomial with big-integer coefficients; zero
/// coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

pub fn total(m: &[u32]) -> u32 {
    m.iter().sum()
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], BigInt::one())
    }

    pub fn monomial(exps: Monomial, coeff: BigInt) -> Self {
        let mut p = SparsePoly::zero(exps.len());
        p.add_term(exps, coeff);
        p
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, BigInt::one())
    }

    /// 1 − μ.
    pub fn one_minus(mu: &[u32]) -> Self {
        let mut p = Self::one(mu.len());
        p.add_term(mu.to_vec(), -BigInt::one());
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = SparsePoly::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &[u32]) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&vec![0; self.nvars])
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        assert_eq!(m.len(), self.nvars, "monomial arity");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| total(m)).max().unwrap_or(0)
    }

    /// Componentwise maximum exponent.
    pub fn max_exponents(&self) -> Monomial {
        let mut mx = vec![0; self.nvars];
        for m in self.terms.keys() {
            for (a, b) in mx.iter_mut().zip(m) {
                *a = (*a).max(*b);
            }
        }
        mx
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.nvars, o.nvars);
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        SparsePoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::from_terms(self.nvars, self.terms.iter().map(|(m, c)| (m.clone(), c * k)))
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.nvars, o.nvars);
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let m: Monomial = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                *acc.entry(m).or_default() += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        SparsePoly { nvars: self.nvars, terms: acc }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one(self.nvars);
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    pub fn mul_monomial(&self, mu: &[u32]) -> Self {
        SparsePoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.iter().zip(mu).map(|(a, b)| a + b).collect(), c.clone())).collect(),
        }
    }

    /// ∏ (1 − μ) expanded.
    pub fn product_one_minus(nvars: usize, factors: &[Monomial]) -> Self {
        factors.iter().fold(Self::one(nvars), |acc, mu| acc.mul(&Self::one_minus(mu)))
    }

    /// xᵃ·P(1/x); requires a ≥ every exponent.
    pub fn reflect(&self, a: &[u32]) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let r: Option<Monomial> = m.iter().zip(a).map(|(e, ai)| ai.checked_sub(*e)).collect();
            terms.insert(r?, c.clone());
        }
        Some(SparsePoly { nvars: self.nvars, terms })
    }

    /// Substitute variable i ↦ variable map[i] of an `nvars`-variable ring.
    pub fn substitute(&self, map: &[usize], nvars: usize) -> Self {
        Self::from_terms(
            nvars,
            self.terms.iter().map(|(m, c)| {
                let mut e = vec![0; nvars];
                for (i, x) in m.iter().enumerate() {
                    e[map[i]] += x;
                }
                (e, c.clone())
            }),
        )
    }

    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        SparsePoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.clone();
                    e.swap(i, j);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Exact quotient by (1 − μ), if it exists.
    pub fn div_one_minus(&self, mu: &[u32]) -> Option<Self> {
        let dmu = total(mu);
        if dmu == 0 {
            return None;
        }
        let top = self.total_degree();
        let mut rem = self.clone();
        let mut q = SparsePoly::zero(self.nvars);
        // Peel off the graded-least term each time: r − t(1 − μ).
        while let Some((m, c)) = rem.terms.iter().min_by_key(|(m, _)| (total(m), (*m).clone())).map(|(m, c)| (m.clone(), c.clone())) {
            if total(&m) + dmu > top {
                return None;
            }
            let shifted: Monomial = m.iter().zip(mu).map(|(a, b)| a + b).collect();
            rem.add_term(m.clone(), -c.clone());
            rem.add_term(shifted, c.clone());
            q.add_term(m, c);
        }
        Some(q)
    }

    pub fn is_one_poly(&self) -> bool {
        *self == Self::one(self.nvars)
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_default()
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}*{m:?}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(nv: usize, t: &[(&[u32], i64)]) -> SparsePoly {
        SparsePoly::from_terms(nv, t.iter().map(|(m, c)| (m.to_vec(), BigInt::from(*c))))
    }

    #[test]
    fn arithmetic() {
        let a = p(2, &[(&[0, 0], 1), (&[1, 0], 1)]);
        let b = p(2, &[(&[0, 0], 1), (&[1, 0], -1)]);
        assert_eq!(a.mul(&b), p(2, &[(&[0, 0], 1), (&[2, 0], -1)]));
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.pow(2).coeff(&[1, 0]), BigInt::from(2));
    }

    #[test]
    fn exact_division() {
        let n = p(2, &[(&[0, 0], 1), (&[1, 1], -1)]).mul(&p(2, &[(&[0, 0], 1), (&[0, 3], 2)]));
        let q = n.div_one_minus(&[1, 1]).unwrap();
        assert_eq!(q, p(2, &[(&[0, 0], 1), (&[0, 3], 2)]));
        assert!(q.div_one_minus(&[1, 0]).is_none());
        assert!(SparsePoly::one(2).div_one_minus(&[0, 1]).is_none());
    }

    #[test]
    fn reflect_and_substitute() {
        let a = p(2, &[(&[0, 0], 1), (&[1, 2], 3)]);
        assert_eq!(a.reflect(&[2, 2]).unwrap(), p(2, &[(&[2, 2], 1), (&[1, 0], 3)]));
        assert!(a.reflect(&[0, 2]).is_none());
        assert_eq!(a.substitute(&[0, 0], 1), p(1, &[(&[0], 1), (&[3], 3)]));
        assert_eq!(a.swap_vars(0, 1).coeff(&[2, 1]), BigInt::from(3));
    }

    fn arb_poly() -> impl proptest::strategy::Strategy<Value = SparsePoly> {
        use proptest::prelude::*;
        prop::collection::vec(((0u32..4, 0u32..4), -3i64..4), 0..8)
            .prop_map(|t| SparsePoly::from_terms(2, t.into_iter().map(|((a, b), c)| (vec![a, b], BigInt::from(c)))))
    }

    proptest::proptest! {
        #[test]
        fn division_undoes_multiplication(p in arb_poly(), a in 0u32..3, b in 0u32..3) {
            proptest::prop_assume!(a + b > 0);
            let mu = [a, b];
            let prod = p.mul(&SparsePoly::one_minus(&mu));
            proptest::prop_assert_eq!(prod.div_one_minus(&mu), Some(p));
        }

        #[test]
        fn reflection_is_an_involution(p in arb_poly()) {
            let a = p.max_exponents();
            proptest::prop_assert_eq!(p.reflect(&a).unwrap().reflect(&a).unwrap(), p);
        }
    }
}
