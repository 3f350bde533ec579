use super::poly::{total, Monomial, SparsePoly};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::collections::BTreeMap;

/// How a series variable sits in 𝔭 ⊕ 𝔨: a specialized variable can stand
/// for several original ones (x1 = y1 = t gives role p+k).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Role {
    pub p: u32,
    pub k: u32,
}

impl Role {
    pub fn add(self, o: Role) -> Role {
        Role { p: self.p + o.p, k: self.k + o.k }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Variable {
    pub name: String,
    pub role: Role,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Meta {
    pub n: u32,
    pub k1: u32,
    pub k2: u32,
}

/// N / ∏(1 − μ).
#[derive(Clone, Debug, PartialEq)]
pub struct RationalSeries {
    pub name: String,
    pub meta: Meta,
    pub vars: Vec<Variable>,
    pub numerator: SparsePoly,
    pub denominator: Vec<Monomial>,
}

/// Coefficients of every monomial of total degree ≤ bound (zeros included).
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesTable {
    pub vars: Vec<String>,
    pub bound: u32,
    pub coeffs: BTreeMap<Monomial, BigInt>,
}

impl SeriesTable {
    pub fn get(&self, m: &[u32]) -> BigInt {
        self.coeffs.get(m).cloned().unwrap_or_default()
    }

    /// Rows sorted by total degree, then exponent vector.
    pub fn rows(&self) -> Vec<(&Monomial, &BigInt)> {
        let mut r: Vec<_> = self.coeffs.iter().collect();
        r.sort_by_key(|(m, _)| (total(m), (*m).clone()));
        r
    }

    /// Sum coefficients along the fibres of `map` (old var → new var).
    pub fn collapse(&self, map: &[usize], nvars: usize, vars: Vec<String>) -> SeriesTable {
        let mut coeffs = BTreeMap::new();
        for (m, c) in &self.coeffs {
            let mut e = vec![0; nvars];
            for (i, x) in m.iter().enumerate() {
                e[map[i]] += x;
            }
            *coeffs.entry(e).or_insert_with(BigInt::zero) += c;
        }
        SeriesTable { vars, bound: self.bound, coeffs }
    }
}

impl RationalSeries {
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> Vec<String> {
        self.vars.iter().map(|v| v.name.clone()).collect()
    }

    pub fn denominator_poly(&self) -> SparsePoly {
        SparsePoly::product_one_minus(self.nvars(), &self.denominator)
    }

    /// Exact coefficients up to total degree `bound`.
    ///
    /// Works on a dense box of exponents in lexicographic index order, so
    /// multiplying by 1/(1 − μ) is the in-place recurrence c[m] += c[m − μ].
    pub fn taylor_expand(&self, bound: u32) -> SeriesTable {
        let nv = self.nvars();
        let side = bound as usize + 1;
        let size = side.pow(nv as u32);
        let index = |m: &[u32]| m.iter().fold(0usize, |a, &e| a * side + e as usize);
        let unindex = |mut i: usize| {
            let mut m = vec![0u32; nv];
            for k in (0..nv).rev() {
                m[k] = (i % side) as u32;
                i /= side;
            }
            m
        };
        let mut c = vec![BigInt::zero(); size];
        for (m, v) in self.numerator.terms() {
            if total(m) <= bound {
                c[index(m)] = v.clone();
            }
        }
        let live: Vec<usize> = (0..size).filter(|&i| total(&unindex(i)) <= bound).collect();
        for mu in &self.denominator {
            if total(mu) > bound {
                continue;
            }
            let off = index(mu);
            for &i in &live {
                let m = unindex(i);
                if m.iter().zip(mu).all(|(a, b)| a >= b) {
                    let prev = c[i - off].clone();
                    if !prev.is_zero() {
                        c[i] += prev;
                    }
                }
            }
        }
        let coeffs = live.into_iter().map(|i| (unindex(i), std::mem::take(&mut c[i]))).collect();
        SeriesTable { vars: self.var_names(), bound, coeffs }
    }

    /// Merge variables: `targets[i]` is the new name of variable i. New
    /// variables appear in order of first use and their roles add up.
    /// Common (1 − μ) factors are cancelled where the division is exact.
    pub fn specialize(&self, targets: &[&str]) -> Result<RationalSeries> {
        if targets.len() != self.nvars() {
            return Err(Error::Incompatible(format!(
                "substitution names {} variables, series has {}",
                targets.len(),
                self.nvars()
            )));
        }
        let mut vars: Vec<Variable> = Vec::new();
        let mut map = Vec::new();
        for (v, t) in self.vars.iter().zip(targets) {
            match vars.iter().position(|w| w.name == *t) {
                Some(j) => {
                    vars[j].role = vars[j].role.add(v.role);
                    map.push(j);
                }
                None => {
                    map.push(vars.len());
                    vars.push(Variable { name: t.to_string(), role: v.role });
                }
            }
        }
        let nv = vars.len();
        let mut num = self.numerator.substitute(&map, nv);
        let den: Vec<Monomial> = self
            .denominator
            .iter()
            .map(|mu| {
                let mut e = vec![0; nv];
                for (i, x) in mu.iter().enumerate() {
                    e[map[i]] += x;
                }
                e
            })
            .collect();
        // Try the largest factors first; survivors keep their order.
        let mut order: Vec<usize> = (0..den.len()).collect();
        order.sort_by_key(|&i| std::cmp::Reverse((total(&den[i]), den[i].clone())));
        let mut gone = vec![false; den.len()];
        for i in order {
            if let Some(q) = num.div_one_minus(&den[i]) {
                num = q;
                gone[i] = true;
            }
        }
        let kept = den.into_iter().zip(gone).filter(|(_, g)| !g).map(|(m, _)| m).collect();
        Ok(RationalSeries { name: self.name.clone(), meta: self.meta, vars, numerator: num, denominator: kept })
    }

    /// Equality as rational functions, by cross-multiplication.
    pub fn same_function(&self, o: &RationalSeries) -> bool {
        self.nvars() == o.nvars() && self.numerator.mul(&o.denominator_poly()) == o.numerator.mul(&self.denominator_poly())
    }

    /// The exponent m of the functional equation and its sign (−1)^d.
    pub fn expected_symmetry(&self) -> (i8, Monomial) {
        let n = self.meta.n;
        let (dp, dk) = (n * (2 * n - 1), n * (2 * n + 1));
        let d = n * (self.meta.k1 + self.meta.k2 + 1);
        let m = self.vars.iter().map(|v| v.role.p * dp + v.role.k * dk).collect();
        (if d % 2 == 0 { 1 } else { -1 }, m)
    }

    /// Check P(1/x) = ε x^m P(x) as a polynomial identity after clearing
    /// denominators. Reports the symmetry the series actually has, if any.
    pub fn check_functional_equation(&self) -> FeOutcome {
        let (sign, shift) = self.expected_symmetry();
        let nv = self.nvars();
        let a = self.numerator.max_exponents();
        let e: Monomial = (0..nv).map(|i| self.denominator.iter().map(|mu| mu[i]).sum()).collect();
        let f_odd = self.denominator.len() % 2 == 1;
        let rev = self.numerator.reflect(&a).expect("max exponents bound every term");
        // (−1)^f x^E rev_A(N) against ε x^{m+A} N
        let mut lhs = rev.mul_monomial(&e);
        if f_odd {
            lhs = lhs.neg();
        }
        let ma: Monomial = shift.iter().zip(&a).map(|(x, y)| x + y).collect();
        let mut rhs = self.numerator.mul_monomial(&ma);
        if sign < 0 {
            rhs = rhs.neg();
        }
        let diff = lhs.sub(&rhs);
        let witness = diff.terms().min_by_key(|(m, _)| (total(m), (*m).clone())).map(|(m, _)| Witness {
            monomial: m.clone(),
            lhs: lhs.coeff(m),
            rhs: rhs.coeff(m),
        });
        FeOutcome {
            holds: witness.is_none(),
            expected_sign: sign,
            expected_shift: shift,
            actual: self.actual_symmetry(&rev, &a, &e, f_odd),
            witness,
        }
    }

    fn actual_symmetry(&self, rev: &SparsePoly, a: &[u32], e: &[u32], f_odd: bool) -> Option<(i8, Vec<i64>)> {
        // N has constant term 1, so rev_A(N) = σ x^c N forces c from the
        // lex-largest term of N.
        let (top, ctop) = self.numerator.terms().last()?;
        if !ctop.abs().is_one() {
            return None;
        }
        let c: Monomial = a.iter().zip(top).map(|(x, y)| x - y).collect();
        let mut cand = self.numerator.mul_monomial(&c);
        if ctop.is_negative() {
            cand = cand.neg();
        }
        if cand != *rev {
            return None;
        }
        let mut s: i8 = if ctop.is_negative() { -1 } else { 1 };
        if f_odd {
            s = -s;
        }
        let shift = (0..a.len()).map(|i| e[i] as i64 + c[i] as i64 - a[i] as i64).collect();
        Some((s, shift))
    }

    /// σ with x^A N(1/x) = σ N(x), A the exponentwise maximum of N.
    pub fn numerator_palindrome(&self) -> Option<i8> {
        let rev = self.numerator.reflect(&self.numerator.max_exponents())?;
        if rev == self.numerator {
            Some(1)
        } else if rev == self.numerator.neg() {
            Some(-1)
        } else {
            None
        }
    }

    /// Multiply numerator and denominator by `extra`, presenting the new
    /// denominator as `new_den`; the identity N·extra·D = N·D' is checked.
    pub fn mul_adjust(&self, extra: &SparsePoly, new_den: Vec<Monomial>) -> Result<RationalSeries> {
        if extra.nvars() != self.nvars() || !extra.constant_term().is_one() {
            return Err(Error::Data("multiplier must have constant term 1 in the series variables".into()));
        }
        if new_den.iter().any(|m| m.len() != self.nvars() || total(m) == 0) {
            return Err(Error::Data("new denominator factors must be nonconstant monomials".into()));
        }
        let num = self.numerator.mul(extra);
        let lhs = num.mul(&self.denominator_poly());
        let rhs = self.numerator.mul(&SparsePoly::product_one_minus(self.nvars(), &new_den));
        if lhs != rhs {
            return Err(Error::Data("adjusted series differs from the original (cross-multiplication)".into()));
        }
        Ok(RationalSeries { numerator: num, denominator: new_den, ..self.clone() })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub monomial: Monomial,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FeOutcome {
    pub holds: bool,
    pub expected_sign: i8,
    pub expected_shift: Monomial,
    /// (sign, shift) with P(1/x) = sign·x^shift·P(x), when such exist.
    pub actual: Option<(i8, Vec<i64>)>,
    pub witness: Option<Witness>,
}

impl FeOutcome {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "holds": self.holds,
            "expected_sign": self.expected_sign,
            "expected_shift": self.expected_shift,
            "actual": self.actual.as_ref().map(|(s, m)| serde_json::json!({"sign": s, "shift": m})),
            "witness": self.witness.as_ref().map(|w| serde_json::json!({
                "monomial": w.monomial,
                "lhs": w.lhs.to_string(),
                "rhs": w.rhs.to_string(),
            })),
        })
    }
}

/// Add x^{a−m} for every term x^m; both sources must agree where they meet.
pub fn palindromic_complete(partial: &SparsePoly, a: &[u32]) -> Result<SparsePoly> {
    let mut out = partial.clone();
    for (m, c) in partial.terms() {
        let r: Option<Monomial> = a.iter().zip(m).map(|(x, y)| x.checked_sub(*y)).collect();
        let r = r.ok_or_else(|| Error::Data(format!("term {m:?} lies beyond the palindrome corner {a:?}")))?;
        let have = partial.coeff(&r);
        if have.is_zero() {
            out.add_term(r, c.clone());
        } else if have != *c {
            return Err(Error::Data(format!("palindrome conflict: {m:?} has {c}, {r:?} has {have}")));
        }
    }
    Ok(out)
}
