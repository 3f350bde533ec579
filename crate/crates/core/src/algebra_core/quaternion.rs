use super::mat::Mat;
use super::ring::Ring;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use std::ops::{Add, Mul, Neg, Sub};

/// a + bi + cj + dk over a commutative base ring.
#[derive(Clone, Debug, PartialEq)]
pub struct Quaternion<R> {
    pub a: R,
    pub b: R,
    pub c: R,
    pub d: R,
}

/// Matrices over the quaternions; the base type's product keeps factor
/// order so Mat works unchanged.
pub type QuatMat<R> = Mat<Quaternion<R>>;

impl<R: Ring> Quaternion<R> {
    pub fn new(a: R, b: R, c: R, d: R) -> Self {
        Quaternion { a, b, c, d }
    }

    pub fn real(a: R) -> Self {
        let z = a.zero_like();
        Quaternion { b: z.clone(), c: z.clone(), d: z, a }
    }

    pub fn conj(&self) -> Self {
        Quaternion { a: self.a.clone(), b: -self.b.clone(), c: -self.c.clone(), d: -self.d.clone() }
    }

    /// tr q = q + q̄ = 2 Re q.
    pub fn trace(&self) -> R {
        self.a.clone() + self.a.clone()
    }

    pub fn map<S>(&self, f: impl Fn(&R) -> S) -> Quaternion<S> {
        Quaternion { a: f(&self.a), b: f(&self.b), c: f(&self.c), d: f(&self.d) }
    }
}

impl<R: Ring> Add for Quaternion<R> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Quaternion { a: self.a + o.a, b: self.b + o.b, c: self.c + o.c, d: self.d + o.d }
    }
}

impl<R: Ring> Sub for Quaternion<R> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Quaternion { a: self.a - o.a, b: self.b - o.b, c: self.c - o.c, d: self.d - o.d }
    }
}

impl<R: Ring> Neg for Quaternion<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Quaternion { a: -self.a, b: -self.b, c: -self.c, d: -self.d }
    }
}

impl<R: Ring> Mul for Quaternion<R> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let (a1, b1, c1, d1) = (self.a, self.b, self.c, self.d);
        let (a2, b2, c2, d2) = (o.a, o.b, o.c, o.d);
        Quaternion {
            a: a1.clone() * a2.clone() - b1.clone() * b2.clone() - c1.clone() * c2.clone() - d1.clone() * d2.clone(),
            b: a1.clone() * b2.clone() + b1.clone() * a2.clone() + c1.clone() * d2.clone() - d1.clone() * c2.clone(),
            c: a1.clone() * c2.clone() - b1.clone() * d2.clone() + c1.clone() * a2.clone() + d1.clone() * b2.clone(),
            d: a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        }
    }
}

impl<R: Ring> Ring for Quaternion<R> {
    fn zero_like(&self) -> Self {
        Quaternion::real(self.a.zero_like())
    }
    fn one_like(&self) -> Self {
        Quaternion::real(self.a.one_like())
    }
    fn from_i64_like(&self, v: i64) -> Self {
        Quaternion::real(self.a.from_i64_like(v))
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }
}

impl<R: Ring> QuatMat<R> {
    /// Conjugate transpose.
    pub fn quat_adjoint(&self) -> Self {
        Mat::from_fn(self.dim(), |i, j| self.get(j, i).conj())
    }
}

/// tr z = 2 Σ Re zᵢᵢ.
pub fn quat_trace<R: Ring>(z: &QuatMat<R>) -> R {
    let mut t = z.get(0, 0).a.zero_like();
    for i in 0..z.dim() {
        t = t + z.get(i, i).a.clone();
    }
    t.clone() + t
}

/// φ(z) = [[z₀, −z̄₁], [z₁, z̄₀]] for z = z₀ + j z₁, where the complex
/// unit is realized by `iota` (a square root of −1 in the base ring).
/// For q = a + bi + cj + dk this gives z₀ = a + bι and z₁ = c − dι.
pub fn quat_embed<R: Ring>(z: &QuatMat<R>, iota: &R) -> Mat<R> {
    let n = z.dim();
    Mat::from_fn(2 * n, |r, s| {
        let q = z.get(r % n, s % n);
        let bi = q.b.clone() * iota.clone();
        let di = q.d.clone() * iota.clone();
        match (r / n, s / n) {
            (0, 0) => q.a.clone() + bi,
            (0, 1) => -(q.c.clone() + di),
            (1, 0) => q.c.clone() - di,
            _ => q.a.clone() - bi,
        }
    })
}

/// Parses literals such as `-1+i`, `i+j`, `2k`, `3/2-j`, `0`.
pub fn parse_quaternion(text: &str) -> Result<Quaternion<BigRational>> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse { line: 0, msg: "empty quaternion literal".into() });
    }
    let zero = BigRational::from_integer(BigInt::from(0));
    let mut parts = [zero.clone(), zero.clone(), zero.clone(), zero];
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let mut sign = 1i64;
        if bytes[i] == b'+' || bytes[i] == b'-' {
            if bytes[i] == b'-' {
                sign = -1;
            }
            i += 1;
        }
        let start = i;
        while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'/') {
            i += 1;
        }
        let coeff = if start == i {
            BigRational::from_integer(BigInt::from(1))
        } else {
            parse_rational(&s[start..i]).ok_or_else(|| bad(text))?
        };
        let slot = match bytes.get(i) {
            Some(b'i') => 1,
            Some(b'j') => 2,
            Some(b'k') => 3,
            Some(b'+') | Some(b'-') | None => 0,
            _ => return Err(bad(text)),
        };
        if slot != 0 {
            i += 1;
        } else if start == i {
            return Err(bad(text));
        }
        parts[slot] += coeff * BigRational::from_integer(BigInt::from(sign));
    }
    let [a, b, c, d] = parts;
    Ok(Quaternion { a, b, c, d })
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.parse().ok()?;
            if d == BigInt::from(0) {
                return None;
            }
            Some(BigRational::new(n.parse().ok()?, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

fn bad(text: &str) -> Error {
    Error::Parse { line: 0, msg: format!("bad quaternion literal '{text}'") }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra_core::{Fp, PrimeField, SymplecticContext, DEFAULT_PRIMES};
    use proptest::prelude::*;

    fn field() -> PrimeField {
        PrimeField::new(DEFAULT_PRIMES[1]).unwrap()
    }

    fn qm(f: &PrimeField, n: usize, v: &[i64]) -> QuatMat<Fp> {
        Mat::from_fn(n, |i, j| {
            let b = 4 * (i * n + j);
            Quaternion::new(f.elem(v[b % v.len()]), f.elem(v[(b + 1) % v.len()]), f.elem(v[(b + 2) % v.len()]), f.elem(v[(b + 3) % v.len()]))
        })
    }

    #[test]
    fn units_multiply() {
        let f = field();
        let (o, z) = (f.one(), f.zero());
        let i = Quaternion::new(z, o, z, z);
        let j = Quaternion::new(z, z, o, z);
        let k = Quaternion::new(z, z, z, o);
        assert_eq!(i.clone() * j.clone(), k.clone());
        assert_eq!(j.clone() * k.clone(), i.clone());
        assert_eq!(k.clone() * i.clone(), j.clone());
        assert_eq!(i.clone() * i, -Quaternion::real(o));
        assert_eq!(j.clone().trace(), z);
    }

    #[test]
    fn parse_literals() {
        let q = parse_quaternion("-1+i").unwrap();
        assert_eq!(q.map(|v| v.to_integer()), Quaternion { a: (-1).into(), b: 1.into(), c: 0.into(), d: 0.into() });
        let q = parse_quaternion("i+j").unwrap();
        assert_eq!(q.map(|v| v.to_integer()), Quaternion { a: 0.into(), b: 1.into(), c: 1.into(), d: 0.into() });
        let q = parse_quaternion("3/2-2k").unwrap();
        assert_eq!(q.d, BigRational::from_integer((-2).into()));
        assert_eq!(q.a, BigRational::new(3.into(), 2.into()));
        assert!(parse_quaternion("x").is_err());
        assert!(parse_quaternion("").is_err());
        assert!(parse_quaternion("1+").is_err());
    }

    #[test]
    fn embed_examples() {
        let f = field();
        let iota = f.sqrt_neg_one().unwrap();
        let id: QuatMat<Fp> = Mat::identity(3, &Quaternion::real(f.zero()));
        assert_eq!(quat_embed(&id, &iota), Mat::identity(6, &f.zero()));
        assert_eq!(quat_trace(&id), f.elem(6));
        let mut z: QuatMat<Fp> = Mat::zeros(3, &Quaternion::real(f.zero()));
        z.set(0, 0, Quaternion::new(f.zero(), f.zero(), f.one(), f.zero()));
        let e = quat_embed(&z, &iota);
        // z = j: z₀ = 0, z₁ = E₁₁, so φ has 1 at (3,0) and −1 at (0,3).
        for r in 0..6 {
            for s in 0..6 {
                let want = match (r, s) {
                    (3, 0) => f.one(),
                    (0, 3) => -f.one(),
                    _ => f.zero(),
                };
                assert_eq!(*e.get(r, s), want, "entry {r},{s}");
            }
        }
    }

    #[test]
    fn witness_trace_is_zero() {
        let rows = [["-1+i", "j", "1+j"], ["j", "1+i", "i+j"], ["-1+j", "i+j", "i"]];
        let z = Mat::from_fn(3, |i, j| parse_quaternion(rows[i][j]).unwrap());
        assert_eq!(quat_trace(&z), BigRational::from_integer(0.into()));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]
        #[test]
        fn embedding_is_a_star_homomorphism(n in 1usize..=3, a in prop::collection::vec(any::<i64>(), 36), b in prop::collection::vec(any::<i64>(), 36)) {
            let f = field();
            let iota = f.sqrt_neg_one().unwrap();
            let ctx = SymplecticContext::new(n).unwrap();
            let z = qm(&f, n, &a);
            let w = qm(&f, n, &b);
            let pz = quat_embed(&z, &iota);
            let pw = quat_embed(&w, &iota);
            prop_assert_eq!(quat_embed(&(&z * &w), &iota), &pz * &pw);
            prop_assert_eq!(quat_embed(&z.quat_adjoint(), &iota), ctx.adjoint(&pz).unwrap());
            prop_assert_eq!(quat_trace(&z), pz.trace());
            prop_assert_eq!(quat_trace(&(&z * &w)), quat_trace(&(&w * &z)));
            prop_assert_eq!(z.quat_adjoint().quat_adjoint(), z);
        }
    }
}
