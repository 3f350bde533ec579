use super::ring::{FieldOps, Ring};
use crate::error::{Error, Result};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Default verification primes: both ≡ 1 mod 4, just below 2³¹.
pub const DEFAULT_PRIMES: [u64; 2] = [2147483629, 2147483549];

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        r
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The field ℤ/p for an odd prime p < 2³².
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p == 2 || p >= 1 << 32 || !is_prime_u64(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn elem(&self, v: i64) -> Fp {
        Fp { v: v.rem_euclid(self.p as i64) as u64, p: self.p }
    }

    pub fn from_u64(&self, v: u64) -> Fp {
        Fp { v: v % self.p, p: self.p }
    }

    pub fn zero(&self) -> Fp {
        Fp { v: 0, p: self.p }
    }

    pub fn one(&self) -> Fp {
        Fp { v: 1, p: self.p }
    }

    pub fn random<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> Fp {
        Fp { v: rng.gen_range(0..self.p), p: self.p }
    }

    /// A square root of −1; exists iff p ≡ 1 mod 4.
    pub fn sqrt_neg_one(&self) -> Result<Fp> {
        if self.p % 4 != 1 {
            return Err(Error::NoSqrtMinusOne(self.p));
        }
        let mut g = 2;
        loop {
            let c = self.from_u64(g);
            if c.pow((self.p - 1) / 2).v == self.p - 1 {
                return Ok(c.pow((self.p - 1) / 4));
            }
            g += 1;
        }
    }
}

/// An element of ℤ/p. Carries its modulus so that it can serve as a
/// matrix scalar without a side context.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    v: u64,
    p: u64,
}

impl Fp {
    pub fn value(self) -> u64 {
        self.v
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    pub fn pow(self, mut e: u64) -> Fp {
        let mut r = Fp { v: 1, p: self.p };
        let mut b = self;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b;
            }
            b = b * b;
            e >>= 1;
        }
        r
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, o: Fp) -> Fp {
        debug_assert_eq!(self.p, o.p);
        let s = self.v + o.v;
        Fp { v: if s >= self.p { s - self.p } else { s }, p: self.p }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, o: Fp) -> Fp {
        debug_assert_eq!(self.p, o.p);
        Fp { v: if self.v >= o.v { self.v - o.v } else { self.v + self.p - o.v }, p: self.p }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, o: Fp) -> Fp {
        debug_assert_eq!(self.p, o.p);
        Fp { v: self.v * o.v % self.p, p: self.p }
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp { v: if self.v == 0 { 0 } else { self.p - self.v }, p: self.p }
    }
}

impl Ring for Fp {
    fn zero_like(&self) -> Self {
        Fp { v: 0, p: self.p }
    }
    fn one_like(&self) -> Self {
        Fp { v: 1, p: self.p }
    }
    fn from_i64_like(&self, v: i64) -> Self {
        Fp { v: v.rem_euclid(self.p as i64) as u64, p: self.p }
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
}

impl FieldOps for Fp {
    fn inv(&self) -> Option<Self> {
        if self.v == 0 {
            None
        } else {
            Some(self.pow(self.p - 2))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_primes_are_valid() {
        for p in DEFAULT_PRIMES {
            assert!(is_prime_u64(p));
            assert_eq!(p % 4, 1);
            assert!(p > 1 << 30);
        }
        assert_ne!(DEFAULT_PRIMES[0], DEFAULT_PRIMES[1]);
    }

    #[test]
    fn miller_rabin_small() {
        let sieve: Vec<u64> = (0..200).filter(|&n| (2..n).all(|d| n % d != 0) && n > 1).collect();
        let mr: Vec<u64> = (0..200).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(sieve, mr);
        assert!(!is_prime_u64(2147483647 * 3));
    }

    #[test]
    fn sqrt_minus_one() {
        for p in DEFAULT_PRIMES {
            let f = PrimeField::new(p).unwrap();
            let i = f.sqrt_neg_one().unwrap();
            assert_eq!(i * i, f.elem(-1));
        }
        let f = PrimeField::new(2147483647).unwrap();
        assert!(f.sqrt_neg_one().is_err());
    }

    #[test]
    fn rejects_non_primes() {
        assert!(PrimeField::new(2147483649).is_err());
        assert!(PrimeField::new(2).is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        let f = PrimeField::new(DEFAULT_PRIMES[0]).unwrap();
        for v in [1i64, 2, 3, 12345, -7] {
            let a = f.elem(v);
            assert_eq!(a * a.inv().unwrap(), f.one());
        }
        assert!(f.zero().inv().is_none());
    }
}
