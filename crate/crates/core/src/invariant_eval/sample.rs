use crate::algebra_core::{quat_embed, Fp, Mat, PrimeField, QuatMat, Quaternion, SymplecticContext};
use crate::error::{Error, Result};
use crate::words::{Alphabet, LetterKind};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

/// Where sample points are drawn from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Slice {
    Full,
    /// x₁ upper triangular in Mₙ(ℍ); with `refined` (n = 2 only) also
    /// y₂₁ real, y₁₂ ∈ ⟨1, i⟩ and x₁₁ ∈ ⟨1, i, j⟩. The refined slice is
    /// a heuristic: cross-check it against `Full`.
    UpperTriangularFirst { refined: bool },
    /// z = x + y with x real diagonal, y skew-hermitian with diagonal in
    /// ⟨i⟩ and entries above the diagonal in ⟨1, i, j⟩.
    PiSlice,
    /// `PiSlice` with tr x = 0.
    TracelessPi,
}

impl Slice {
    pub fn name(&self) -> &'static str {
        match self {
            Slice::Full => "full",
            Slice::UpperTriangularFirst { refined: false } => "upper-triangular",
            Slice::UpperTriangularFirst { refined: true } => "upper-triangular-refined",
            Slice::PiSlice => "pi",
            Slice::TracelessPi => "traceless-pi",
        }
    }

    /// Number of free base-field parameters of a point of the slice.
    pub fn parameters(&self, n: usize, alphabet: &Alphabet) -> usize {
        let quat = 4 * n * n;
        match self {
            Slice::Full => (0..alphabet.len())
                .map(|i| match alphabet.kind(i) {
                    LetterKind::Generic => quat,
                    LetterKind::P => n * (2 * n - 1),
                    LetterKind::K => n * (2 * n + 1),
                })
                .sum(),
            Slice::UpperTriangularFirst { refined } => {
                let tri = 4 * n * (n + 1) / 2;
                let base = tri + quat * (alphabet.len() - 1);
                if *refined { base - 1 - 3 - 2 } else { base }
            }
            Slice::PiSlice => n + n + 3 * n * (n - 1) / 2,
            Slice::TracelessPi => n - 1 + n + 3 * n * (n - 1) / 2,
        }
    }
}

impl fmt::Display for Slice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Slice {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "full" => Slice::Full,
            "upper-triangular" => Slice::UpperTriangularFirst { refined: false },
            "upper-triangular-refined" => Slice::UpperTriangularFirst { refined: true },
            "pi" => Slice::PiSlice,
            "traceless-pi" => Slice::TracelessPi,
            _ => {
                return Err(Error::Config(format!(
                    "unknown slice '{s}' (full, upper-triangular, upper-triangular-refined, pi, traceless-pi)"
                )))
            }
        })
    }
}

/// One matrix per alphabet letter.
#[derive(Clone, Debug, PartialEq)]
pub struct SamplePoint {
    pub mats: Vec<Mat<Fp>>,
}

/// A validated (n, alphabet, slice) combination.
#[derive(Clone, Debug)]
pub struct SampleSpace {
    ctx: SymplecticContext,
    alphabet: Alphabet,
    slice: Slice,
}

/// The generator behind sample `index` of a run with `seed`.
pub fn point_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

impl SampleSpace {
    pub fn new(n: usize, alphabet: &Alphabet, slice: Slice) -> Result<Self> {
        let ctx = SymplecticContext::new(n)?;
        let kinds = alphabet.kinds();
        match slice {
            Slice::Full => {}
            Slice::UpperTriangularFirst { refined } => {
                if kinds.iter().any(|k| *k != LetterKind::Generic) {
                    return Err(Error::Incompatible(format!("slice {slice} needs generic letters, alphabet is {alphabet}")));
                }
                if refined && (n != 2 || alphabet.len() < 2) {
                    return Err(Error::Incompatible(format!("slice {slice} is defined for n = 2 and two matrices")));
                }
            }
            Slice::PiSlice | Slice::TracelessPi => {
                let ok = kinds == [LetterKind::Generic] || kinds == [LetterKind::P, LetterKind::K];
                if !ok {
                    return Err(Error::Incompatible(format!(
                        "slice {slice} needs one generic letter or a p letter followed by a k letter, alphabet is {alphabet}"
                    )));
                }
            }
        }
        Ok(SampleSpace { ctx, alphabet: alphabet.clone(), slice })
    }

    pub fn ctx(&self) -> &SymplecticContext {
        &self.ctx
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn slice(&self) -> Slice {
        self.slice
    }

    /// Deterministic in (field, seed, index).
    pub fn point(&self, field: PrimeField, seed: u64, index: u64) -> Result<SamplePoint> {
        let mut rng = point_rng(seed, index);
        let iota = field.sqrt_neg_one()?;
        let n = self.ctx.n();
        let zero = field.zero();
        let mut draw = |on: bool| if on { field.random(&mut rng) } else { zero };
        let mats = match self.slice {
            Slice::Full => {
                let mut out = Vec::new();
                for i in 0..self.alphabet.len() {
                    let m = Mat::from_fn(2 * n, |_, _| draw(true));
                    out.push(match self.alphabet.kind(i) {
                        LetterKind::Generic => m,
                        LetterKind::P => self.ctx.project_pk(&m)?.0,
                        LetterKind::K => self.ctx.project_pk(&m)?.1,
                    });
                }
                out
            }
            Slice::UpperTriangularFirst { refined } => {
                let mut out = Vec::new();
                for letter in 0..self.alphabet.len() {
                    let z: QuatMat<Fp> = Mat::from_fn(n, |r, c| {
                        let mut mask = [true; 4];
                        if letter == 0 && r > c {
                            mask = [false; 4];
                        }
                        if refined && letter == 0 && (r, c) == (0, 0) {
                            mask = [true, true, true, false];
                        }
                        if refined && letter == 1 && (r, c) == (1, 0) {
                            mask = [true, false, false, false];
                        }
                        if refined && letter == 1 && (r, c) == (0, 1) {
                            mask = [true, true, false, false];
                        }
                        Quaternion::new(draw(mask[0]), draw(mask[1]), draw(mask[2]), draw(mask[3]))
                    });
                    out.push(quat_embed(&z, &iota));
                }
                out
            }
            Slice::PiSlice | Slice::TracelessPi => {
                let q = |a, b, c| Quaternion::new(a, b, c, zero);
                let mut diag: Vec<Fp> = (0..n).map(|_| draw(true)).collect();
                if self.slice == Slice::TracelessPi {
                    let s = diag[..n - 1].iter().fold(zero, |acc, v| acc + *v);
                    diag[n - 1] = -s;
                }
                let mut x: QuatMat<Fp> = Mat::zeros(n, &Quaternion::real(zero));
                let mut y = x.clone();
                for i in 0..n {
                    x.set(i, i, Quaternion::real(diag[i]));
                    y.set(i, i, q(zero, draw(true), zero));
                }
                for i in 0..n {
                    for j in i + 1..n {
                        let e = q(draw(true), draw(true), draw(true));
                        y.set(j, i, -e.conj());
                        y.set(i, j, e);
                    }
                }
                let (x, y) = (quat_embed(&x, &iota), quat_embed(&y, &iota));
                if self.alphabet.len() == 1 {
                    vec![x + y]
                } else {
                    vec![x, y]
                }
            }
        };
        Ok(SamplePoint { mats })
    }
}

/// A random element of Sp₂ₙ(𝔽ₚ) as a product of transvections
/// I + c·v·vᵀJ.
pub fn random_symplectic<G: Rng + ?Sized>(ctx: &SymplecticContext, field: PrimeField, rng: &mut G) -> Mat<Fp> {
    let d = ctx.dim();
    let one = field.one();
    let j = ctx.j(&one);
    let mut a = Mat::identity(d, &one);
    for _ in 0..2 * d {
        let v: Vec<Fp> = (0..d).map(|_| field.random(rng)).collect();
        let c = field.random(rng);
        let vvt = Mat::from_fn(d, |r, s| c * v[r] * v[s]);
        let t = Mat::identity(d, &one) + vvt.mul_ref(&j);
        a = a.mul_ref(&t);
    }
    a
}

impl SamplePoint {
    /// Apply X ↦ A X A⁻¹ to every component (A⁻¹ = A* for symplectic A).
    pub fn conjugate(&self, ctx: &SymplecticContext, a: &Mat<Fp>) -> Result<SamplePoint> {
        let inv = ctx.adjoint(a)?;
        Ok(SamplePoint { mats: self.mats.iter().map(|m| a.mul_ref(m).mul_ref(&inv)).collect() })
    }
}
