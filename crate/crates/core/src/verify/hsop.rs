use crate::algebra_core::{quat_trace, rank, Dual, Mat, QuatMat, Quaternion};
use crate::error::{Error, Result};
use crate::words::{LetterKind, WordList};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

type Q = BigRational;

/// Exact Jacobian of trace functions on the slice at one point.
#[derive(Clone, Debug, PartialEq)]
pub struct JacobianWitness {
    /// Entries of the point as quaternion literals.
    pub point: Vec<Vec<String>>,
    /// One row per function, one column per slice coordinate.
    pub matrix: Vec<Vec<Q>>,
    pub rank: usize,
}

#[derive(Serialize)]
struct WitnessJson<'a> {
    point: &'a [Vec<String>],
    functions: usize,
    parameters: usize,
    rank: usize,
    matrix: Vec<Vec<String>>,
    ok: bool,
}

impl JacobianWitness {
    pub fn functions(&self) -> usize {
        self.matrix.len()
    }

    pub fn parameters(&self) -> usize {
        self.matrix.first().map_or(0, |r| r.len())
    }

    pub fn full_rank(&self) -> bool {
        self.rank == self.functions().min(self.parameters())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(WitnessJson {
            point: &self.point,
            functions: self.functions(),
            parameters: self.parameters(),
            rank: self.rank,
            matrix: self.matrix.iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect(),
            ok: self.full_rank(),
        })
        .expect("plain data")
    }
}

fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

fn fmt_quat(z: &Quaternion<Q>) -> String {
    let mut s = String::new();
    for (c, unit) in [(&z.a, ""), (&z.b, "i"), (&z.c, "j"), (&z.d, "k")] {
        if c.is_zero() {
            continue;
        }
        let neg = *c < q(0);
        let mag = if neg { -c.clone() } else { c.clone() };
        if !s.is_empty() || neg {
            s.push(if neg { '-' } else { '+' });
        }
        if mag != q(1) || unit.is_empty() {
            s += &mag.to_string();
        }
        s += unit;
    }
    if s.is_empty() {
        "0".into()
    } else {
        s
    }
}

/// Reads a square matrix of quaternion literals, one row per line.
pub fn parse_qmat(text: &str) -> Result<QuatMat<Q>> {
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap().trim();
        if body.is_empty() {
            continue;
        }
        let row = body
            .split_whitespace()
            .map(|t| crate::algebra_core::parse_quaternion(t).map_err(|e| Error::parse(i + 1, e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    Mat::from_rows(rows)
}

/// Coordinates of z = x + y on the slice: x real diagonal (n), the i-parts
/// of diag y (n), then the 1, i, j parts of y above the diagonal row by
/// row. Rejects points off the slice.
pub fn pi_coordinates(z: &QuatMat<Q>) -> Result<Vec<Q>> {
    let n = z.dim();
    let off = |m: String| Err(Error::Data(format!("point is not on the slice: {m}")));
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for i in 0..n {
        let d = z.get(i, i);
        if !d.c.is_zero() || !d.d.is_zero() {
            return off(format!("diagonal entry {} has j or k part", i + 1));
        }
        xs.push(d.a.clone());
        ys.push(d.b.clone());
    }
    let mut upper = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let e = z.get(i, j);
            if !e.d.is_zero() {
                return off(format!("entry ({},{}) has a k part", i + 1, j + 1));
            }
            if *z.get(j, i) != -e.conj() {
                return off(format!("entry ({},{}) is not minus the conjugate of ({},{})", j + 1, i + 1, i + 1, j + 1));
            }
            upper.extend([e.a.clone(), e.b.clone(), e.c.clone()]);
        }
    }
    xs.extend(ys);
    xs.extend(upper);
    Ok(xs)
}

/// Rebuild (x, y) with every coordinate a jet variable.
fn slice_jets(n: usize, coords: &[Q]) -> (QuatMat<Dual<Q>>, QuatMat<Dual<Q>>) {
    let m = coords.len();
    let var = |i: usize| Dual::variable(coords[i].clone(), i, m);
    let c0 = Dual::constant(q(0));
    let zq = Quaternion::real(c0.clone());
    let mut x = Mat::zeros(n, &zq);
    let mut y = Mat::zeros(n, &zq);
    for i in 0..n {
        x.set(i, i, Quaternion::real(var(i)));
        y.set(i, i, Quaternion::new(c0.clone(), var(n + i), c0.clone(), c0.clone()));
    }
    let mut k = 2 * n;
    for i in 0..n {
        for j in i + 1..n {
            let e = Quaternion::new(var(k), var(k + 1), var(k + 2), c0.clone());
            k += 3;
            y.set(j, i, -e.conj());
            y.set(i, j, e);
        }
    }
    (x, y)
}

/// Jacobian of the traces of `words` (alphabet `x:p y:k` or one generic
/// letter) with respect to the slice coordinates at z.
pub fn verify_hsop_jacobian(words: &WordList, z: &QuatMat<Q>) -> Result<JacobianWitness> {
    let n = z.dim();
    let coords = pi_coordinates(z)?;
    let (x, y) = slice_jets(n, &coords);
    let kinds = words.alphabet.kinds();
    let mats: Vec<QuatMat<Dual<Q>>> = if kinds == [LetterKind::P, LetterKind::K] {
        vec![x, y]
    } else if kinds == [LetterKind::Generic] {
        vec![x + y]
    } else {
        return Err(Error::Incompatible(format!(
            "the slice carries either one generic matrix or a p/k pair, alphabet is {}",
            words.alphabet
        )));
    };
    let adj: Vec<QuatMat<Dual<Q>>> = mats.iter().map(|m| m.quat_adjoint()).collect();
    let mut matrix = Vec::new();
    for w in words.words() {
        if w.is_empty() {
            return Err(Error::Incompatible("empty word".into()));
        }
        let pick = |l: &crate::words::Letter| if l.starred { &adj[l.matrix_id as usize] } else { &mats[l.matrix_id as usize] };
        let mut acc = pick(&w.letters[0]).clone();
        for l in &w.letters[1..] {
            acc = acc.mul_ref(pick(l));
        }
        let t = quat_trace(&acc);
        matrix.push((0..coords.len()).map(|i| t.partial(i)).collect::<Vec<Q>>());
    }
    let r = rank(matrix.clone());
    let point = (0..n).map(|i| (0..n).map(|j| fmt_quat(z.get(i, j))).collect()).collect();
    Ok(JacobianWitness { point, matrix, rank: r })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_formatting_round_trips() {
        for s in ["-1+i", "j", "1+j", "i+j", "0", "3/2-2k", "-i"] {
            let z = crate::algebra_core::parse_quaternion(s).unwrap();
            assert_eq!(fmt_quat(&z), s);
        }
    }

    #[test]
    fn slice_shape_is_enforced() {
        let good = parse_qmat("1 i\ni 2").unwrap();
        assert_eq!(pi_coordinates(&good).unwrap().len(), 2 + 2 + 3);
        assert!(pi_coordinates(&parse_qmat("1 i\n-i 2").unwrap()).is_err());
        assert!(pi_coordinates(&parse_qmat("j 0\n0 0").unwrap()).is_err());
        assert!(parse_qmat("1 2\n3").is_err());
    }
}
