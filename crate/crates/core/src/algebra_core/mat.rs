use super::ring::Ring;
use crate::error::{Error, Result};
use std::ops::{Add, Mul, Neg, Sub};

/// Dense square matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat<R> {
    dim: usize,
    data: Vec<R>,
}

impl<R: Ring> Mat<R> {
    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Dimension("matrix rows must form a nonempty square".into()));
        }
        Ok(Mat { dim, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Mat { dim, data }
    }

    pub fn zeros(dim: usize, proto: &R) -> Self {
        Mat { dim, data: vec![proto.zero_like(); dim * dim] }
    }

    pub fn identity(dim: usize, proto: &R) -> Self {
        Self::from_fn(dim, |i, j| if i == j { proto.one_like() } else { proto.zero_like() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.dim + j] = v;
    }

    pub fn entries(&self) -> &[R] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> R {
        let mut t = self.data[0].zero_like();
        for i in 0..self.dim {
            t = t + self.get(i, i).clone();
        }
        t
    }

    pub fn scale(&self, c: &R) -> Self {
        Mat { dim: self.dim, data: self.data.iter().map(|v| c.clone() * v.clone()).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn map<S>(&self, f: impl Fn(&R) -> S) -> Mat<S> {
        Mat { dim: self.dim, data: self.data.iter().map(f).collect() }
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        if self.dim != o.dim {
            return Err(Error::Dimension(format!("cannot multiply {}x{} by {}x{}", self.dim, self.dim, o.dim, o.dim)));
        }
        Ok(self.mul_ref(o))
    }

    /// Product without consuming either side. Keeps factor order, so it
    /// is also correct for noncommutative entries.
    pub fn mul_ref(&self, o: &Self) -> Self {
        assert_eq!(self.dim, o.dim, "dimension mismatch");
        let n = self.dim;
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = self.data[i * n].clone() * o.data[j].clone();
                for k in 1..n {
                    acc = acc + self.data[i * n + k].clone() * o.data[k * n + j].clone();
                }
                data.push(acc);
            }
        }
        Mat { dim: n, data }
    }
}

impl<R: Ring> Add for Mat<R> {
    type Output = Mat<R>;
    fn add(self, o: Self) -> Self {
        assert_eq!(self.dim, o.dim, "dimension mismatch");
        Mat { dim: self.dim, data: self.data.into_iter().zip(o.data).map(|(a, b)| a + b).collect() }
    }
}

impl<R: Ring> Sub for Mat<R> {
    type Output = Mat<R>;
    fn sub(self, o: Self) -> Self {
        assert_eq!(self.dim, o.dim, "dimension mismatch");
        Mat { dim: self.dim, data: self.data.into_iter().zip(o.data).map(|(a, b)| a - b).collect() }
    }
}

impl<R: Ring> Neg for Mat<R> {
    type Output = Mat<R>;
    fn neg(self) -> Self {
        Mat { dim: self.dim, data: self.data.into_iter().map(|a| -a).collect() }
    }
}

impl<R: Ring> Mul for &Mat<R> {
    type Output = Mat<R>;
    fn mul(self, o: Self) -> Mat<R> {
        self.mul_ref(o)
    }
}
