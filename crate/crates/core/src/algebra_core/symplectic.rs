use super::mat::Mat;
use super::ring::{FieldOps, Ring};
use crate::error::{Error, Result};

/// Sp₂ₙ data: the form J = [[0, −I], [I, 0]] and the adjoint X* = J⁻¹XᵀJ.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymplecticContext {
    n: usize,
}

impl SymplecticContext {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Dimension("symplectic rank must be positive".into()));
        }
        Ok(SymplecticContext { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    /// dim 𝔭 = n(2n−1).
    pub fn dim_p(&self) -> usize {
        self.n * (2 * self.n - 1)
    }

    /// dim 𝔨 = n(2n+1).
    pub fn dim_k(&self) -> usize {
        self.n * (2 * self.n + 1)
    }

    pub fn j<R: Ring>(&self, proto: &R) -> Mat<R> {
        let n = self.n;
        Mat::from_fn(2 * n, |i, j| {
            if i < n && j == i + n {
                -proto.one_like()
            } else if i >= n && j + n == i {
                proto.one_like()
            } else {
                proto.zero_like()
            }
        })
    }

    fn check<R: Ring>(&self, x: &Mat<R>) -> Result<()> {
        if x.dim() != 2 * self.n {
            return Err(Error::Dimension(format!("expected a {0}x{0} matrix, got {1}x{1}", 2 * self.n, x.dim())));
        }
        Ok(())
    }

    /// X* via the block formula [[X₄ᵀ, −X₂ᵀ], [−X₃ᵀ, X₁ᵀ]].
    pub fn adjoint<R: Ring>(&self, x: &Mat<R>) -> Result<Mat<R>> {
        self.check(x)?;
        Ok(self.adjoint_unchecked(x))
    }

    pub(crate) fn adjoint_unchecked<R: Ring>(&self, x: &Mat<R>) -> Mat<R> {
        let n = self.n;
        Mat::from_fn(2 * n, |i, j| {
            let (bi, ii) = (i / n, i % n);
            let (bj, jj) = (j / n, j % n);
            match (bi, bj) {
                (0, 0) => x.get(n + jj, n + ii).clone(),
                (0, 1) => -x.get(jj, n + ii).clone(),
                (1, 0) => -x.get(n + jj, ii).clone(),
                _ => x.get(jj, ii).clone(),
            }
        })
    }

    pub fn is_in_p<R: Ring>(&self, x: &Mat<R>) -> bool {
        x.dim() == 2 * self.n && self.adjoint_unchecked(x) == *x
    }

    pub fn is_in_k<R: Ring>(&self, x: &Mat<R>) -> bool {
        x.dim() == 2 * self.n && self.adjoint_unchecked(x) == -x.clone()
    }

    /// Z = x + y with x ∈ 𝔭, y ∈ 𝔨. Needs odd characteristic.
    pub fn project_pk<R: FieldOps>(&self, z: &Mat<R>) -> Result<(Mat<R>, Mat<R>)> {
        self.check(z)?;
        let proto = &z.entries()[0];
        let half = proto
            .from_i64_like(2)
            .inv()
            .ok_or_else(|| Error::Dimension("projection needs characteristic other than 2".into()))?;
        let zs = self.adjoint_unchecked(z);
        let x = (z.clone() + zs.clone()).scale(&half);
        let y = (z.clone() - zs).scale(&half);
        Ok((x, y))
    }

    /// Free parameters of the block description of 𝔭 (resp. 𝔨): X₁
    /// arbitrary, X₄ = X₁ᵀ, X₂ and X₃ skew (resp. symmetric).
    pub fn block_parameter_counts(&self) -> (usize, usize) {
        let n = self.n;
        let skew = n * (n - 1) / 2;
        let sym = n * (n + 1) / 2;
        (n * n + 2 * skew, n * n + 2 * sym)
    }
}
