use super::ring::Ring;
use std::ops::{Add, Mul, Neg, Sub};

/// First-order jet: a value and its partial derivatives with respect
/// to a fixed list of parameters. An empty gradient stands for a
/// constant.
#[derive(Clone, Debug, PartialEq)]
pub struct Dual<R> {
    pub value: R,
    pub grad: Vec<R>,
}

impl<R: Ring> Dual<R> {
    pub fn constant(value: R) -> Self {
        Dual { value, grad: Vec::new() }
    }

    /// The coordinate function number `index` out of `count`, at `value`.
    pub fn variable(value: R, index: usize, count: usize) -> Self {
        let mut grad = vec![value.zero_like(); count];
        grad[index] = value.one_like();
        Dual { value, grad }
    }

    pub fn partial(&self, index: usize) -> R {
        self.grad.get(index).cloned().unwrap_or_else(|| self.value.zero_like())
    }
}

fn zip_grad<R: Ring>(a: Vec<R>, b: Vec<R>, f: impl Fn(R, R) -> R, neg_b: impl Fn(R) -> R) -> Vec<R> {
    match (a.is_empty(), b.is_empty()) {
        (true, true) => Vec::new(),
        (false, true) => a,
        (true, false) => b.into_iter().map(neg_b).collect(),
        (false, false) => {
            assert_eq!(a.len(), b.len(), "jets over different parameter lists");
            a.into_iter().zip(b).map(|(x, y)| f(x, y)).collect()
        }
    }
}

impl<R: Ring> Add for Dual<R> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Dual { value: self.value + o.value, grad: zip_grad(self.grad, o.grad, |x, y| x + y, |y| y) }
    }
}

impl<R: Ring> Sub for Dual<R> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Dual { value: self.value - o.value, grad: zip_grad(self.grad, o.grad, |x, y| x - y, |y| -y) }
    }
}

impl<R: Ring> Neg for Dual<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Dual { value: -self.value, grad: self.grad.into_iter().map(|g| -g).collect() }
    }
}

impl<R: Ring> Mul for Dual<R> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let grad = match (self.grad.is_empty(), o.grad.is_empty()) {
            (true, true) => Vec::new(),
            (false, true) => self.grad.into_iter().map(|g| g * o.value.clone()).collect(),
            (true, false) => o.grad.into_iter().map(|g| self.value.clone() * g).collect(),
            (false, false) => {
                assert_eq!(self.grad.len(), o.grad.len(), "jets over different parameter lists");
                self.grad
                    .into_iter()
                    .zip(o.grad)
                    .map(|(du, dv)| du * o.value.clone() + self.value.clone() * dv)
                    .collect()
            }
        };
        Dual { value: self.value * o.value, grad }
    }
}

impl<R: Ring> Ring for Dual<R> {
    fn zero_like(&self) -> Self {
        Dual::constant(self.value.zero_like())
    }
    fn one_like(&self) -> Self {
        Dual::constant(self.value.one_like())
    }
    fn from_i64_like(&self, v: i64) -> Self {
        Dual::constant(self.value.from_i64_like(v))
    }
    fn is_zero(&self) -> bool {
        self.value.is_zero() && self.grad.iter().all(|g| g.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    // f(u, v) = u³v − 2uv² + 5
    fn poly<R: Ring>(u: R, v: R) -> R {
        let five = u.from_i64_like(5);
        let two = u.from_i64_like(2);
        u.clone() * u.clone() * u.clone() * v.clone() - two * u * v.clone() * v + five
    }

    #[test]
    fn product_rule() {
        let u = Dual::variable(q(3), 0, 2);
        let v = Dual::variable(q(-2), 1, 2);
        let w = u.clone() * v.clone();
        assert_eq!(w.value, q(-6));
        assert_eq!(w.grad, vec![q(-2), q(3)]);
        let c = Dual::constant(q(4)) * u;
        assert_eq!(c.grad, vec![q(4), q(0)]);
    }

    proptest! {
        #[test]
        fn matches_exact_difference_quotient(a in -50i64..50, b in -50i64..50, h in 1i64..20) {
            // Richardson combination: 4f(a+h) − f(a+2h) − 3f(a) = 2h∂f − (2/3)h³∂³f,
            // and ∂³f = 6b here, so the error term is known exactly.
            let d = poly(Dual::variable(q(a), 0, 2), Dual::variable(q(b), 1, 2));
            let f0 = poly(q(a), q(b));
            let hh = q(h);
            let f1 = poly(q(a) + hh.clone(), q(b));
            let f2 = poly(q(a) + hh.clone() + hh.clone(), q(b));
            let approx = (q(4) * f1 - f2 - q(3) * f0.clone()) / (q(2) * hh);
            prop_assert_eq!(approx - d.grad[0].clone(), q(-2 * h * h * b));
            prop_assert_eq!(d.value, f0);
        }
    }
}
