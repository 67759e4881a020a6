//! Fraction-free determinants over integral domains.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::mpoly::MPoly;
use super::poly::Poly;

/// The operations Bareiss elimination needs from an integral domain.
pub trait Ring: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Division known to be exact.
    fn exact_div(&self, d: &Self) -> Self;
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        debug_assert!(Zero::is_zero(&r));
        q
    }
}

impl Ring for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, d: &Self) -> Self {
        self.div_exact(d).expect("Bareiss division is exact")
    }
}

impl Ring for MPoly {
    fn zero() -> Self {
        MPoly::zero()
    }
    fn one() -> Self {
        MPoly::one()
    }
    fn is_zero(&self) -> bool {
        MPoly::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        MPoly::mul(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        MPoly::sub(self, other)
    }
    fn neg(&self) -> Self {
        MPoly::neg(self)
    }
    fn exact_div(&self, d: &Self) -> Self {
        self.div_exact(d).expect("Bareiss division is exact")
    }
}

/// Determinant of a square matrix by Bareiss elimination with row pivoting.
pub fn determinant<R: Ring>(mut a: Vec<Vec<R>>) -> R {
    let n = a.len();
    if n == 0 {
        return R::one();
    }
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return R::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = v.exact_div(&prev);
            }
            a[i][k] = R::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn integer_determinants() {
        assert_eq!(determinant(m(&[&[2, 3], &[1, 4]])), BigInt::from(5));
        assert_eq!(determinant(m(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]])), BigInt::from(-2));
        assert_eq!(determinant(m(&[&[1, 2], &[2, 4]])), BigInt::from(0));
    }

    #[test]
    fn polynomial_determinant() {
        // | 1  -X |
        // | -X  1 | = 1 - X^2
        let one = Poly::one();
        let mx = Poly::from_i64s(&[0, -1]);
        let d = determinant(vec![vec![one.clone(), mx.clone()], vec![mx, one]]);
        assert_eq!(d, Poly::from_i64s(&[1, 0, -1]));
    }
}
