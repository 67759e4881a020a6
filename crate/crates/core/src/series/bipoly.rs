//! Polynomials in `X` and one function variable `Y`, with resultants and
//! discriminants taken with respect to `Y`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::det::determinant;
use super::poly::Poly;
use super::SeriesError;

/// `sum_j c_j(X) Y^j`, coefficients ascending in `Y`, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BiPoly {
    coeffs: Vec<Poly>,
}

impl BiPoly {
    pub fn new(mut coeffs: Vec<Poly>) -> Self {
        while coeffs.last().is_some_and(Poly::is_zero) {
            coeffs.pop();
        }
        BiPoly { coeffs }
    }

    /// Builds from a grid `grid[j][i]` = coefficient of `X^i Y^j`.
    pub fn from_grid(grid: &[&[i64]]) -> Self {
        BiPoly::new(grid.iter().map(|row| Poly::from_i64s(row)).collect())
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree_y(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn degree_x(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(Poly::degree).max()
    }

    pub fn leading_y(&self) -> Poly {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn derivative_y(&self) -> BiPoly {
        BiPoly::new(self.coeffs.iter().enumerate().skip(1).map(|(j, c)| c.scale(&BigInt::from(j))).collect())
    }

    pub fn neg(&self) -> BiPoly {
        BiPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    /// Substitutes a truncated power series for `Y` and returns the series
    /// of the result to order `n` (exclusive).
    pub fn eval_series(&self, y: &[BigInt], n: usize) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); n];
        let mut pow = vec![BigInt::zero(); n];
        if n > 0 {
            pow[0] = BigInt::one();
        }
        for c in &self.coeffs {
            for (i, a) in c.coeffs().iter().enumerate() {
                for k in 0..n.saturating_sub(i) {
                    out[i + k] += a * &pow[k];
                }
            }
            let mut next = vec![BigInt::zero(); n];
            for (i, p) in pow.iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                for (k, yk) in y.iter().enumerate().take(n - i) {
                    next[i + k] += p * yk;
                }
            }
            pow = next;
        }
        out
    }

    /// Divides out the integer content and the largest power of `X` common
    /// to all coefficients, then fixes the sign so that the lowest nonzero
    /// coefficient of the `Y`-leading coefficient is positive.
    pub fn normalized(&self) -> BiPoly {
        if self.is_zero() {
            return self.clone();
        }
        let content = self.coeffs.iter().fold(BigInt::zero(), |g, c| num_integer::Integer::gcd(&g, &c.content()));
        let shift = self.coeffs.iter().filter(|c| !c.is_zero()).map(Poly::low_degree).min().unwrap_or(0);
        let lead = self.leading_y();
        let sign = if lead.coeff(lead.low_degree()).is_negative() { -BigInt::one() } else { BigInt::one() };
        let scale = content * sign;
        BiPoly::new(
            self.coeffs.iter().map(|c| c.unshift(shift).div_exact(&Poly::constant(scale.clone())).unwrap()).collect(),
        )
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})Y")?,
                _ => write!(f, "({c})Y^{j}")?,
            }
        }
        Ok(())
    }
}

/// Sylvester matrix of `p` (degree n) and `q` (degree k) in `Y`: k rows of
/// `p`'s coefficients followed by n rows of `q`'s, descending powers.
fn sylvester(p: &BiPoly, q: &BiPoly) -> Vec<Vec<Poly>> {
    let n = p.degree_y().unwrap();
    let k = q.degree_y().unwrap();
    let size = n + k;
    let mut rows = Vec::with_capacity(size);
    for i in 0..k {
        let mut row = vec![Poly::zero(); size];
        for (j, c) in p.coeffs.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..n {
        let mut row = vec![Poly::zero(); size];
        for (j, c) in q.coeffs.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// `res_Y(p, q)`, the Sylvester determinant.
pub fn resultant(p: &BiPoly, q: &BiPoly) -> Result<Poly, SeriesError> {
    let (n, k) = match (p.degree_y(), q.degree_y()) {
        (Some(n), Some(k)) => (n, k),
        _ => return Err(SeriesError::ZeroPolynomial),
    };
    if n == 0 && k == 0 {
        return Err(SeriesError::ConstantInY);
    }
    Ok(determinant(sylvester(p, q)))
}

/// `disc_Y(p) = (-1)^(n(n-1)/2) res_Y(p, p') / lc_Y(p)`.
pub fn discriminant(p: &BiPoly) -> Result<Poly, SeriesError> {
    let n = match p.degree_y() {
        Some(n) if n >= 1 => n,
        _ => return Err(SeriesError::DegenerateDegree),
    };
    if n == 1 {
        return Ok(Poly::one());
    }
    let r = resultant(p, &p.derivative_y())?;
    let d = r.div_exact(&p.leading_y()).expect("leading coefficient divides the resultant with the derivative");
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -d } else { d })
}

#[cfg(test)]
mod tests {
    use super::*;

    // grid rows are Y^0, Y^1, ...; entries ascending in X
    #[test]
    fn resultant_substitution() {
        let p = BiPoly::from_grid(&[&[0, -1], &[1]]);
        let q = BiPoly::from_grid(&[&[-3], &[0], &[1]]);
        assert_eq!(resultant(&p, &q).unwrap(), Poly::from_i64s(&[-3, 0, 1]));
    }

    #[test]
    fn resultant_two_by_two() {
        let p = BiPoly::from_grid(&[&[0, -1], &[0], &[1]]);
        let q = BiPoly::from_grid(&[&[-1], &[1]]);
        assert_eq!(resultant(&p, &q).unwrap(), Poly::from_i64s(&[1, -1]));
    }

    #[test]
    fn common_factor_gives_zero() {
        let f = BiPoly::from_grid(&[&[0, -1], &[1]]);
        let a = BiPoly::from_grid(&[&[2], &[1]]);
        let b = BiPoly::from_grid(&[&[0, 5], &[3]]);
        let p = mul(&f, &a);
        let q = mul(&f, &b);
        assert!(resultant(&p, &q).unwrap().is_zero());
        assert!(!resultant(&a, &b).unwrap().is_zero());
    }

    #[test]
    fn constant_pair_is_an_error() {
        let c = BiPoly::from_grid(&[&[1, 1]]);
        assert_eq!(resultant(&c, &c), Err(SeriesError::ConstantInY));
    }

    #[test]
    fn discriminants() {
        let p = BiPoly::from_grid(&[&[0, -1], &[0], &[1]]);
        assert_eq!(discriminant(&p).unwrap(), Poly::from_i64s(&[0, 4]));
        let p = BiPoly::from_grid(&[&[0, -1], &[1], &[1]]);
        assert_eq!(discriminant(&p).unwrap(), Poly::from_i64s(&[1, 4]));
        let p = BiPoly::from_grid(&[&[2], &[-3], &[1]]);
        assert_eq!(discriminant(&p).unwrap(), Poly::one());
        assert_eq!(discriminant(&BiPoly::from_grid(&[&[1]])), Err(SeriesError::DegenerateDegree));
    }

    #[test]
    fn cubic_discriminant_matches_formula() {
        // Y^3 + aY + b has discriminant -4a^3 - 27b^2; take a = X, b = 1
        let p = BiPoly::from_grid(&[&[1], &[0, 1], &[0], &[1]]);
        assert_eq!(discriminant(&p).unwrap(), Poly::from_i64s(&[-27, 0, 0, -4]));
    }

    fn mul(a: &BiPoly, b: &BiPoly) -> BiPoly {
        let mut out = vec![Poly::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            for (j, y) in b.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
        BiPoly::new(out)
    }

    #[test]
    fn resultant_vanishes_iff_common_factor() {
        // random-ish constructed pairs sharing (Y - c X) or not
        for c in -3i64..=3 {
            let f = BiPoly::from_grid(&[&[0, -c], &[1]]);
            let a = BiPoly::from_grid(&[&[1, 1], &[0, 2], &[1]]);
            let b = BiPoly::from_grid(&[&[c + 4], &[1]]);
            assert!(resultant(&mul(&f, &a), &mul(&f, &b)).unwrap().is_zero());
            assert!(!resultant(&a, &b).unwrap().is_zero());
        }
    }
}
