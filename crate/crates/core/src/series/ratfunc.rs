//! Reduced rational functions and their power-series expansion.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::poly::Poly;
use super::SeriesError;

/// `numerator / denominator` in lowest terms with `denominator(0) = 1`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RatFunc {
    numerator: Poly,
    denominator: Poly,
}

impl RatFunc {
    pub fn numerator(&self) -> &Poly {
        &self.numerator
    }

    pub fn denominator(&self) -> &Poly {
        &self.denominator
    }

    pub fn polynomial(p: Poly) -> RatFunc {
        RatFunc { numerator: p, denominator: Poly::one() }
    }

    pub fn expand(&self, n_max: usize) -> Vec<BigInt> {
        series_expand(self, n_max)
    }

    pub fn add(&self, other: &RatFunc) -> Result<RatFunc, SeriesError> {
        let num = &(&self.numerator * &other.denominator) + &(&other.numerator * &self.denominator);
        ratfunc_reduce(num, &self.denominator * &other.denominator)
    }

    pub fn mul(&self, other: &RatFunc) -> Result<RatFunc, SeriesError> {
        ratfunc_reduce(&self.numerator * &other.numerator, &self.denominator * &other.denominator)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

/// Cancels common factors and normalizes so that the denominator has
/// constant term 1.
///
/// Series with non-integer coefficients (denominator constant term other
/// than 1 after cancellation) are rejected since every growth series here
/// has integer coefficients.
pub fn ratfunc_reduce(num: Poly, den: Poly) -> Result<RatFunc, SeriesError> {
    if den.is_zero() {
        return Err(SeriesError::ZeroDenominator);
    }
    if den.constant_term().is_zero() {
        return Err(SeriesError::ZeroConstantTerm);
    }
    if num.is_zero() {
        return Ok(RatFunc { numerator: Poly::zero(), denominator: Poly::one() });
    }
    let g = num.gcd(&den).primitive();
    let mut n = num.div_exact(&g).expect("gcd divides numerator");
    let mut d = den.div_exact(&g).expect("gcd divides denominator");
    let c = n.content().gcd(&d.content());
    let c = if d.constant_term().is_negative() { -c } else { c };
    n = n.div_exact(&Poly::constant(c.clone())).expect("content divides");
    d = d.div_exact(&Poly::constant(c)).expect("content divides");
    if !d.constant_term().is_one() {
        return Err(SeriesError::NonIntegralSeries(d.constant_term().to_string()));
    }
    Ok(RatFunc { numerator: n, denominator: d })
}

/// Coefficients `a_0..=a_{n_max}` from the recurrence given by the denominator.
pub fn series_expand(f: &RatFunc, n_max: usize) -> Vec<BigInt> {
    expand_pair(&f.numerator, &f.denominator, n_max).expect("reduced denominators have constant term 1")
}

/// Expansion of an unreduced pair; fails unless the denominator's constant
/// term divides every step exactly.
pub fn expand_pair(num: &Poly, den: &Poly, n_max: usize) -> Result<Vec<BigInt>, SeriesError> {
    let d0 = den.constant_term();
    if d0.is_zero() {
        return Err(SeriesError::ZeroConstantTerm);
    }
    let dc = den.coeffs();
    let mut out: Vec<BigInt> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut acc = num.coeff(n);
        for k in 1..dc.len().min(n + 1) {
            if !dc[k].is_zero() {
                acc -= &dc[k] * &out[n - k];
            }
        }
        let (q, r) = acc.div_rem(&d0);
        if !r.is_zero() {
            return Err(SeriesError::NonIntegralSeries(d0.to_string()));
        }
        out.push(q);
    }
    Ok(out)
}
