//! Sparse multivariate integer polynomials, just enough for resultant elimination.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Polynomial in `nvars` variables; terms keyed by exponent vectors (lex order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { nvars: 0, terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        MPoly::constant(0, BigInt::one())
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; nvars], c);
        }
        MPoly { nvars, terms }
    }

    pub fn term(exps: Vec<u32>, c: BigInt) -> Self {
        let nvars = exps.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MPoly { nvars, terms }
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        MPoly::term(e, BigInt::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    fn width(&self, other: &MPoly) -> usize {
        self.nvars.max(other.nvars)
    }

    fn pad(e: &[u32], n: usize) -> Vec<u32> {
        let mut v = e.to_vec();
        v.resize(n, 0);
        v
    }

    fn add_term(terms: &mut BTreeMap<Vec<u32>, BigInt>, e: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = terms.entry(e.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            terms.remove(&e);
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.combine(other, true)
    }

    fn combine(&self, other: &MPoly, negate: bool) -> MPoly {
        let n = self.width(other);
        let mut terms: BTreeMap<Vec<u32>, BigInt> =
            self.terms.iter().map(|(e, c)| (MPoly::pad(e, n), c.clone())).collect();
        for (e, c) in &other.terms {
            let slot = terms.entry(MPoly::pad(e, n)).or_insert_with(BigInt::zero);
            if negate {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
        terms.retain(|_, v| !v.is_zero());
        MPoly { nvars: n, terms }
    }

    pub fn neg(&self) -> MPoly {
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        let n = self.width(other);
        let mut terms: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> =
                    (0..n).map(|i| e1.get(i).copied().unwrap_or(0) + e2.get(i).copied().unwrap_or(0)).collect();
                *terms.entry(e).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        terms.retain(|_, v| !v.is_zero());
        MPoly { nvars: n, terms }
    }

    pub fn scale(&self, c: &BigInt) -> MPoly {
        let mut out = MPoly { nvars: self.nvars, terms: BTreeMap::new() };
        for (e, v) in &self.terms {
            MPoly::add_term(&mut out.terms, e.clone(), v * c);
        }
        out
    }

    fn leading(&self) -> Option<(&Vec<u32>, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        let (de, dc) = d.leading()?;
        let n = self.width(d);
        let de = MPoly::pad(de, n);
        let mut r = self.clone();
        let mut q = MPoly { nvars: n, terms: BTreeMap::new() };
        while let Some((re, rc)) = r.leading() {
            let re = MPoly::pad(re, n);
            if re.iter().zip(&de).any(|(a, b)| a < b) {
                return None;
            }
            let (qc, rem) = rc.div_rem(dc);
            if !rem.is_zero() {
                return None;
            }
            let qe: Vec<u32> = re.iter().zip(&de).map(|(a, b)| a - b).collect();
            let t = MPoly::term(qe.clone(), qc.clone());
            r = r.sub(&t.mul(d));
            *q.terms.entry(qe).or_insert_with(BigInt::zero) += qc;
        }
        q.terms.retain(|_, v| !v.is_zero());
        Some(q)
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e.get(var).copied().unwrap_or(0)).max()
    }

    /// Coefficients with respect to one variable, ascending; that variable's
    /// exponent is zero in every coefficient.
    pub fn coeffs_in(&self, var: usize) -> Vec<MPoly> {
        let deg = match self.degree_in(var) {
            Some(d) => d as usize,
            None => return Vec::new(),
        };
        let mut out = vec![MPoly { nvars: self.nvars, terms: BTreeMap::new() }; deg + 1];
        for (e, c) in &self.terms {
            let k = e.get(var).copied().unwrap_or(0) as usize;
            let mut e2 = e.clone();
            if var < e2.len() {
                e2[var] = 0;
            }
            out[k].terms.insert(e2, c.clone());
        }
        out
    }

    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides by the integer content, making the leading term positive.
    pub fn primitive(&self) -> MPoly {
        let mut g = self.content();
        if g.is_zero() {
            return self.clone();
        }
        if self.leading().is_some_and(|(_, c)| c.is_negative()) {
            g = -g;
        }
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), c / &g)).collect() }
    }

    /// Whether any term involves variable `var`.
    pub fn mentions(&self, var: usize) -> bool {
        self.degree_in(var).is_some_and(|d| d > 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_division_roundtrip() {
        let x = MPoly::var(0, 2);
        let y = MPoly::var(1, 2);
        let a = x.add(&y).mul(&x.sub(&y));
        let b = x.sub(&y);
        assert_eq!(a.div_exact(&b), Some(x.add(&y)));
        assert_eq!(x.add(&MPoly::one()).div_exact(&y), None);
    }

    #[test]
    fn coefficients_in_a_variable() {
        let x = MPoly::var(0, 2);
        let y = MPoly::var(1, 2);
        let p = y.mul(&y).mul(&x).sub(&y).add(&MPoly::constant(2, BigInt::one()));
        let cs = p.coeffs_in(1);
        assert_eq!(cs.len(), 3);
        assert_eq!(cs[2], x);
        assert_eq!(cs[1], MPoly::constant(2, BigInt::from(-1)));
    }
}
