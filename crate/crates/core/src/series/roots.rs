//! Certified real-root isolation by Sturm sequences and rational bisection.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::Poly;

/// Closed interval `[lo, hi]` with exact rational endpoints.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootBracket {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootBracket {
    pub fn exact(x: BigRational) -> Self {
        RootBracket { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn lo_f64(&self) -> f64 {
        self.lo.to_f64().unwrap_or(f64::NAN)
    }

    pub fn hi_f64(&self) -> f64 {
        self.hi.to_f64().unwrap_or(f64::NAN)
    }

    pub fn mid_f64(&self) -> f64 {
        ((&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))).to_f64().unwrap_or(f64::NAN)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo_f64() <= x && x <= self.hi_f64()
    }
}

impl fmt::Display for RootBracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", rational_string(&self.lo), rational_string(&self.hi))
    }
}

pub fn rational_string(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|e| format!("bad numerator in {s:?}: {e}"))?;
    let d: BigInt = d.parse().map_err(|e| format!("bad denominator in {s:?}: {e}"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(BigRational::new(n, d))
}

/// Converts a finite positive float into an exact rational (binary expansion).
pub fn rational_from_f64(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite float")
}

impl Serialize for RootBracket {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("RootBracket", 2)?;
        st.serialize_field("lo", &rational_string(&self.lo))?;
        st.serialize_field("hi", &rational_string(&self.hi))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for RootBracket {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            lo: String,
            hi: String,
        }
        let raw = Raw::deserialize(d)?;
        let lo = parse_rational(&raw.lo).map_err(serde::de::Error::custom)?;
        let hi = parse_rational(&raw.hi).map_err(serde::de::Error::custom)?;
        if lo > hi {
            return Err(serde::de::Error::custom("lo > hi"));
        }
        Ok(RootBracket { lo, hi })
    }
}

/// Sturm sequence of a squarefree polynomial.
#[derive(Clone, Debug)]
pub struct Sturm {
    seq: Vec<Poly>,
}

impl Sturm {
    /// Builds the sequence for the squarefree part of `p` (roots are counted
    /// without multiplicity).
    pub fn new(p: &Poly) -> Sturm {
        let p0 = p.squarefree();
        let mut seq = vec![p0.clone()];
        if p0.degree().unwrap_or(0) == 0 {
            return Sturm { seq };
        }
        let mut a = p0.clone();
        let mut b = p0.derivative().primitive();
        while !b.is_zero() {
            seq.push(b.clone());
            // prem(a, b) = lc(b)^k a mod b; the Sturm remainder is -(a mod b).
            let da = a.degree().unwrap();
            let db = b.degree().unwrap();
            let k = (da + 1 - db) as u32;
            let r = a.pseudo_rem(&b);
            let lc = b.leading();
            let flip = lc.is_negative() && k % 2 == 1;
            let mut next = -r;
            if flip {
                next = -next;
            }
            let c = next.content();
            if !c.is_zero() {
                next = next.div_exact(&Poly::constant(c)).unwrap();
            }
            a = b;
            b = next;
        }
        Sturm { seq }
    }

    pub fn polynomial(&self) -> &Poly {
        &self.seq[0]
    }

    fn sign_changes(&self, signs: impl Iterator<Item = i8>) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for s in signs {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        self.sign_changes(self.seq.iter().map(|p| p.sign_at_rational(x)))
    }

    pub fn variations_at_pos_infinity(&self) -> usize {
        self.sign_changes(self.seq.iter().map(|p| super::poly::sign_of(&p.leading())))
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }

    /// Number of distinct real roots in `(a, +inf)`.
    pub fn count_above(&self, a: &BigRational) -> usize {
        self.variations_at(a).saturating_sub(self.variations_at_pos_infinity())
    }
}

/// A power of two strictly larger than every root's absolute value.
pub fn root_bound(p: &Poly) -> BigRational {
    let lc = p.leading().abs();
    let max = p.coeffs().iter().map(|c| c.abs()).max().unwrap_or_default();
    // Cauchy: |z| <= 1 + max|a_i| / |a_n|
    let bound = BigInt::one() + (&max + &lc - BigInt::one()) / &lc;
    let mut pow = BigInt::one();
    while pow <= bound {
        pow <<= 1;
    }
    BigRational::from_integer(pow)
}

pub fn default_tolerance() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u64).pow(12))
}

/// Least positive real root of `p`, bracketed to width `<= tol`.
///
/// The bracket contains exactly one root of the squarefree part of `p`, so
/// the squarefree part changes sign across it; for roots of odd multiplicity
/// so does `p`. Dyadic roots are found exactly.
pub fn smallest_positive_root(p: &Poly, tol: &BigRational) -> Option<RootBracket> {
    if p.is_zero() {
        return None;
    }
    let q = p.unshift(p.low_degree());
    let sturm = Sturm::new(&q);
    let zero = BigRational::zero();
    let hi = root_bound(sturm.polynomial());
    if sturm.count(&zero, &hi) == 0 {
        return None;
    }
    let (lo, hi) = isolate_first(&sturm, zero, hi);
    Some(refine(&sturm, lo, hi, tol))
}

/// Shrinks `(lo, hi]` to an interval still containing the least root of the
/// Sturm polynomial in it and exactly one root overall.
fn isolate_first(sturm: &Sturm, mut lo: BigRational, mut hi: BigRational) -> (BigRational, BigRational) {
    let two = BigRational::from_integer(BigInt::from(2));
    while sturm.count(&lo, &hi) > 1 {
        let mid = (&lo + &hi) / &two;
        if sturm.count(&lo, &mid) >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo, hi)
}

/// Bisects `(lo, hi]`, which holds exactly one root, down to width `tol`.
fn refine(sturm: &Sturm, mut lo: BigRational, mut hi: BigRational, tol: &BigRational) -> RootBracket {
    let q = sturm.polynomial();
    let two = BigRational::from_integer(BigInt::from(2));
    loop {
        if q.sign_at_rational(&hi) == 0 {
            return RootBracket::exact(hi);
        }
        if &hi - &lo <= *tol {
            return RootBracket { lo, hi };
        }
        let mid = (&lo + &hi) / &two;
        if sturm.count(&lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

/// All distinct positive roots in `(0, bound]`, each bracketed to width `<= tol`.
pub fn positive_roots(p: &Poly, tol: &BigRational) -> Vec<RootBracket> {
    let mut out = Vec::new();
    if p.is_zero() {
        return out;
    }
    let q = p.unshift(p.low_degree());
    let sturm = Sturm::new(&q);
    let q = sturm.polynomial().clone();
    let two = BigRational::from_integer(BigInt::from(2));
    let mut stack = vec![(BigRational::zero(), root_bound(&q))];
    while let Some((lo, hi)) = stack.pop() {
        match sturm.count(&lo, &hi) {
            0 => {}
            1 => out.push(refine(&sturm, lo, hi, tol)),
            _ => {
                let mid = (&lo + &hi) / &two;
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn linear_root_is_exact() {
        let b = smallest_positive_root(&Poly::from_i64s(&[1, -2]), &default_tolerance()).unwrap();
        assert_eq!(b, RootBracket::exact(r(1, 2)));
    }

    #[test]
    fn double_root_at_one() {
        let b = smallest_positive_root(&Poly::from_i64s(&[1, -2, 1]), &default_tolerance()).unwrap();
        assert_eq!(b, RootBracket::exact(r(1, 1)));
    }

    #[test]
    fn salem_denominator_8_8() {
        let p = Poly::from_i64s(&[1, -6, -6, -6, 1]);
        let b = smallest_positive_root(&p, &default_tolerance()).unwrap();
        assert!(b.width() <= default_tolerance());
        let x = b.mid_f64();
        assert!((x - 0.1433).abs() < 1e-3, "{x}");
        assert!((1.0 / x - 6.98).abs() < 0.01);
        // independent check: sign change of the float evaluation
        assert!(p.eval_f64(b.lo_f64()) * p.eval_f64(b.hi_f64()) <= 0.0);
    }

    #[test]
    fn no_positive_root() {
        assert_eq!(smallest_positive_root(&Poly::from_i64s(&[1, 1]), &default_tolerance()), None);
        assert_eq!(smallest_positive_root(&Poly::from_i64s(&[1, 0, 1]), &default_tolerance()), None);
        assert_eq!(smallest_positive_root(&Poly::from_i64s(&[3]), &default_tolerance()), None);
    }

    #[test]
    fn sturm_counts() {
        // (X - 1)(X - 2)(X + 3)
        let p = &(&Poly::from_i64s(&[-1, 1]) * &Poly::from_i64s(&[-2, 1])) * &Poly::from_i64s(&[3, 1]);
        let s = Sturm::new(&p);
        assert_eq!(s.count(&r(-10, 1), &r(10, 1)), 3);
        assert_eq!(s.count(&r(0, 1), &r(3, 2)), 1);
        assert_eq!(s.count_above(&r(0, 1)), 2);
    }

    #[test]
    fn json_roundtrip() {
        let b = RootBracket { lo: r(1, 3), hi: r(1, 2) };
        let js = serde_json::to_string(&b).unwrap();
        assert_eq!(js, r#"{"lo":"1/3","hi":"1/2"}"#);
        let back: RootBracket = serde_json::from_str(&js).unwrap();
        assert_eq!(back, b);
    }

    #[test]
    fn all_positive_roots() {
        let p = &Poly::from_i64s(&[-1, 3]) * &Poly::from_i64s(&[-5, 1]);
        let roots = positive_roots(&p, &default_tolerance());
        assert_eq!(roots.len(), 2);
        assert!(roots[0].contains(1.0 / 3.0));
        assert_eq!(roots[1], RootBracket::exact(r(5, 1)));
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec(-20i64..20, 2..7).prop_map(|v| Poly::from_i64s(&v))
    }

    proptest! {
        #[test]
        fn bracket_is_certified(p in arb_poly()) {
            prop_assume!(!p.is_zero());
            let tol = BigRational::new(BigInt::one(), BigInt::from(1u64 << 30));
            if let Some(b) = smallest_positive_root(&p, &tol) {
                let sf = Sturm::new(&p.unshift(p.low_degree()));
                let q = sf.polynomial();
                prop_assert!(b.lo <= b.hi);
                prop_assert!(b.width() <= tol);
                prop_assert!(q.sign_at_rational(&b.lo) * q.sign_at_rational(&b.hi) <= 0);
                // nothing positive strictly below lo
                let at_lo = usize::from(q.sign_at_rational(&b.lo) == 0);
                prop_assert_eq!(sf.count(&BigRational::zero(), &b.lo), at_lo);
            } else {
                let sf = Sturm::new(&p.unshift(p.low_degree()));
                prop_assert_eq!(sf.count_above(&BigRational::zero()), 0);
            }
        }
    }
}
