//! Cogrowth and spectral-radius bounds for simple random walks.
//!
//! `d` is the vertex degree. Cogrowth `alpha` is the growth rate of proper
//! loops at the base point; `mu` is the spectral radius.

mod report;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::catalog::CatalogError;
use crate::grammar::GrammarError;
use crate::tessellation::{return_probability, Ball, TessellationError};

pub use report::{bounds_report, BoundsOptions, BoundsReport, Entry, EntryKind, Format, Provenance};

#[derive(Clone, Debug, PartialEq, Error)]
pub enum BoundsError {
    #[error("{0}")]
    OutOfRange(String),
    #[error(transparent)]
    Tessellation(#[from] TessellationError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Grammar(#[from] GrammarError),
}

fn check_degree(d: u32) -> Result<(), BoundsError> {
    if d < 2 {
        return Err(BoundsError::OutOfRange(format!("degree must be at least 2 (got {d})")));
    }
    Ok(())
}

/// Lower bound `2 sqrt(d - 1) / d` on the spectral radius, attained by the tree.
pub fn kesten_lower(d: u32) -> Result<f64, BoundsError> {
    check_degree(d)?;
    Ok(2.0 * f64::from(d - 1).sqrt() / f64::from(d))
}

/// Spectral radius of a `d`-regular graph with cogrowth `alpha`.
///
/// Constant `2 sqrt(d - 1) / d` up to `alpha = sqrt(d - 1)`, then
/// `(d - 1 + alpha^2) / (d alpha)`.
pub fn grigorchuk_mu(alpha: f64, d: u32) -> Result<f64, BoundsError> {
    check_degree(d)?;
    let top = f64::from(d - 1);
    if !(1.0..=top).contains(&alpha) {
        return Err(BoundsError::OutOfRange(format!("cogrowth {alpha} outside [1, {top}]")));
    }
    if alpha <= top.sqrt() {
        return kesten_lower(d);
    }
    Ok((top + alpha * alpha) / (f64::from(d) * alpha))
}

/// The second branch of [`grigorchuk_mu`] in exact arithmetic; it is rational
/// in `alpha`. Requires `alpha^2 >= d - 1`.
pub fn grigorchuk_mu_exact(alpha: &BigRational, d: u32) -> Result<BigRational, BoundsError> {
    check_degree(d)?;
    let top = BigRational::from_integer(BigInt::from(d - 1));
    if alpha * alpha < top || *alpha > top {
        return Err(BoundsError::OutOfRange(format!("cogrowth {alpha} outside [sqrt({top}), {top}]")));
    }
    Ok((&top + alpha * alpha) / (alpha * BigInt::from(d)))
}

/// Cogrowth from the radius of a series of loops counted by half-length.
pub fn alpha_from_halflength_radius(rho: f64) -> Result<f64, BoundsError> {
    if !(rho > 0.0 && rho <= 1.0) {
        return Err(BoundsError::OutOfRange(format!("radius {rho} outside (0, 1]")));
    }
    Ok(rho.powf(-0.5))
}

/// Loops made of a proper path, a cell boundary in its cone, and the path back.
#[derive(Clone, Debug, Serialize)]
pub struct LoopFamily {
    /// Limit of the roots below: `sqrt(l - 1)`.
    pub alpha: f64,
    /// `beta_n^(1 / (2n + m))` for `n = 1, 2, ...` with
    /// `beta_n = 2 (l - 2) l (l - 1)^(n - 1)`.
    pub roots: Vec<f64>,
}

pub fn kesten_loop_family_alpha(l: u32, m: u32, n_max: u32) -> Result<LoopFamily, BoundsError> {
    crate::tessellation::check_parameters(l, m)?;
    let (lf, mf) = (f64::from(l), f64::from(m));
    let c = (2.0 * (lf - 2.0) * lf).ln();
    let roots = (1..=n_max)
        .map(|n| {
            let n = f64::from(n);
            ((c + (n - 1.0) * (lf - 1.0).ln()) / (2.0 * n + mf)).exp()
        })
        .collect();
    Ok(LoopFamily { alpha: (lf - 1.0).sqrt(), roots })
}

/// `coeff * sqrt(radicand)` with a squarefree integer radicand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surd {
    pub coeff: BigRational,
    pub radicand: u64,
}

impl Surd {
    pub fn new(coeff: BigRational, radicand: u64) -> Surd {
        if coeff.is_zero() || radicand == 0 {
            return Surd { coeff: BigRational::zero(), radicand: 1 };
        }
        let mut out = 1u64;
        let mut rest = radicand;
        let mut c = coeff;
        let mut p = 2u64;
        while p * p <= rest {
            while rest.is_multiple_of(p * p) {
                rest /= p * p;
                c *= BigInt::from(p);
            }
            if rest.is_multiple_of(p) {
                rest /= p;
                out *= p;
            }
            p += 1;
        }
        Surd { coeff: c, radicand: out * rest }
    }

    pub fn value(&self) -> f64 {
        self.coeff.to_f64().unwrap_or(f64::NAN) * (self.radicand as f64).sqrt()
    }

    pub fn is_rational(&self) -> bool {
        self.radicand == 1
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = if self.coeff.is_integer() { self.coeff.numer().to_string() } else { self.coeff.to_string() };
        match (self.is_rational(), self.coeff.is_one()) {
            (true, _) => write!(f, "{c}"),
            (false, true) => write!(f, "sqrt({})", self.radicand),
            (false, false) => write!(f, "{c}*sqrt({})", self.radicand),
        }
    }
}

impl Serialize for Surd {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Edge-isoperimetric constant `(l - 2) sqrt(1 - 4 / ((l - 2)(m - 2)))`.
pub fn isoperimetric_constant(l: u32, m: u32) -> Result<Surd, BoundsError> {
    crate::tessellation::check_parameters(l, m)?;
    let p = u64::from(l - 2) * u64::from(m - 2);
    // (l - 2) sqrt((p - 4) / p) = sqrt((p - 4) p) / (m - 2)
    let coeff = BigRational::new(BigInt::one(), BigInt::from(m - 2));
    Ok(Surd::new(coeff, (p - 4) * p))
}

/// `(1 - (d - 1) iota / d^2, sqrt(1 - (iota / d)^2))`.
pub fn iso_mu_bounds(iota: f64, d: u32) -> Result<(f64, f64), BoundsError> {
    check_degree(d)?;
    let df = f64::from(d);
    if !(0.0..=df).contains(&iota) {
        return Err(BoundsError::OutOfRange(format!("isoperimetric constant {iota} outside [0, {d}]")));
    }
    let lower = 1.0 - (df - 1.0) / (df * df) * iota;
    let upper = (1.0 - (iota / df).powi(2)).sqrt();
    Ok((lower, upper))
}

/// `p^(2n)(*, *)` and its `2n`-th root, a lower bound on `mu`.
#[derive(Clone, Debug, Serialize)]
pub struct FeketeSample {
    pub n: u32,
    #[serde(serialize_with = "ser_rational")]
    pub probability: BigRational,
    pub root: f64,
}

fn ser_rational<S: serde::Serializer>(x: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{}/{}", x.numer(), x.denom()))
}

fn ln_big(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().unwrap_or(f64::NAN).ln();
    }
    let shift = bits - 60;
    (x >> shift).to_f64().unwrap_or(f64::NAN).ln() + shift as f64 * std::f64::consts::LN_2
}

/// Real `k`-th root of a positive rational.
pub fn rational_root(x: &BigRational, k: u32) -> f64 {
    if !x.is_positive() {
        return 0.0;
    }
    ((ln_big(x.numer()) - ln_big(x.denom())) / f64::from(k)).exp()
}

pub fn fekete_lower(ball: &Ball, n: u32) -> Result<FeketeSample, BoundsError> {
    if n == 0 {
        return Err(BoundsError::OutOfRange("n must be positive".into()));
    }
    let p = return_probability(ball, 2 * n)?;
    let root = rational_root(&p, 2 * n);
    Ok(FeketeSample { n, probability: p, root })
}

#[cfg(test)]
#[allow(clippy::approx_constant)]
mod tests {
    use super::*;
    use crate::tessellation::build_ball;
    use proptest::prelude::*;

    #[test]
    fn kesten_values() {
        assert!((kesten_lower(8).unwrap() - 0.661438).abs() < 1e-6);
        assert_eq!(kesten_lower(2).unwrap(), 1.0);
        assert!((kesten_lower(4).unwrap() - 3f64.sqrt() / 2.0).abs() < 1e-15);
        assert!(kesten_lower(1).is_err());
    }

    #[test]
    fn grigorchuk_values() {
        let s7 = 7f64.sqrt();
        assert!((grigorchuk_mu(s7, 8).unwrap() - 2.0 * s7 / 8.0).abs() < 1e-12);
        assert_eq!(grigorchuk_mu(7.0, 8).unwrap(), 1.0);
        assert!((grigorchuk_mu(2.7856, 8).unwrap() - 0.6623).abs() < 1e-4);
        assert!(grigorchuk_mu(7.5, 8).is_err());
        assert!(grigorchuk_mu(0.5, 8).is_err());
        let seven = BigRational::from_integer(7.into());
        assert!(grigorchuk_mu_exact(&seven, 8).unwrap().is_one());
    }

    #[test]
    fn grigorchuk_branches_meet() {
        for d in 3..20u32 {
            let t = f64::from(d - 1).sqrt();
            let second = (f64::from(d - 1) + t * t) / (f64::from(d) * t);
            assert!((second - kesten_lower(d).unwrap()).abs() < 1e-12);
        }
    }

    #[test]
    fn alpha_values() {
        assert!((alpha_from_halflength_radius(1.0 / 7.0248).unwrap() - 2.6504).abs() < 1e-4);
        assert!((alpha_from_halflength_radius(0.12887).unwrap() - 2.7856).abs() < 1e-4);
        assert_eq!(alpha_from_halflength_radius(1.0).unwrap(), 1.0);
        assert!(alpha_from_halflength_radius(0.0).is_err());
        assert!(alpha_from_halflength_radius(1.5).is_err());
    }

    #[test]
    fn loop_family() {
        let f = kesten_loop_family_alpha(8, 8, 100).unwrap();
        assert!((f.alpha - 7f64.sqrt()).abs() < 1e-15);
        assert!(f.roots.windows(2).all(|w| w[0] < w[1]));
        assert!(*f.roots.last().unwrap() < f.alpha);
        assert!((kesten_loop_family_alpha(3, 7, 1).unwrap().alpha - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn isoperimetric_values() {
        let i = isoperimetric_constant(8, 8).unwrap();
        assert_eq!(i.to_string(), "4*sqrt(2)");
        assert!((i.value() - 4.0 * 2f64.sqrt()).abs() < 1e-12);
        assert_eq!(isoperimetric_constant(4, 4).unwrap().value(), 0.0);
        assert_eq!(isoperimetric_constant(5, 4).unwrap().to_string(), "sqrt(3)");
        assert!(isoperimetric_constant(3, 3).is_err());
        let (lo, hi) = iso_mu_bounds(i.value(), 8).unwrap();
        assert!((lo - 0.381282).abs() < 1e-6);
        assert!((hi - 0.707107).abs() < 1e-6);
        assert_eq!(iso_mu_bounds(0.0, 5).unwrap(), (1.0, 1.0));
    }

    #[test]
    fn fekete_values() {
        let ball = build_ball(8, 8, 3).unwrap();
        let s1 = fekete_lower(&ball, 1).unwrap();
        assert_eq!(s1.probability, BigRational::new(1.into(), 8.into()));
        assert!((s1.root - 0.353553).abs() < 1e-6);
        let s2 = fekete_lower(&ball, 2).unwrap();
        assert_eq!(s2.probability, BigRational::new(15.into(), 512.into()));
        assert!((s2.root - 0.4137).abs() < 1e-4);
        assert!(fekete_lower(&ball, 4).is_err());
    }

    proptest! {
        #[test]
        fn grigorchuk_monotone(d in 3u32..30, a in 0.0f64..1.0, b in 0.0f64..1.0) {
            let lo = f64::from(d - 1).sqrt();
            let top = f64::from(d - 1);
            let (x, y) = (lo + a.min(b) * (top - lo), lo + a.max(b) * (top - lo));
            prop_assert!(grigorchuk_mu(x, d).unwrap() <= grigorchuk_mu(y, d).unwrap() + 1e-15);
        }

        #[test]
        fn iso_bounds_ordered(d in 2u32..40, t in 0.0f64..1.0) {
            // no d-regular graph beats the tree's d - 2
            let iota = t * f64::from(d - 2);
            let (lo, hi) = iso_mu_bounds(iota, d).unwrap();
            prop_assert!(lo <= hi + 1e-15);
        }
    }
}
