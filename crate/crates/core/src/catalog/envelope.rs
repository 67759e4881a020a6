//! Fit of `a_n ~ K lambda^n` for rational series with a simple dominant pole.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use super::CatalogError;
use crate::series::numeric::complex_roots;
use crate::series::{series_expand, smallest_positive_root, RatFunc};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EnvelopeReport {
    pub k: f64,
    pub lambda: f64,
    /// `max |a_n - K lambda^n|` over `n <= n_max`.
    pub residual_max: f64,
    pub residual_max_first_half: f64,
    pub residual_max_second_half: f64,
}

impl EnvelopeReport {
    /// Residuals do not grow over the tested range.
    pub fn bounded(&self) -> bool {
        self.residual_max_second_half <= 1.5 * self.residual_max_first_half + 1e-6
    }
}

pub fn coefficient_envelope_check(f: &RatFunc, n_max: usize) -> Result<EnvelopeReport, CatalogError> {
    let den = f.denominator();
    let bad = |why: &str| CatalogError::DominantRoot(why.to_string());
    let rough = smallest_positive_root(den, &BigRational::new(BigInt::one(), BigInt::from(1u64 << 40)))
        .ok_or_else(|| bad("no positive root"))?;
    let rho = rough.mid_f64();
    let deriv = den.derivative();
    if den.gcd(&deriv).degree().unwrap_or(0) > 0 {
        // a repeated factor vanishing at the dominant root breaks the fit
        let g = den.gcd(&deriv);
        if g.sign_at_rational(&rough.lo) != g.sign_at_rational(&rough.hi) || g.eval_f64(rho).abs() < 1e-9 {
            return Err(bad("dominant root is not simple"));
        }
    }
    let others = complex_roots(den)
        .into_iter()
        .filter(|z| (z.re - rho).abs() > 1e-9 || z.im.abs() > 1e-9)
        .map(|z| z.norm())
        .fold(f64::INFINITY, f64::min);
    if others <= rho * (1.0 + 1e-9) {
        return Err(bad("dominant root is not unique"));
    }
    // enough precision for lambda^n_max to be exact far beyond the residual
    let bits = (n_max as f64 * (1.0 / rho).log2()).max(0.0) as u32 + 96;
    let tol = BigRational::new(BigInt::one(), BigInt::one() << bits);
    let root = smallest_positive_root(den, &tol).expect("root found above");
    let r = (&root.lo + &root.hi) / BigRational::from_integer(BigInt::from(2));
    let k = -f.numerator().eval_rational(&r) / (&r * deriv.eval_rational(&r));
    let coeffs = series_expand(f, n_max);
    let inv = r.recip();
    let mut pow = BigRational::one();
    let mut residuals = Vec::with_capacity(n_max + 1);
    for a in &coeffs {
        let res = BigRational::from_integer(a.clone()) - &k * &pow;
        residuals.push(res.to_f64().unwrap_or(f64::INFINITY).abs());
        pow *= &inv;
    }
    let half = n_max.div_ceil(2);
    let max = |s: &[f64]| s.iter().cloned().fold(0.0, f64::max);
    Ok(EnvelopeReport {
        k: k.to_f64().unwrap_or(f64::NAN),
        lambda: inv.to_f64().unwrap_or(f64::NAN),
        residual_max: max(&residuals),
        residual_max_first_half: max(&residuals[..half]),
        residual_max_second_half: max(&residuals[half..]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{closed_form, Kind};
    use crate::series::{ratfunc_reduce, Poly};

    #[test]
    fn geometric_series_is_exact() {
        let f = ratfunc_reduce(Poly::one(), Poly::from_i64s(&[1, -1])).unwrap();
        let r = coefficient_envelope_check(&f, 50).unwrap();
        assert!((r.k - 1.0).abs() < 1e-12 && (r.lambda - 1.0).abs() < 1e-12);
        assert_eq!(r.residual_max, 0.0);
    }

    #[test]
    fn surface_group_residuals_bounded() {
        let f = closed_form(Kind::Vertices, 8, 8).unwrap();
        let r = coefficient_envelope_check(&f, 200).unwrap();
        assert!(r.bounded(), "{r:?}");
        assert!(r.residual_max < 10.0, "{r:?}");
        assert!((r.lambda - 6.9798).abs() < 1e-3, "{r:?}");
    }

    #[test]
    fn euclidean_square_lattice_rejected() {
        let f = closed_form(Kind::Vertices, 4, 4).unwrap();
        assert!(matches!(coefficient_envelope_check(&f, 20), Err(CatalogError::DominantRoot(_))));
    }
}
