//! Salem-polynomial profile of a growth denominator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::series::numeric::complex_roots;
use crate::series::{Poly, Sturm};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SalemReport {
    /// Coefficients read the same in both directions.
    pub reciprocal: bool,
    /// Distinct real roots in `(0, 1)`.
    pub roots_below_one: usize,
    /// Distinct real roots in `(1, +inf)`.
    pub roots_above_one: usize,
    /// Largest `| |z| - 1 |` over the roots other than the two real ones.
    pub max_modulus_deviation: f64,
}

impl SalemReport {
    pub fn is_salem(&self, tol: f64) -> bool {
        self.reciprocal && self.roots_below_one == 1 && self.roots_above_one == 1 && self.max_modulus_deviation <= tol
    }
}

pub fn salem_check(p: &Poly) -> SalemReport {
    let reciprocal = p.is_palindromic();
    let sturm = Sturm::new(p);
    let zero = BigRational::zero();
    let one = BigRational::one();
    let at_one = usize::from(p.sign_at_rational(&one) == 0);
    let roots_below_one = sturm.count(&zero, &one) - at_one;
    let roots_above_one = sturm.count_above(&one);
    let mut roots = complex_roots(p);
    roots.sort_by(|a, b| a.norm().total_cmp(&b.norm()));
    // the real roots off the unit circle sit at both ends of the ordering
    let skip_low = roots_below_one.min(roots.len());
    let skip_high = roots_above_one.min(roots.len() - skip_low);
    let rest = &roots[skip_low..roots.len() - skip_high];
    let max_modulus_deviation = rest.iter().map(|z| (z.norm() - 1.0).abs()).fold(0.0, f64::max);
    SalemReport { reciprocal, roots_below_one, roots_above_one, max_modulus_deviation }
}

/// Denominator of the vertex series, divided by `1 + X` when `m = 2 mod 4`.
pub fn salem_candidate(den: &Poly, m: u32) -> Poly {
    if m % 4 == 2 {
        let one_plus_x = Poly::new(vec![BigInt::one(), BigInt::one()]);
        if let Some(q) = den.div_exact(&one_plus_x) {
            return q;
        }
    }
    den.clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{closed_form_parts, Kind};

    #[test]
    fn surface_group_denominator() {
        let (_, d) = closed_form_parts(Kind::Vertices, 8, 8).unwrap();
        let r = salem_check(&d);
        assert!(r.is_salem(1e-9), "{r:?}");
    }

    #[test]
    fn double_root_at_one_fails() {
        let r = salem_check(&Poly::from_i64s(&[1, -2, 1]));
        assert!(r.reciprocal);
        assert_eq!(r.roots_below_one + r.roots_above_one, 0);
        assert!(!r.is_salem(1e-9));
    }

    #[test]
    fn hexagon_denominators_need_division() {
        for l in [4, 7] {
            let (_, d) = closed_form_parts(Kind::Vertices, l, 6).unwrap();
            let q = salem_candidate(&d, 6);
            assert_eq!(q.degree(), Some(2));
            assert!(salem_check(&q).is_salem(1e-9));
        }
    }
}
