//! Closed-form growth series as printed in the literature.

use num_bigint::BigInt;

use super::{CatalogError, Kind};
use crate::series::{ratfunc_reduce, Poly, RatFunc};

fn poly(coeffs: Vec<i64>) -> Poly {
    Poly::new(coeffs.into_iter().map(BigInt::from).collect())
}

/// Numerator and denominator of `F` before any cancellation.
fn vertex_parts(l: u32, m: u32) -> (Vec<i64>, Vec<i64>) {
    let l = l as i64;
    if m.is_multiple_of(2) {
        let w = (m / 2) as usize;
        let mut num = vec![2; w + 1];
        let mut den = vec![-(l - 2); w + 1];
        num[0] = 1;
        num[w] = 1;
        den[0] = 1;
        den[w] = 1;
        (num, den)
    } else {
        let w = ((m - 1) / 2) as usize;
        let top = (m - 1) as usize;
        let mut num = vec![2; top + 1];
        let mut den = vec![-(l - 2); top + 1];
        num[0] = 1;
        num[w] = 4;
        num[top] = 1;
        den[0] = 1;
        den[w] = -(l - 4);
        den[top] = 1;
        (num, den)
    }
}

/// `(numerator, denominator)` exactly as printed, unreduced.
pub fn closed_form_parts(kind: Kind, l: u32, m: u32) -> Result<(Poly, Poly), CatalogError> {
    crate::tessellation::check_parameters(l, m)?;
    let li = l as i64;
    match kind {
        Kind::Vertices => {
            let (n, d) = vertex_parts(l, m);
            Ok((poly(n), poly(d)))
        }
        Kind::Geodesics => {
            let (mut n, mut d) = vertex_parts(l, m);
            let top = n.len() - 1;
            for v in [&mut n, &mut d] {
                v[top] += 1;
                v[top - 1] -= 1;
            }
            Ok((poly(n), poly(d)))
        }
        Kind::Pairs => {
            if m < 5 && m % 2 == 1 {
                return Err(CatalogError::Degenerate { l, m });
            }
            let (sum_top, den) = if m.is_multiple_of(2) {
                let w = (m / 2) as usize;
                // 1 - (l-2)(X + ... + X^{w-1}) + X^w + X^{w-1}(X - 1)(2X^{w-1} - 3)
                let mut d = vec![-(li - 2); w + 1];
                d[0] = 1;
                d[w] = 1;
                let base = poly(d);
                let mut tail = vec![0; w];
                tail[w - 1] = 1;
                let mut twice = vec![0; w];
                twice[0] = -3;
                twice[w - 1] += 2;
                let extra = &(&poly(tail) * &poly(vec![-1, 1])) * &poly(twice);
                (w - 1, &base + &extra)
            } else {
                let w = ((m - 1) / 2) as usize;
                let top = (m - 1) as usize;
                // 1 - (l-2)X - ... - (l-4)X^{w-1} - ... - (l-2)X^{m-2} + X^{m-1}
                //   - X^{m-1}(1 - X)(3 - 4X^w + 2X^{m-2})
                let mut d = vec![-(li - 2); top + 1];
                d[0] = 1;
                d[w - 1] = -(li - 4);
                d[top] = 1;
                let base = poly(d);
                let mut inner = vec![0; top];
                inner[0] = 3;
                inner[w] -= 4;
                inner[top - 1] += 2;
                let extra = &(&Poly::monomial(1, top) * &poly(vec![1, -1])) * &poly(inner);
                (top - 1, &base - &extra)
            };
            let mut s = vec![0; sum_top + 1];
            s[1..].fill(li);
            let num = &den + &poly(s);
            Ok((num, den))
        }
        Kind::Holly => Err(CatalogError::NoClosedForm(kind)),
    }
}

/// The printed closed form, reduced.
pub fn closed_form(kind: Kind, l: u32, m: u32) -> Result<RatFunc, CatalogError> {
    let (n, d) = closed_form_parts(kind, l, m)?;
    Ok(ratfunc_reduce(n, d)?)
}

/// Growth series of the surface group of genus `g` with its standard
/// generators: `F` of `X(4g, 4g)`.
pub fn cannon_wagreich(g: u32) -> Result<RatFunc, CatalogError> {
    if g < 2 {
        return Err(CatalogError::Genus(g));
    }
    let w = (2 * g) as usize;
    let mut num = vec![2i64; w + 1];
    let mut den = vec![-(4 * g as i64 - 2); w + 1];
    num[0] = 1;
    num[w] = 1;
    den[0] = 1;
    den[w] = 1;
    Ok(ratfunc_reduce(poly(num), poly(den))?)
}
