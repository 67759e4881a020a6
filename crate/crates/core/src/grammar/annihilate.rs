//! Annihilating polynomial of the axiom series by resultant elimination.

use num_bigint::BigInt;
use num_traits::Zero;

use super::system::PolySystem;
use crate::series::det::determinant;
use crate::series::mpoly::MPoly;
use crate::series::{BiPoly, Poly};

/// Resultant of `p` and `q` with respect to variable `var`.
fn resultant_in(p: &MPoly, q: &MPoly, var: usize) -> MPoly {
    let a = p.coeffs_in(var);
    let b = q.coeffs_in(var);
    let (da, db) = (a.len() - 1, b.len() - 1);
    let n = da + db;
    let nv = p.nvars().max(q.nvars());
    let zero = MPoly::constant(nv, BigInt::from(0));
    let mut rows = Vec::with_capacity(n);
    for i in 0..db {
        let mut row = vec![zero.clone(); n];
        for (k, c) in a.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..da {
        let mut row = vec![zero.clone(); n];
        for (k, c) in b.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    determinant(rows)
}

/// `e` with `var` replaced by the root of the linear `pivot = a var + b`,
/// scaled by `a^k`; `None` past `budget` terms.
fn substitute_linear(pivot: &MPoly, e: &MPoly, var: usize, budget: usize) -> Option<MPoly> {
    let ab = pivot.coeffs_in(var);
    let (b, a) = (&ab[0], &ab[1]);
    let nb = b.neg();
    let c = e.coeffs_in(var);
    // Horner in (-b) / a, cleared of denominators
    let mut acc = c.last()?.clone();
    let mut apow = MPoly::one();
    for cj in c.iter().rev().skip(1) {
        apow = apow.mul(a);
        acc = acc.mul(&nb).add(&cj.mul(&apow));
        if acc.term_count() > budget {
            return None;
        }
    }
    Some(acc)
}

/// Polynomial `P(X, Y)` with `P(X, f(X)) = 0` for the axiom series `f`,
/// or `None` when an intermediate polynomial exceeds `budget` terms.
pub fn annihilating_polynomial(sys: &PolySystem, budget: usize) -> Option<BiPoly> {
    let sys = sys.trimmed();
    let n = sys.var_count();
    let nv = n + 1;
    let mut eqs: Vec<MPoly> = sys
        .equations
        .iter()
        .enumerate()
        .map(|(u, eq)| {
            let mut e = MPoly::var(u + 1, nv);
            for m in eq {
                let mut exps = vec![0u32; nv];
                exps[0] = m.xdeg;
                for &v in &m.vars {
                    exps[v + 1] += 1;
                }
                e = e.sub(&MPoly::term(exps, m.coeff.clone()));
            }
            e.primitive()
        })
        .collect();
    let mut pending: Vec<usize> = (0..n).filter(|&v| v != sys.axiom).collect();
    while !pending.is_empty() {
        // eliminate the variable with the cheapest pivot equation
        let (pos, var, piv) = pending
            .iter()
            .enumerate()
            .filter_map(|(pos, &v)| {
                eqs.iter()
                    .enumerate()
                    .filter(|(_, e)| e.mentions(v + 1))
                    .min_by_key(|(_, e)| (e.degree_in(v + 1), e.term_count()))
                    .map(|(i, e)| (pos, v, i, e.degree_in(v + 1), e.term_count()))
            })
            .min_by_key(|t| (t.3, t.4))
            .map(|(pos, v, i, _, _)| (pos, v, i))
            .or_else(|| Some((0, pending[0], usize::MAX)))?;
        pending.swap_remove(pos);
        if piv == usize::MAX {
            continue;
        }
        let pivot = eqs.swap_remove(piv);
        for e in eqs.iter_mut() {
            if e.mentions(var + 1) {
                if pivot.term_count().saturating_mul(e.term_count()) > budget.saturating_mul(64) {
                    return None;
                }
                let r = if pivot.degree_in(var + 1) == Some(1) {
                    substitute_linear(&pivot, e, var + 1, budget)?
                } else {
                    resultant_in(&pivot, e, var + 1)
                }
                .primitive();
                if r.term_count() > budget {
                    return None;
                }
                *e = r;
            }
        }
        eqs.retain(|e| !e.is_zero());
    }
    let ax = sys.axiom + 1;
    let eq = eqs.into_iter().filter(|e| e.mentions(ax)).min_by_key(|e| (e.degree_in(ax), e.term_count()))?;
    let dy = eq.degree_in(ax)? as usize;
    let dx = eq.degree_in(0).unwrap_or(0) as usize;
    let mut grid = vec![vec![BigInt::from(0); dx + 1]; dy + 1];
    for (exps, c) in eq.terms() {
        let get = |i: usize| exps.get(i).copied().unwrap_or(0) as usize;
        grid[get(ax)][get(0)] += c;
    }
    let p = BiPoly::new(grid.into_iter().map(Poly::new).collect());
    Some(p.normalized())
}

/// Whether `p(X, f(X))` vanishes to order `n` for the given coefficients.
pub fn annihilates(p: &BiPoly, f: &[BigInt]) -> bool {
    let n = f.len().saturating_sub(1);
    p.eval_series(f, n).iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::{algebraic_system, system_coeffs, WeightedGrammar};
    use crate::series::discriminant;

    #[test]
    fn catalan() {
        let mut g = WeightedGrammar::parse_compact("S -> eps | ( S ) S").unwrap();
        g.rules[1].degree = 1;
        g.letters_per_degree = 2;
        let sys = algebraic_system(&g).unwrap();
        let p = annihilating_polynomial(&sys, 1000).unwrap();
        assert_eq!(p, BiPoly::from_grid(&[&[1], &[-1], &[0, 1]]));
        let d = discriminant(&p).unwrap();
        assert_eq!(d.primitive(), Poly::from_i64s(&[1, -4]).primitive());
    }

    #[test]
    fn linear() {
        let g = WeightedGrammar::parse_compact("S -> a | a a S").unwrap();
        let sys = algebraic_system(&g).unwrap();
        let p = annihilating_polynomial(&sys, 1000).unwrap();
        assert_eq!(p, BiPoly::from_grid(&[&[0, -1], &[1, 0, -1]]));
    }

    #[test]
    fn two_variables() {
        // Motzkin-like pair of nonterminals
        let g = WeightedGrammar::parse_compact("S -> a T | b\nT -> S S | c").unwrap();
        let sys = algebraic_system(&g).unwrap();
        let p = annihilating_polynomial(&sys, 1000).unwrap();
        let f = system_coeffs(&sys, 20).unwrap();
        assert!(annihilates(&p, &f));
        assert_eq!(p.degree_y(), Some(2));
    }
}
