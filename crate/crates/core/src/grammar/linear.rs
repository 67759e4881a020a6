//! Rational growth series of right-linear grammars.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::model::WeightedGrammar;
use super::normalize::eliminate_chain_and_epsilon;
use super::GrammarError;
use crate::series::{ratfunc_reduce, Poly, RatFunc};

type Row = BTreeMap<usize, Poly>;

fn row_gcd(row: &Row) -> Poly {
    let mut g = Poly::zero();
    for p in row.values() {
        g = g.gcd(p);
        if g.degree() == Some(0) && g.content() == BigInt::from(1) {
            break;
        }
    }
    g
}

fn normalize_row(row: &mut Row) {
    let mut g = row_gcd(row);
    if g.is_zero() {
        return;
    }
    if g.leading() < BigInt::zero() {
        g = -&g;
    }
    if g.degree() == Some(0) && g.constant_term() == BigInt::from(1) {
        return;
    }
    for p in row.values_mut() {
        *p = p.div_exact(&g).expect("row gcd divides every entry");
    }
}

/// Exact growth series of the axiom of a grammar whose rules have at most
/// one nonterminal in their body after empty-word and chain elimination.
///
/// Solves `(I - A(X)) f = b(X)` by fraction-free sparse elimination.
pub fn linear_series(g: &WeightedGrammar) -> Result<RatFunc, GrammarError> {
    let norm = eliminate_chain_and_epsilon(&g.trimmed())?;
    let eps = norm.axiom_constant();
    let g = norm.grammar.trimmed();
    if let Some(r) = g.rules.iter().find(|r| r.body.len() > 1) {
        return Err(GrammarError::NonLinear(r.head.clone()));
    }
    let idx = g.index();
    let n = g.nonterminals.len();
    let rhs = n;
    let axiom = idx[g.axiom.as_str()];
    let mut rows: Vec<Option<Row>> = (0..n)
        .map(|v| {
            let mut row = Row::new();
            row.insert(v, Poly::one());
            Some(row)
        })
        .collect();
    for r in &g.rules {
        let h = idx[r.head.as_str()];
        let row = rows[h].as_mut().unwrap();
        let (col, sign) = match r.body.first() {
            Some(b) => (idx[b.as_str()], -1),
            None => (rhs, 1),
        };
        let e = row.entry(col).or_insert_with(Poly::zero);
        *e = &*e + &Poly::monomial(sign, r.degree as usize);
    }
    for row in rows.iter_mut().flatten() {
        row.retain(|_, p| !p.is_zero());
    }
    let mut remaining: Vec<usize> = (0..n).filter(|&v| v != axiom).collect();
    while !remaining.is_empty() {
        // Markowitz-style choice: the variable occurring in the fewest rows
        let (pos, v, prow) = remaining
            .iter()
            .enumerate()
            .map(|(pos, &v)| {
                let occ: Vec<usize> =
                    (0..n).filter(|&i| rows[i].as_ref().is_some_and(|r| r.contains_key(&v))).collect();
                (pos, v, occ)
            })
            .min_by_key(|(_, _, occ)| occ.len())
            .unwrap();
        remaining.swap_remove(pos);
        if prow.is_empty() {
            continue;
        }
        let pivot_row = *prow.iter().min_by_key(|&&i| rows[i].as_ref().unwrap().len()).unwrap();
        let pr = rows[pivot_row].take().unwrap();
        let pv = pr[&v].clone();
        for &i in prow.iter().filter(|&&i| i != pivot_row) {
            let row = rows[i].take().unwrap();
            let rv = row[&v].clone();
            let mut out = Row::new();
            for (&c, p) in &row {
                if c != v {
                    out.insert(c, &pv * p);
                }
            }
            for (&c, p) in &pr {
                if c != v {
                    let e = out.entry(c).or_insert_with(Poly::zero);
                    *e = &*e - &(&rv * p);
                }
            }
            out.retain(|_, p| !p.is_zero());
            normalize_row(&mut out);
            rows[i] = Some(out);
        }
    }
    let mut rest: Vec<Row> = rows.into_iter().flatten().filter(|r| !r.is_empty()).collect();
    let pos = rest.iter().position(|r| r.contains_key(&axiom)).ok_or(GrammarError::Singular)?;
    let row = rest.swap_remove(pos);
    // anything left over reads 0 = b(X) with b nonzero
    if !rest.is_empty() {
        return Err(GrammarError::Singular);
    }
    let den = row[&axiom].clone();
    let num = row.get(&rhs).cloned().unwrap_or_else(Poly::zero);
    let num = &num + &den.scale(&eps);
    Ok(ratfunc_reduce(num, den)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::series_expand;

    #[test]
    fn odd_powers() {
        let g = WeightedGrammar::parse_compact("S -> a | a a S").unwrap();
        let f = linear_series(&g).unwrap();
        assert_eq!(f.numerator(), &Poly::from_i64s(&[0, 1]));
        assert_eq!(f.denominator(), &Poly::from_i64s(&[1, 0, -1]));
    }

    #[test]
    fn empty_language() {
        let g = WeightedGrammar::parse_compact("S -> a S").unwrap();
        let f = linear_series(&g).unwrap();
        assert!(f.numerator().is_zero());
    }

    #[test]
    fn empty_word_and_chains() {
        // all words over {a, b}
        let g = WeightedGrammar::parse_compact("S -> eps | T\nT -> a S | b S").unwrap();
        let f = linear_series(&g).unwrap();
        assert_eq!(f.numerator(), &Poly::one());
        assert_eq!(f.denominator(), &Poly::from_i64s(&[1, -2]));
    }

    #[test]
    fn coupled_states() {
        // words over {a, b} without "bb"
        let g = WeightedGrammar::parse_compact("S -> eps | a S | b B\nB -> eps | a S").unwrap();
        let f = linear_series(&g).unwrap();
        let c: Vec<i64> = series_expand(&f, 6).iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(c, vec![1, 2, 3, 5, 8, 13, 21]);
    }

    #[test]
    fn nonlinear_rejected() {
        let g = WeightedGrammar::parse_compact("S -> a | S S").unwrap();
        assert_eq!(linear_series(&g), Err(GrammarError::NonLinear("S".into())));
    }
}
