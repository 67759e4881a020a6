//! Grammars for vertices, geodesics, pairs of geodesics and holly trees.

use std::collections::{BTreeSet, VecDeque};

use super::automaton::Automaton;
use super::CatalogError;
use crate::grammar::{Rule, WeightedGrammar};
use crate::tessellation::ConeType;

fn up(i: u16) -> String {
    format!("e{i}")
}

fn down(i: u16) -> String {
    format!("e{i}^-1")
}

fn automaton(l: u32, m: u32) -> Result<Automaton, CatalogError> {
    crate::tessellation::check_parameters(l, m)?;
    Automaton::new(l, m).ok_or(CatalogError::Degenerate { l, m })
}

fn hyperbolic(l: u32, m: u32) -> Result<Automaton, CatalogError> {
    let a = automaton(l, m)?;
    if (l - 2) * (m - 2) <= 4 {
        return Err(crate::tessellation::TessellationError::NotHyperbolic { l, m }.into());
    }
    Ok(a)
}

fn linear_grammar(a: &Automaton, prefix: &str, with_right_tops: bool) -> WeightedGrammar {
    let name = |t: ConeType| format!("{prefix}_{t}");
    let types = a.types();
    let mut rules = Vec::new();
    for &t in &types {
        rules.push(Rule::new(name(t), 0, vec![]).with_payload(vec![vec![]]));
        for s in a.succs(t) {
            if s.top_from_right && !with_right_tops {
                continue;
            }
            rules.push(Rule::new(name(t), 1, vec![name(s.ctype)]).with_payload(vec![vec![up(s.index)], vec![]]));
        }
    }
    WeightedGrammar::new(types.iter().map(|&t| name(t)).collect(), name(ConeType::Origin), rules)
}

/// Right-linear grammar of leftmost geodesic words, one per vertex.
pub fn vertex_grammar(l: u32, m: u32) -> Result<WeightedGrammar, CatalogError> {
    Ok(linear_grammar(&automaton(l, m)?, "X", false))
}

/// Right-linear grammar of all geodesic words from the base point.
pub fn geodesic_grammar(l: u32, m: u32) -> Result<WeightedGrammar, CatalogError> {
    Ok(linear_grammar(&automaton(l, m)?, "G", true))
}

/// Which cells at the base point start a split of the two geodesics.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OriginCells {
    /// All `l` cells around the base point.
    All,
    /// Only the `l - 2` cells between successors `(i, i + 1)`, `i <= l - 2`.
    Printed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum PairState {
    Diag(ConeType),
    /// Geodesics one step below the top of a cell, on its left and right
    /// sides; `gamma_left` tells which one is on the left.
    Split {
        left: ConeType,
        right: ConeType,
        gamma_left: bool,
    },
}

impl PairState {
    fn name(self) -> String {
        match self {
            PairState::Diag(t) => format!("D_{t}"),
            PairState::Split { left, right, gamma_left } => {
                format!("S_{left}_{right}_{}", if gamma_left { "gl" } else { "gr" })
            }
        }
    }
}

fn pair_letters(left: &[u16], right: &[u16], gamma_left: bool) -> Vec<String> {
    left.iter()
        .zip(right)
        .map(|(&a, &b)| {
            let (g, d) = if gamma_left { (a, b) } else { (b, a) };
            format!("({},{})", up(g), up(d))
        })
        .collect()
}

/// Regular grammar of ordered pairs of geodesics from the base point with a
/// common endpoint, degree = common length.
pub fn pair_grammar(l: u32, m: u32) -> Result<WeightedGrammar, CatalogError> {
    pair_grammar_with(l, m, OriginCells::All)
}

pub fn pair_grammar_with(l: u32, m: u32, origin: OriginCells) -> Result<WeightedGrammar, CatalogError> {
    let a = hyperbolic(l, m)?;
    let h = a.top as u32;
    let top = ConeType::Left(a.top);
    let mut rules = Vec::new();
    let mut seen = BTreeSet::new();
    let start = PairState::Diag(ConeType::Origin);
    let mut queue = VecDeque::from([start]);
    let emit = |rules: &mut Vec<Rule>,
                queue: &mut VecDeque<PairState>,
                head: PairState,
                letters: Vec<String>,
                next: PairState| {
        rules.push(Rule::new(head.name(), letters.len() as u32, vec![next.name()]).with_payload(vec![letters, vec![]]));
        queue.push_back(next);
    };
    while let Some(st) = queue.pop_front() {
        if !seen.insert(st) {
            continue;
        }
        match st {
            PairState::Diag(t) => {
                rules.push(Rule::new(st.name(), 0, vec![]).with_payload(vec![vec![]]));
                for s in a.succs(t) {
                    let letters = pair_letters(&[s.index], &[s.index], true);
                    emit(&mut rules, &mut queue, st, letters, PairState::Diag(s.ctype));
                }
                let mut corners = a.cell_corners(t);
                if t == ConeType::Origin && origin == OriginCells::Printed {
                    corners.retain(|&(i, _)| i as u32 <= l - 2);
                }
                for (i, j) in corners {
                    let (mut left, tl) = a.rightmost_chain(a.succ(t, i), h - 2);
                    left.insert(0, i);
                    let (mut right, tr) = a.leftmost_chain(a.succ(t, j), h - 2);
                    right.insert(0, j);
                    for gamma_left in [true, false] {
                        let next = PairState::Split { left: tl, right: tr, gamma_left };
                        emit(&mut rules, &mut queue, st, pair_letters(&left, &right, gamma_left), next);
                    }
                }
            }
            PairState::Split { left, right, gamma_left } => {
                let kl = a.succ_count(left);
                debug_assert_eq!(a.succ(left, kl), top);
                debug_assert_eq!(a.succ(right, 1), top);
                // both geodesics close the cell at its top
                emit(&mut rules, &mut queue, st, pair_letters(&[kl], &[1], gamma_left), PairState::Diag(top));
                // the left one turns below the top, the right one passes through it
                let (mut l1, tl) = a.rightmost_chain(a.succ(left, kl - 1), h - 2);
                l1.insert(0, kl - 1);
                let (mut r1, tr) = a.leftmost_chain(top, h - 2);
                r1.insert(0, 1);
                let next = PairState::Split { left: tl, right: tr, gamma_left };
                emit(&mut rules, &mut queue, st, pair_letters(&l1, &r1, gamma_left), next);
                // the left one passes through the top, the right one turns
                let (mut l2, tl) = a.rightmost_chain(top, h - 2);
                l2.insert(0, kl);
                let (mut r2, tr) = a.leftmost_chain(a.succ(right, 2), h - 2);
                r2.insert(0, 2);
                let next = PairState::Split { left: tl, right: tr, gamma_left };
                emit(&mut rules, &mut queue, st, pair_letters(&l2, &r2, gamma_left), next);
            }
        }
    }
    let nonterminals: Vec<String> = seen.iter().map(|s| s.name()).collect();
    Ok(WeightedGrammar::new(nonterminals, start.name(), rules))
}

/// Context-free grammar of holly trees at the base point; degree is half
/// the word length.
pub fn holly_grammar(l: u32, m: u32) -> Result<WeightedGrammar, CatalogError> {
    if m % 2 == 1 {
        return Err(crate::tessellation::TessellationError::OddHolly { m }.into());
    }
    let a = hyperbolic(l, m)?;
    let w = m / 2;
    let tree = |t: ConeType| format!("L_{t}");
    let starting = |t: ConeType, e: u16| format!("L_{t}_e{e}");
    let avoiding = |t: ConeType, e: u16| format!("L_{t}_not{e}");
    let types = a.types();
    let mut nonterminals = Vec::new();
    let mut rules = Vec::new();
    for &t in &types {
        let succs = a.succs(t);
        let k = succs.len() as u16;
        nonterminals.push(tree(t));
        for e in 1..=k {
            nonterminals.push(starting(t, e));
            nonterminals.push(avoiding(t, e));
            rules.push(Rule::new(tree(t), 0, vec![starting(t, e)]).with_payload(vec![vec![], vec![]]));
            for f in (1..=k).filter(|&f| f != e) {
                rules.push(Rule::new(avoiding(t, e), 0, vec![starting(t, f)]).with_payload(vec![vec![], vec![]]));
            }
        }
        // conjugates e h e^-1 of a tree h at a successor
        for s in &succs {
            let head = starting(t, s.index);
            let inner = tree(s.ctype);
            rules.push(
                Rule::new(head.clone(), 1, vec![inner.clone()])
                    .with_payload(vec![vec![up(s.index)], vec![down(s.index)]]),
            );
            rules.push(Rule::new(head, 1, vec![inner, avoiding(t, s.index)]).with_payload(vec![
                vec![up(s.index)],
                vec![down(s.index)],
                vec![],
            ]));
        }
        // cell perimeters, both orientations
        for (i, j) in a.cell_corners(t) {
            let (left_up, _) = a.rightmost_chain(a.succ(t, i), w - 1);
            let mut ccw: Vec<String> = vec![up(i)];
            ccw.extend(left_up.iter().map(|&x| up(x)));
            ccw.extend(std::iter::repeat_n(down(1), (w - 1) as usize));
            ccw.push(down(j));
            let mut cw: Vec<String> = vec![up(j)];
            cw.extend(std::iter::repeat_n(up(1), (w - 1) as usize));
            cw.extend(left_up.iter().rev().map(|&x| down(x)));
            cw.push(down(i));
            for (first, last, word) in [(i, j, ccw), (j, i, cw)] {
                rules.push(Rule::new(starting(t, first), w, vec![]).with_payload(vec![word.clone()]));
                rules.push(Rule::new(starting(t, first), w, vec![avoiding(t, last)]).with_payload(vec![word, vec![]]));
            }
        }
    }
    let mut g = WeightedGrammar::new(nonterminals, tree(ConeType::Origin), rules);
    g.letters_per_degree = 2;
    Ok(g.trimmed())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::{algebraic_system, enumerate_words, linear_series, system_coeffs};
    use crate::series::series_expand;
    use num_bigint::BigInt;

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|x| x.try_into().unwrap()).collect()
    }

    #[test]
    fn vertex_series() {
        let f = linear_series(&vertex_grammar(8, 8).unwrap()).unwrap();
        assert_eq!(ints(&series_expand(&f, 4)), [1, 8, 56, 392, 2736]);
        let f = linear_series(&vertex_grammar(4, 4).unwrap()).unwrap();
        assert_eq!(ints(&series_expand(&f, 5)), [1, 4, 8, 12, 16, 20]);
        let f = linear_series(&vertex_grammar(5, 5).unwrap()).unwrap();
        assert_eq!(ints(&series_expand(&f, 2)), [1, 5, 20]);
    }

    #[test]
    fn geodesic_series() {
        let f = linear_series(&geodesic_grammar(8, 8).unwrap()).unwrap();
        assert_eq!(ints(&series_expand(&f, 4)), [1, 8, 56, 392, 2744]);
        let f = linear_series(&geodesic_grammar(4, 4).unwrap()).unwrap();
        assert_eq!(ints(&series_expand(&f, 4)), [1, 4, 12, 28, 60]);
    }

    #[test]
    fn pair_series() {
        let f = linear_series(&pair_grammar(8, 8).unwrap()).unwrap();
        assert_eq!(ints(&series_expand(&f, 4)), [1, 8, 56, 392, 2760]);
    }

    #[test]
    fn holly_series() {
        let g = holly_grammar(8, 8).unwrap();
        let c = system_coeffs(&algebraic_system(&g).unwrap(), 5).unwrap();
        assert_eq!(ints(&c), [0, 0, 0, 0, 16, 96]);
        let g = holly_grammar(4, 6).unwrap();
        let c = system_coeffs(&algebraic_system(&g).unwrap(), 3).unwrap();
        assert_eq!(ints(&c), [0, 0, 0, 8]);
    }

    #[test]
    fn holly_words_are_unique() {
        let g = holly_grammar(8, 8).unwrap();
        let w = enumerate_words(&g, 5).unwrap();
        assert_eq!(w[&4].len(), 16);
        assert!(w.values().flatten().all(|(_, m)| *m == 1));
    }

    #[test]
    fn invalid_keys() {
        assert!(matches!(pair_grammar(4, 4), Err(CatalogError::Tessellation(_))));
        assert!(matches!(holly_grammar(5, 5), Err(CatalogError::Tessellation(_))));
        assert!(matches!(vertex_grammar(3, 8), Err(CatalogError::Degenerate { .. })));
    }
}
