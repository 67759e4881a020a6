//! Removal of empty-word and chain rules.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::model::{Rule, WeightedGrammar};
use super::GrammarError;

/// Grammar generating every non-empty word of the input with the same
/// multiplicity, plus the number of empty derivations of each nonterminal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub grammar: WeightedGrammar,
    pub empty_counts: BTreeMap<String, BigInt>,
}

impl Normalized {
    pub fn axiom_constant(&self) -> BigInt {
        self.empty_counts.get(&self.grammar.axiom).cloned().unwrap_or_default()
    }
}

/// Number of derivations of the empty word from each nonterminal.
pub fn empty_counts(g: &WeightedGrammar) -> Result<Vec<BigInt>, GrammarError> {
    let idx = g.index();
    let n = g.nonterminals.len();
    let zero_rules: Vec<(usize, Vec<usize>)> = g
        .rules
        .iter()
        .filter(|r| r.degree == 0)
        .map(|r| (idx[r.head.as_str()], r.body.iter().map(|b| idx[b.as_str()]).collect()))
        .collect();
    // which nonterminals derive the empty word at all
    let mut nullable = vec![false; n];
    loop {
        let mut changed = false;
        for (h, body) in &zero_rules {
            if !nullable[*h] && body.iter().all(|&b| nullable[b]) {
                nullable[*h] = true;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    // evaluate in dependency order; a cycle among nullable degree-0 rules
    // means infinitely many empty derivations
    let mut state = vec![0u8; n];
    let mut value = vec![BigInt::zero(); n];
    fn visit(
        a: usize,
        rules: &[(usize, Vec<usize>)],
        nullable: &[bool],
        state: &mut [u8],
        value: &mut [BigInt],
        names: &[String],
    ) -> Result<(), GrammarError> {
        match state[a] {
            2 => return Ok(()),
            1 => return Err(GrammarError::EpsilonCycle(names[a].clone())),
            _ => {}
        }
        state[a] = 1;
        let mut total = BigInt::zero();
        for (h, body) in rules.iter().filter(|(h, _)| *h == a) {
            let _ = h;
            if !body.iter().all(|&b| nullable[b]) {
                continue;
            }
            let mut prod = BigInt::from(1);
            for &b in body {
                visit(b, rules, nullable, state, value, names)?;
                prod *= &value[b];
            }
            total += prod;
        }
        value[a] = total;
        state[a] = 2;
        Ok(())
    }
    for a in 0..n {
        if nullable[a] {
            visit(a, &zero_rules, &nullable, &mut state, &mut value, &g.nonterminals)?;
        }
    }
    Ok(value)
}

fn merge_segments(segments: &[Vec<String>], erased: &[bool]) -> Vec<Vec<String>> {
    let mut out = vec![segments[0].clone()];
    for (i, seg) in segments[1..].iter().enumerate() {
        if erased[i] {
            out.last_mut().unwrap().extend(seg.iter().cloned());
        } else {
            out.push(seg.clone());
        }
    }
    out
}

/// Removes empty-word rules (tracking empty derivations as constants) and
/// inlines chain rules `A -> B` of degree 0.
pub fn eliminate_chain_and_epsilon(g: &WeightedGrammar) -> Result<Normalized, GrammarError> {
    g.validate()?;
    let idx = g.index();
    let eps = empty_counts(g)?;
    // erase nullable body occurrences in every combination
    let mut rules: Vec<Rule> = Vec::new();
    for r in &g.rules {
        let nullable_pos: Vec<usize> = (0..r.body.len()).filter(|&i| !eps[idx[r.body[i].as_str()]].is_zero()).collect();
        let combos = 1u64 << nullable_pos.len().min(20);
        if nullable_pos.len() > 20 {
            return Err(GrammarError::Invalid("too many nullable body symbols".into()));
        }
        for mask in 0..combos {
            let mut erased = vec![false; r.body.len()];
            let mut mult = BigInt::from(1);
            for (bit, &pos) in nullable_pos.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    erased[pos] = true;
                    mult *= &eps[idx[r.body[pos].as_str()]];
                }
            }
            let body: Vec<String> = r.body.iter().zip(&erased).filter(|(_, &e)| !e).map(|(b, _)| b.clone()).collect();
            if r.degree == 0 && body.is_empty() {
                continue;
            }
            let payload = r.payload.as_ref().map(|p| merge_segments(p, &erased));
            let copies = mult
                .to_u64()
                .filter(|&c| c <= 1 << 16)
                .ok_or_else(|| GrammarError::Invalid("empty-word multiplicity too large".into()))?;
            for _ in 0..copies {
                rules.push(Rule {
                    head: r.head.clone(),
                    degree: r.degree,
                    body: body.clone(),
                    payload: payload.clone(),
                });
            }
        }
    }
    let rules = inline_chains(&g.nonterminals, rules)?;
    let grammar = WeightedGrammar {
        nonterminals: g.nonterminals.clone(),
        axiom: g.axiom.clone(),
        rules,
        letters_per_degree: g.letters_per_degree,
    };
    let empty_counts =
        g.nonterminals.iter().zip(eps).filter(|(_, e)| !e.is_zero()).map(|(n, e)| (n.clone(), e)).collect();
    Ok(Normalized { grammar, empty_counts })
}

fn is_chain(r: &Rule) -> bool {
    r.degree == 0 && r.body.len() == 1
}

/// Replaces each chain rule `A -> B` by copies of `B`'s non-chain rules.
pub(crate) fn inline_chains(names: &[String], rules: Vec<Rule>) -> Result<Vec<Rule>, GrammarError> {
    if !rules.iter().any(is_chain) {
        return Ok(rules);
    }
    let idx: std::collections::HashMap<&str, usize> = names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
    let n = names.len();
    let mut chains: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut direct: Vec<Vec<Rule>> = vec![Vec::new(); n];
    for r in rules {
        let h = idx[r.head.as_str()];
        if is_chain(&r) {
            chains[h].push(idx[r.body[0].as_str()]);
        } else {
            direct[h].push(r);
        }
    }
    let mut state = vec![0u8; n];
    let mut resolved: Vec<Option<Vec<Rule>>> = vec![None; n];
    fn resolve(
        a: usize,
        chains: &[Vec<usize>],
        direct: &[Vec<Rule>],
        state: &mut [u8],
        resolved: &mut [Option<Vec<Rule>>],
        names: &[String],
    ) -> Result<(), GrammarError> {
        match state[a] {
            2 => return Ok(()),
            1 => return Err(GrammarError::ChainCycle(names[a].clone())),
            _ => {}
        }
        state[a] = 1;
        let mut out = direct[a].clone();
        for &b in &chains[a] {
            resolve(b, chains, direct, state, resolved, names)?;
            for r in resolved[b].as_ref().unwrap() {
                let mut r = r.clone();
                r.head = names[a].clone();
                out.push(r);
            }
        }
        resolved[a] = Some(out);
        state[a] = 2;
        Ok(())
    }
    for a in 0..n {
        resolve(a, &chains, &direct, &mut state, &mut resolved, names)?;
    }
    Ok(resolved.into_iter().flat_map(Option::unwrap).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_rule_becomes_constant() {
        let g = WeightedGrammar::parse_compact("S -> eps | a S").unwrap();
        let n = eliminate_chain_and_epsilon(&g).unwrap();
        assert_eq!(n.axiom_constant(), BigInt::from(1));
        let mut rules: Vec<(u32, usize)> = n.grammar.rules.iter().map(|r| (r.degree, r.body.len())).collect();
        rules.sort();
        assert_eq!(rules, vec![(1, 0), (1, 1)]);
    }

    #[test]
    fn chain_rule_inlined() {
        let g = WeightedGrammar::parse_compact("S -> A | b S\nA -> a | a A").unwrap();
        let n = eliminate_chain_and_epsilon(&g).unwrap();
        assert!(n.grammar.rules.iter().all(|r| !is_chain(r)));
        assert_eq!(n.grammar.rules.iter().filter(|r| r.head == "S").count(), 3);
    }

    #[test]
    fn clean_grammar_unchanged() {
        let g = WeightedGrammar::parse_compact("S -> a | a a S").unwrap();
        let n = eliminate_chain_and_epsilon(&g).unwrap();
        assert_eq!(n.grammar, g);
        assert!(n.empty_counts.is_empty());
    }

    #[test]
    fn cycles_are_errors() {
        let g = WeightedGrammar::parse_compact("S -> A | a\nA -> S").unwrap();
        assert_eq!(eliminate_chain_and_epsilon(&g), Err(GrammarError::ChainCycle("S".into())));
        let g = WeightedGrammar::parse_compact("S -> eps | S").unwrap();
        assert!(matches!(eliminate_chain_and_epsilon(&g), Err(GrammarError::EpsilonCycle(_))));
    }

    #[test]
    fn ambiguous_empty_words_duplicate_rules() {
        // A derives the empty word twice, so "b" comes from S -> b A in two ways
        let g = WeightedGrammar::parse_compact("S -> b A\nA -> eps | eps").unwrap();
        let n = eliminate_chain_and_epsilon(&g).unwrap();
        assert_eq!(n.empty_counts["A"], BigInt::from(2));
        assert_eq!(n.grammar.rules.iter().filter(|r| r.head == "S" && r.body.is_empty()).count(), 2);
    }
}
