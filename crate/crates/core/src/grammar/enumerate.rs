//! Bounded enumeration of derivable words with derivation multiplicities.

use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use super::model::WeightedGrammar;
use super::normalize::eliminate_chain_and_epsilon;
use super::GrammarError;

/// Words by degree, each with its number of derivations, sorted.
pub type WordCounts = BTreeMap<u32, Vec<(Vec<String>, u64)>>;

type Bag = Rc<Vec<(Vec<u32>, u64)>>;

struct Enumerator {
    rules: Vec<Vec<(u32, Vec<usize>, Vec<Vec<u32>>)>>,
    memo: HashMap<(usize, u32), Bag>,
}

impl Enumerator {
    fn words(&mut self, a: usize, d: u32) -> Bag {
        if let Some(b) = self.memo.get(&(a, d)) {
            return b.clone();
        }
        let mut acc: HashMap<Vec<u32>, u64> = HashMap::new();
        let rules = self.rules[a].clone();
        for (deg, body, segs) in &rules {
            if *deg > d || (body.is_empty() && *deg != d) {
                continue;
            }
            // partial words after each body symbol
            let mut partial: Vec<(Vec<u32>, u64, u32)> = vec![(segs[0].clone(), 1, 0)];
            for (k, &b) in body.iter().enumerate() {
                let mut next = Vec::new();
                let left = body.len() - k - 1;
                for (w, mult, used) in &partial {
                    let budget = d - deg - used;
                    // every remaining body symbol needs degree at least 1
                    for e in 1..=budget.saturating_sub(left as u32) {
                        if k == body.len() - 1 && e != budget {
                            continue;
                        }
                        let sub = self.words(b, e);
                        for (sw, sm) in sub.iter() {
                            let mut nw = w.clone();
                            nw.extend_from_slice(sw);
                            nw.extend_from_slice(&segs[k + 1]);
                            next.push((nw, mult * sm, used + e));
                        }
                    }
                }
                partial = next;
            }
            for (w, mult, used) in partial {
                if used + deg == d {
                    *acc.entry(w).or_default() += mult;
                }
            }
        }
        let mut out: Vec<(Vec<u32>, u64)> = acc.into_iter().collect();
        out.sort();
        let bag = Rc::new(out);
        self.memo.insert((a, d), bag.clone());
        bag
    }
}

/// All words of degree `0..=n_max` derivable from the axiom, using the rule
/// payloads as terminal letters.
pub fn enumerate_words(g: &WeightedGrammar, n_max: u32) -> Result<WordCounts, GrammarError> {
    if !g.has_payloads() {
        return Err(GrammarError::MissingPayload);
    }
    let norm = eliminate_chain_and_epsilon(g)?;
    let ng = &norm.grammar;
    let mut letters: Vec<String> = Vec::new();
    let mut intern: HashMap<String, u32> = HashMap::new();
    let idx = ng.index();
    let mut rules = vec![Vec::new(); ng.nonterminals.len()];
    for r in &ng.rules {
        let segs: Vec<Vec<u32>> = r
            .payload
            .as_ref()
            .expect("payloads survive normalization")
            .iter()
            .map(|seg| {
                seg.iter()
                    .map(|l| {
                        *intern.entry(l.clone()).or_insert_with(|| {
                            letters.push(l.clone());
                            (letters.len() - 1) as u32
                        })
                    })
                    .collect()
            })
            .collect();
        if r.degree == 0 && r.body.len() < 2 {
            return Err(GrammarError::ImproperSystem(format!("degree-0 rule for {}", r.head)));
        }
        let body = r.body.iter().map(|b| idx[b.as_str()]).collect();
        rules[idx[r.head.as_str()]].push((r.degree, body, segs));
    }
    let mut en = Enumerator { rules, memo: HashMap::new() };
    let axiom = idx[ng.axiom.as_str()];
    let mut out = WordCounts::new();
    let eps = norm.axiom_constant();
    if eps > 0.into() {
        let m: u64 = (&eps).try_into().map_err(|_| GrammarError::Invalid("multiplicity overflow".into()))?;
        out.insert(0, vec![(Vec::new(), m)]);
    }
    for d in 1..=n_max {
        let bag = en.words(axiom, d);
        if bag.is_empty() {
            continue;
        }
        let mut ws: Vec<(Vec<String>, u64)> =
            bag.iter().map(|(w, m)| (w.iter().map(|&i| letters[i as usize].clone()).collect(), *m)).collect();
        ws.sort();
        out.insert(d, ws);
    }
    Ok(out)
}
