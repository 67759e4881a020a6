//! Weighted grammar representation and JSON form.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::GrammarError;

fn one() -> u32 {
    1
}

fn is_one(x: &u32) -> bool {
    *x == 1
}

/// `head -> w_0 B_1 w_1 ... B_k w_k` where the terminal words `w_i` have total
/// weight `degree`. Terminal words are only materialized in the optional
/// payload (`k + 1` segments).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rule {
    pub head: String,
    pub degree: u32,
    pub body: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub payload: Option<Vec<Vec<String>>>,
}

impl Rule {
    pub fn new(head: impl Into<String>, degree: u32, body: Vec<String>) -> Rule {
        Rule { head: head.into(), degree, body, payload: None }
    }

    pub fn with_payload(mut self, segments: Vec<Vec<String>>) -> Rule {
        self.payload = Some(segments);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedGrammar {
    pub nonterminals: Vec<String>,
    pub axiom: String,
    pub rules: Vec<Rule>,
    /// Payload letters per unit of degree.
    #[serde(default = "one", skip_serializing_if = "is_one")]
    pub letters_per_degree: u32,
}

impl WeightedGrammar {
    pub fn new(nonterminals: Vec<String>, axiom: impl Into<String>, rules: Vec<Rule>) -> Self {
        WeightedGrammar { nonterminals, axiom: axiom.into(), rules, letters_per_degree: 1 }
    }

    /// Parses the compact text form used in tests and docs: one rule per
    /// line, `A -> a a B c | C | eps`, where lowercase tokens are terminal
    /// letters of weight 1 and capitalized tokens are nonterminals. The head
    /// of the first line is the axiom.
    pub fn parse_compact(text: &str) -> Result<Self, GrammarError> {
        let mut nonterminals: Vec<String> = Vec::new();
        let mut rules = Vec::new();
        let is_nt = |t: &str| t.chars().next().is_some_and(|c| c.is_ascii_uppercase());
        let mut lines = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let (head, rhs) =
                line.split_once("->").ok_or_else(|| GrammarError::Parse(format!("missing '->' in {line:?}")))?;
            let head = head.trim().to_string();
            if !is_nt(&head) {
                return Err(GrammarError::Parse(format!("head {head:?} is not a nonterminal")));
            }
            if !nonterminals.contains(&head) {
                nonterminals.push(head.clone());
            }
            lines.push((head, rhs.to_string()));
        }
        for (head, rhs) in lines {
            for alt in rhs.split('|') {
                let mut body = Vec::new();
                let mut segments = vec![Vec::new()];
                for tok in alt.split_whitespace().filter(|&t| t != "eps") {
                    if is_nt(tok) {
                        if !nonterminals.iter().any(|n| n == tok) {
                            nonterminals.push(tok.to_string());
                        }
                        body.push(tok.to_string());
                        segments.push(Vec::new());
                    } else {
                        segments.last_mut().unwrap().push(tok.to_string());
                    }
                }
                let degree = segments.iter().map(Vec::len).sum::<usize>() as u32;
                rules.push(Rule::new(head.clone(), degree, body).with_payload(segments));
            }
        }
        let axiom = nonterminals.first().cloned().ok_or_else(|| GrammarError::Parse("empty grammar".into()))?;
        let g = WeightedGrammar::new(nonterminals, axiom, rules);
        g.validate()?;
        Ok(g)
    }

    pub fn index(&self) -> HashMap<&str, usize> {
        self.nonterminals.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect()
    }

    pub fn has_payloads(&self) -> bool {
        self.rules.iter().all(|r| r.payload.is_some())
    }

    pub fn validate(&self) -> Result<(), GrammarError> {
        let idx = self.index();
        if idx.len() != self.nonterminals.len() {
            return Err(GrammarError::Invalid("duplicate nonterminal".into()));
        }
        if !idx.contains_key(self.axiom.as_str()) {
            return Err(GrammarError::Undeclared(self.axiom.clone()));
        }
        for r in &self.rules {
            if !idx.contains_key(r.head.as_str()) {
                return Err(GrammarError::Undeclared(r.head.clone()));
            }
            if let Some(b) = r.body.iter().find(|b| !idx.contains_key(b.as_str())) {
                return Err(GrammarError::Undeclared(b.clone()));
            }
            if let Some(p) = &r.payload {
                let letters: usize = p.iter().map(Vec::len).sum();
                if p.len() != r.body.len() + 1 || letters != (r.degree * self.letters_per_degree) as usize {
                    return Err(GrammarError::Invalid(format!(
                        "payload of rule {} -> {:?} does not match its degree {}",
                        r.head, r.body, r.degree
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("grammar serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, GrammarError> {
        let g: WeightedGrammar = serde_json::from_str(s).map_err(|e| GrammarError::Parse(e.to_string()))?;
        g.validate()?;
        Ok(g)
    }

    /// Rules grouped by head, in declaration order.
    pub fn rules_by_head(&self) -> BTreeMap<usize, Vec<&Rule>> {
        let idx = self.index();
        let mut out: BTreeMap<usize, Vec<&Rule>> = BTreeMap::new();
        for r in &self.rules {
            out.entry(idx[r.head.as_str()]).or_default().push(r);
        }
        out
    }

    /// Keeps only nonterminals reachable from the axiom.
    pub fn trimmed(&self) -> WeightedGrammar {
        let idx = self.index();
        let mut seen = vec![false; self.nonterminals.len()];
        let mut stack = vec![idx[self.axiom.as_str()]];
        let by_head = self.rules_by_head();
        while let Some(a) = stack.pop() {
            if std::mem::replace(&mut seen[a], true) {
                continue;
            }
            for r in by_head.get(&a).into_iter().flatten() {
                stack.extend(r.body.iter().map(|b| idx[b.as_str()]));
            }
        }
        WeightedGrammar {
            nonterminals: self
                .nonterminals
                .iter()
                .enumerate()
                .filter(|(i, _)| seen[*i])
                .map(|(_, n)| n.clone())
                .collect(),
            axiom: self.axiom.clone(),
            rules: self.rules.iter().filter(|r| seen[idx[r.head.as_str()]]).cloned().collect(),
            letters_per_degree: self.letters_per_degree,
        }
    }
}

impl std::fmt::Display for Rule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} ->", self.head)?;
        let mut words: Vec<String> = Vec::new();
        for (k, b) in self.body.iter().enumerate() {
            if let Some(seg) = self.payload.as_ref().and_then(|p| p.get(k)) {
                words.extend(seg.iter().cloned());
            }
            words.push(b.clone());
        }
        if let Some(seg) = self.payload.as_ref().and_then(|p| p.get(self.body.len())) {
            words.extend(seg.iter().cloned());
        }
        if words.is_empty() {
            write!(f, " eps")?;
        }
        for w in words {
            write!(f, " {w}")?;
        }
        write!(f, "  [{}]", self.degree)
    }
}

/// One rule per line with its degree in brackets.
impl std::fmt::Display for WeightedGrammar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for r in &self.rules {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}
