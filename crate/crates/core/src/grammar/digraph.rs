//! Dependency digraph of a grammar and its strong connectivity.

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};
use serde::Serialize;

use super::model::WeightedGrammar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Connectivity {
    /// All nonterminals form one strongly connected component.
    ErgodicAll,
    /// All but the axiom are strongly connected and the axiom never occurs
    /// in a rule body.
    ErgodicWithoutAxiom,
    Neither,
}

/// Arc `A -> B` whenever some rule with head `A` mentions `B`.
pub fn dependency_digraph(g: &WeightedGrammar) -> DiGraph<String, ()> {
    let mut graph = DiGraph::new();
    let nodes: Vec<NodeIndex> = g.nonterminals.iter().map(|n| graph.add_node(n.clone())).collect();
    let idx = g.index();
    for r in &g.rules {
        let a = nodes[idx[r.head.as_str()]];
        for b in &r.body {
            let b = nodes[idx[b.as_str()]];
            if graph.find_edge(a, b).is_none() {
                graph.add_edge(a, b, ());
            }
        }
    }
    graph
}

fn strongly_connected(graph: &DiGraph<String, ()>) -> bool {
    tarjan_scc(graph).len() == 1
}

pub fn strong_connectivity_check(g: &WeightedGrammar) -> Connectivity {
    let mut graph = dependency_digraph(g);
    if strongly_connected(&graph) {
        return Connectivity::ErgodicAll;
    }
    let axiom = g.index()[g.axiom.as_str()];
    let axiom_used = g.rules.iter().any(|r| r.body.contains(&g.axiom));
    graph.remove_node(NodeIndex::new(axiom));
    if !axiom_used && graph.node_count() > 0 && strongly_connected(&graph) {
        Connectivity::ErgodicWithoutAxiom
    } else {
        Connectivity::Neither
    }
}
