//! Weighted grammars and the growth series they generate.

pub mod annihilate;
pub mod digraph;
pub mod enumerate;
pub mod linear;
pub mod model;
pub mod normalize;
pub mod system;

use thiserror::Error;

use crate::series::SeriesError;

pub use annihilate::annihilating_polynomial;
pub use digraph::{dependency_digraph, strong_connectivity_check, Connectivity};
pub use enumerate::{enumerate_words, WordCounts};
pub use linear::linear_series;
pub use model::{Rule, WeightedGrammar};
pub use normalize::{eliminate_chain_and_epsilon, Normalized};
pub use system::{algebraic_system, system_coeffs, system_radius, Monomial, PolySystem, RadiusBracket};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GrammarError {
    #[error("grammar parse error: {0}")]
    Parse(String),
    #[error("undeclared nonterminal {0}")]
    Undeclared(String),
    #[error("invalid grammar: {0}")]
    Invalid(String),
    #[error("nonterminal {0} derives the empty word in infinitely many ways")]
    EpsilonCycle(String),
    #[error("cycle of chain rules through {0}")]
    ChainCycle(String),
    #[error("rule for {0} has more than one nonterminal in its body")]
    NonLinear(String),
    #[error("linear system is singular")]
    Singular,
    #[error("system is not proper: {0}")]
    ImproperSystem(String),
    #[error("rules lack terminal payloads")]
    MissingPayload,
    #[error(transparent)]
    Series(#[from] SeriesError),
}
