//! The ball of radius `R` in `X(l, m)` and brute-force counts on it.

pub mod ball;
pub mod holly;
pub mod oracles;
pub mod types;
pub mod validate;
pub mod walk;

pub use ball::{build_ball, build_ball_with_budget, check_parameters, Ball, EdgeLabel};
pub use holly::holly_counts;
pub use oracles::{
    closed_walk_counts, geodesic_multiplicities, oracle_counts, pair_sums, proper_loop_counts, return_probability,
    sphere_sizes, OracleCounts,
};
pub use types::ConeType;
pub use validate::{validate_structure, ValidationReport};
pub use walk::{is_proper, step, walk, Letter};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TessellationError {
    #[error("invalid parameters l={l}, m={m}: need l >= 3 and m >= 3")]
    InvalidParameters { l: u32, m: u32 },
    #[error("spherical parameters l={l}, m={m}: (l-2)(m-2) < 4")]
    Spherical { l: u32, m: u32 },
    #[error("l={l}, m={m} is not hyperbolic: (l-2)(m-2) must exceed 4")]
    NotHyperbolic { l: u32, m: u32 },
    #[error("holly trees are only defined here for even m (got m={m})")]
    OddHolly { m: u32 },
    #[error("ball needs about {estimate} vertices, over the budget of {budget}")]
    Budget { estimate: usize, budget: usize },
    #[error("{what} {requested} exceeds the ball's limit {limit}")]
    OutOfRange { what: &'static str, requested: u32, limit: u32 },
    #[error("inconsistent construction: {0}")]
    Inconsistent(String),
}
