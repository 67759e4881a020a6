//! Exact polynomial and rational-function arithmetic over the integers.

pub mod bipoly;
pub mod det;
pub mod mpoly;
pub mod numeric;
pub mod poly;
pub mod ratfunc;
pub mod roots;

pub use bipoly::{discriminant, resultant, BiPoly};
pub use poly::{poly_mul, Poly};
pub use ratfunc::{ratfunc_reduce, series_expand, RatFunc};
pub use roots::{smallest_positive_root, RootBracket, Sturm};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
    #[error("denominator has zero constant term; not expandable at 0")]
    ZeroConstantTerm,
    #[error("series has non-integer coefficients (denominator constant term {0})")]
    NonIntegralSeries(String),
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("both polynomials are constant in the eliminated variable")]
    ConstantInY,
    #[error("discriminant needs degree at least 1 in the function variable")]
    DegenerateDegree,
}
