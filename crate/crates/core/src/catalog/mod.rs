//! Grammars and closed-form series for the tessellations `X(l, m)`.

pub mod automaton;
pub mod closed;
pub mod envelope;
pub mod errata;
pub mod grammars;
pub mod salem;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;
use thiserror::Error;

use crate::grammar::{GrammarError, WeightedGrammar};
use crate::series::{RatFunc, SeriesError};
use crate::tessellation::TessellationError;

pub use automaton::Automaton;
pub use closed::{cannon_wagreich, closed_form, closed_form_parts};
pub use envelope::{coefficient_envelope_check, EnvelopeReport};
pub use errata::{closed_form_comparison, errata_markdown, first_difference, Comparison};
pub use grammars::{geodesic_grammar, holly_grammar, pair_grammar, pair_grammar_with, vertex_grammar, OriginCells};
pub use salem::{salem_candidate, salem_check, SalemReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Vertices,
    Geodesics,
    Pairs,
    Holly,
}

impl Kind {
    pub const ALL: [Kind; 4] = [Kind::Vertices, Kind::Geodesics, Kind::Pairs, Kind::Holly];

    /// Context-free (algebraic) rather than right-linear.
    pub fn is_algebraic(self) -> bool {
        self == Kind::Holly
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Vertices => "vertices",
            Kind::Geodesics => "geodesics",
            Kind::Pairs => "pairs",
            Kind::Holly => "holly",
        })
    }
}

impl FromStr for Kind {
    type Err = String;
    fn from_str(s: &str) -> Result<Kind, String> {
        match s {
            "vertices" => Ok(Kind::Vertices),
            "geodesics" => Ok(Kind::Geodesics),
            "pairs" => Ok(Kind::Pairs),
            "holly" => Ok(Kind::Holly),
            _ => Err(format!("unknown kind {s:?} (expected vertices, geodesics, pairs or holly)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error(transparent)]
    Tessellation(#[from] TessellationError),
    #[error(transparent)]
    Grammar(#[from] GrammarError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("grammars need l >= 4 and m >= 4 (got l={l}, m={m})")]
    Degenerate { l: u32, m: u32 },
    #[error("no closed form is known for {0}")]
    NoClosedForm(Kind),
    #[error("genus must be at least 2 (got {0})")]
    Genus(u32),
    #[error("dominant singularity assumption violated: {0}")]
    DominantRoot(String),
}

/// Validated `(l, m, kind)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CatalogKey {
    pub l: u32,
    pub m: u32,
    pub kind: Kind,
}

impl CatalogKey {
    pub fn new(l: u32, m: u32, kind: Kind) -> Result<CatalogKey, CatalogError> {
        crate::tessellation::check_parameters(l, m)?;
        let hyperbolic = (l - 2) * (m - 2) > 4;
        if matches!(kind, Kind::Pairs | Kind::Holly) && !hyperbolic {
            return Err(TessellationError::NotHyperbolic { l, m }.into());
        }
        if kind == Kind::Holly && m % 2 == 1 {
            return Err(TessellationError::OddHolly { m }.into());
        }
        Ok(CatalogKey { l, m, kind })
    }

    pub fn even(&self) -> bool {
        self.m.is_multiple_of(2)
    }
}

type Cache = Mutex<HashMap<CatalogKey, Arc<WeightedGrammar>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The grammar for a key, built once per process.
pub fn grammar(key: CatalogKey) -> Result<Arc<WeightedGrammar>, CatalogError> {
    if let Some(g) = cache().lock().unwrap().get(&key) {
        return Ok(g.clone());
    }
    let g = Arc::new(match key.kind {
        Kind::Vertices => vertex_grammar(key.l, key.m)?,
        Kind::Geodesics => geodesic_grammar(key.l, key.m)?,
        Kind::Pairs => pair_grammar(key.l, key.m)?,
        Kind::Holly => holly_grammar(key.l, key.m)?,
    });
    cache().lock().unwrap().insert(key, g.clone());
    Ok(g)
}

/// Rational series of a linear kind, from its grammar.
pub fn linear_series_of(kind: Kind, l: u32, m: u32) -> Result<RatFunc, CatalogError> {
    if kind.is_algebraic() {
        return Err(CatalogError::NoClosedForm(kind));
    }
    let g = grammar(CatalogKey::new(l, m, kind)?)?;
    Ok(crate::grammar::linear_series(&g)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_validate() {
        assert!(CatalogKey::new(4, 4, Kind::Vertices).is_ok());
        assert!(CatalogKey::new(4, 4, Kind::Pairs).is_err());
        assert!(CatalogKey::new(5, 5, Kind::Holly).is_err());
        assert!(CatalogKey::new(3, 3, Kind::Vertices).is_err());
    }

    #[test]
    fn memoized() {
        let key = CatalogKey::new(8, 8, Kind::Pairs).unwrap();
        let a = grammar(key).unwrap();
        let b = grammar(key).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
    }

    #[test]
    fn kind_names() {
        for k in Kind::ALL {
            assert_eq!(k.to_string().parse::<Kind>(), Ok(k));
        }
    }
}
