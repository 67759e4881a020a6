//! Catalog grammars against brute-force counts on balls.

use hypergrowth::catalog::{closed_form, geodesic_grammar, holly_grammar, pair_grammar, vertex_grammar, Kind};
use hypergrowth::grammar::{algebraic_system, enumerate_words, linear_series, system_coeffs};
use hypergrowth::series::series_expand;
use hypergrowth::tessellation::{
    build_ball, geodesic_multiplicities, holly_counts, is_proper, pair_sums, sphere_sizes, walk, Letter,
};
use num_bigint::BigInt;

const KEYS: [(u32, u32, u32); 10] =
    [(8, 8, 5), (5, 5, 7), (4, 6, 8), (6, 4, 8), (7, 7, 5), (4, 5, 9), (5, 4, 8), (4, 7, 9), (6, 6, 6), (4, 8, 9)];

#[test]
fn linear_grammars_match_ball() {
    for (l, m, depth) in KEYS {
        let ball = build_ball(l, m, depth).unwrap();
        let n = depth as usize;
        let sizes: Vec<BigInt> = sphere_sizes(&ball).into_iter().map(BigInt::from).collect();
        let f = linear_series(&vertex_grammar(l, m).unwrap()).unwrap();
        assert_eq!(series_expand(&f, n), sizes, "vertices ({l},{m})");
        assert_eq!(f, closed_form(Kind::Vertices, l, m).unwrap(), "closed F ({l},{m})");
        let (_, geo) = geodesic_multiplicities(&ball);
        let g = linear_series(&geodesic_grammar(l, m).unwrap()).unwrap();
        assert_eq!(series_expand(&g, n), geo, "geodesics ({l},{m})");
        assert_eq!(g, closed_form(Kind::Geodesics, l, m).unwrap(), "closed G ({l},{m})");
        let p = linear_series(&pair_grammar(l, m).unwrap()).unwrap();
        assert_eq!(series_expand(&p, n), pair_sums(&ball), "pairs ({l},{m})");
    }
}

#[test]
fn holly_grammars_match_ball() {
    for (l, m, depth) in [(8, 8, 6), (4, 6, 8), (6, 4, 8), (5, 6, 7), (4, 8, 8), (5, 4, 8)] {
        let ball = build_ball(l, m, depth).unwrap();
        let oracle = holly_counts(&ball, depth).unwrap();
        let sys = algebraic_system(&holly_grammar(l, m).unwrap()).unwrap();
        assert_eq!(system_coeffs(&sys, depth as usize).unwrap(), oracle, "holly ({l},{m})");
    }
}

#[test]
fn holly_words_are_proper_closed_walks() {
    let (l, m, depth) = (4, 6, 8);
    let ball = build_ball(l, m, depth).unwrap();
    let words = enumerate_words(&holly_grammar(l, m).unwrap(), depth).unwrap();
    let oracle = holly_counts(&ball, depth).unwrap();
    for h in 1..=depth {
        let ws = words.get(&h).map(Vec::as_slice).unwrap_or(&[]);
        assert_eq!(BigInt::from(ws.len()), oracle[h as usize], "count at {h}");
        for (w, mult) in ws {
            assert_eq!(*mult, 1);
            let letters: Vec<Letter> = w.iter().map(|s| s.parse().unwrap()).collect();
            let path = walk(&ball, 0, &letters).expect("word walks");
            assert_eq!(path.last(), Some(&0));
            assert!(is_proper(&path));
        }
    }
}
