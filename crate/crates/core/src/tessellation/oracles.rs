//! Brute-force counts on a constructed ball.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::ball::Ball;
use super::TessellationError;

pub fn sphere_sizes(ball: &Ball) -> Vec<u64> {
    (0..=ball.depth).map(|n| ball.level(n).len() as u64).collect()
}

/// Number of geodesics from the base point to each vertex, and per-depth sums.
pub fn geodesic_multiplicities(ball: &Ball) -> (Vec<u128>, Vec<BigInt>) {
    let n = ball.vertex_count();
    let mut lambda = vec![0u128; n];
    lambda[0] = 1;
    for v in 1..n as u32 {
        lambda[v as usize] = ball
            .preds(v)
            .iter()
            .map(|&p| lambda[p as usize])
            .fold(0u128, |a, b| a.checked_add(b).expect("geodesic count overflow"));
    }
    let totals = (0..=ball.depth).map(|d| ball.level(d).map(|v| BigInt::from(lambda[v as usize])).sum()).collect();
    (lambda, totals)
}

/// Per-depth sums of squared geodesic multiplicities.
pub fn pair_sums(ball: &Ball) -> Vec<BigInt> {
    let (lambda, _) = geodesic_multiplicities(ball);
    (0..=ball.depth)
        .map(|d| {
            ball.level(d)
                .map(|v| {
                    let x = BigInt::from(lambda[v as usize]);
                    &x * &x
                })
                .sum()
        })
        .collect()
}

/// Directed edges inside the ball with both ends at distance `<= radius`.
struct Darts {
    from: Vec<u32>,
    to: Vec<u32>,
    /// For each dart, the darts continuing it without backtracking.
    next_off: Vec<u32>,
    next: Vec<u32>,
}

fn darts(ball: &Ball, radius: u32) -> Darts {
    let mut index = std::collections::HashMap::new();
    let (mut from, mut to) = (Vec::new(), Vec::new());
    let inside = |v: u32| ball.distance(v) <= radius;
    let last = ball.level(radius.min(ball.depth)).end;
    for u in 0..last {
        for v in ball.neighbors(u) {
            if inside(v) {
                index.insert((u, v), from.len() as u32);
                from.push(u);
                to.push(v);
            }
        }
    }
    let mut next_off = vec![0u32];
    let mut next = Vec::new();
    for d in 0..from.len() {
        let (u, v) = (from[d], to[d]);
        for w in ball.neighbors(v) {
            if w != u {
                if let Some(&e) = index.get(&(v, w)) {
                    next.push(e);
                }
            }
        }
        next_off.push(next.len() as u32);
    }
    Darts { from, to, next_off, next }
}

/// Proper closed paths at the base point, indexed by length `0..=len_max`.
pub fn proper_loop_counts(ball: &Ball, len_max: u32) -> Result<Vec<BigInt>, TessellationError> {
    if len_max > 2 * ball.depth {
        return Err(TessellationError::OutOfRange { what: "loop length", requested: len_max, limit: 2 * ball.depth });
    }
    let radius = len_max / 2;
    let g = darts(ball, radius);
    let nd = g.from.len();
    let mut out = vec![BigInt::zero(); len_max as usize + 1];
    let mut cur = vec![BigInt::zero(); nd];
    for d in 0..nd {
        if g.from[d] == 0 {
            cur[d] = BigInt::one();
        }
    }
    for k in 1..=len_max {
        for d in 0..nd {
            if g.to[d] == 0 && !cur[d].is_zero() {
                out[k as usize] += &cur[d];
            }
        }
        if k == len_max {
            break;
        }
        let mut nxt = vec![BigInt::zero(); nd];
        let remaining = len_max - k;
        for d in 0..nd {
            if cur[d].is_zero() {
                continue;
            }
            for &e in &g.next[g.next_off[d] as usize..g.next_off[d + 1] as usize] {
                if ball.distance(g.to[e as usize]) < remaining {
                    nxt[e as usize] += &cur[d];
                }
            }
        }
        cur = nxt;
    }
    Ok(out)
}

/// Number of closed walks of each length `0..=n` at the base point.
pub fn closed_walk_counts(ball: &Ball, n: u32) -> Result<Vec<BigInt>, TessellationError> {
    if n > 2 * ball.depth {
        return Err(TessellationError::OutOfRange { what: "walk length", requested: n, limit: 2 * ball.depth });
    }
    let radius = (n / 2).min(ball.depth);
    let last = ball.level(radius).end as usize;
    let mut cur = vec![BigInt::zero(); last];
    cur[0] = BigInt::one();
    let mut out = vec![BigInt::one()];
    for k in 1..=n {
        let mut nxt = vec![BigInt::zero(); last];
        let remaining = n - k;
        for (u, c) in cur.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for v in ball.neighbors(u as u32) {
                if ball.distance(v) <= remaining.min(radius) {
                    nxt[v as usize] += c;
                }
            }
        }
        cur = nxt;
        out.push(cur[0].clone());
    }
    Ok(out)
}

/// Exact `p^(n)(*, *)` for the simple random walk.
///
/// A closed walk of length `n` never leaves distance `n / 2`, so the count is
/// exact whenever `n <= 2 * depth`.
pub fn return_probability(ball: &Ball, n: u32) -> Result<BigRational, TessellationError> {
    let walks = closed_walk_counts(ball, n)?;
    let denom = BigInt::from(ball.l).pow(n);
    Ok(BigRational::new(walks[n as usize].clone(), denom))
}

/// Brute-force counts keyed by depth, length and half-length.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct OracleCounts {
    pub l: u32,
    pub m: u32,
    pub depth: u32,
    pub vertex_count: BTreeMap<u32, String>,
    pub geodesic_total: BTreeMap<u32, String>,
    pub pair_total: BTreeMap<u32, String>,
    pub proper_loop_count: BTreeMap<u32, String>,
    pub holly_count: BTreeMap<u32, String>,
}

pub fn oracle_counts(ball: &Ball, with_holly: bool) -> Result<OracleCounts, TessellationError> {
    let key = |v: Vec<String>| v.into_iter().enumerate().map(|(i, s)| (i as u32, s)).collect();
    let sizes = sphere_sizes(ball).iter().map(|x| x.to_string()).collect();
    let (_, geo) = geodesic_multiplicities(ball);
    let pairs = pair_sums(ball);
    let loops = proper_loop_counts(ball, 2 * ball.depth)?;
    let holly = if with_holly && ball.m.is_multiple_of(2) && (ball.l - 2) * (ball.m - 2) > 4 {
        super::holly::holly_counts(ball, ball.depth)?
    } else {
        Vec::new()
    };
    let strs = |v: &[BigInt]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    Ok(OracleCounts {
        l: ball.l,
        m: ball.m,
        depth: ball.depth,
        vertex_count: key(sizes),
        geodesic_total: key(strs(&geo)),
        pair_total: key(strs(&pairs)),
        proper_loop_count: key(strs(&loops)),
        holly_count: key(strs(&holly)),
    })
}
