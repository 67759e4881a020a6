//! Holly trees counted from their recursive definition on concrete vertices.
//!
//! A holly tree at `x` is a proper loop at `x` inside the cone of `x`, built
//! from cell perimeters at `x`, conjugates `v h v^-1` of holly trees `h` at a
//! successor, and proper concatenations. Decomposing a holly tree into its
//! maximal prime factors gives the recursion counted here.

use num_bigint::BigInt;
use num_traits::Zero;

use super::ball::Ball;
use super::TessellationError;

/// A cell with lowest vertex `x`, entered by successor edge `first` and left
/// through successor edge `last` (both 0-based indices into `succs(x)`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub first: usize,
    pub last: usize,
    pub cycle: Vec<u32>,
}

/// Whether `z` lies in the cone of `x`, i.e. `x` is an ancestor of `z`
/// along predecessor edges.
pub fn in_cone(ball: &Ball, x: u32, z: u32) -> bool {
    let dx = ball.distance(x);
    let mut stack = vec![z];
    let mut seen = std::collections::HashSet::new();
    while let Some(v) = stack.pop() {
        if v == x {
            return true;
        }
        if ball.distance(v) <= dx || !seen.insert(v) {
            continue;
        }
        stack.extend(ball.preds(v).iter().copied());
    }
    false
}

/// Cells at `x` lying in the cone of `x`, one entry per orientation.
pub fn cells_at(ball: &Ball, x: u32) -> Vec<Cell> {
    let succs = ball.succs(x);
    let k = succs.len();
    let m = ball.m as usize;
    let mut out = Vec::new();
    if k < 2 {
        return out;
    }
    let pairs: Vec<(usize, usize)> =
        if x == 0 { (0..k).map(|i| (i, (i + 1) % k)).collect() } else { (0..k - 1).map(|i| (i, i + 1)).collect() };
    for (i, j) in pairs {
        // clockwise turning from x -> succ j walks around the corner (i, j)
        let Some(cycle) = ball.trace_face(x, succs[j], m + 1) else {
            continue;
        };
        if cycle.len() != m || cycle[cycle.len() - 1] != succs[i] {
            continue;
        }
        if !cycle.iter().all(|&z| in_cone(ball, x, z)) {
            continue;
        }
        let mut rev = cycle.clone();
        rev[1..].reverse();
        out.push(Cell { first: j, last: i, cycle });
        out.push(Cell { first: i, last: j, cycle: rev });
    }
    out
}

/// Holly trees at the base point by half-length `0..=half_len_max`.
pub fn holly_counts(ball: &Ball, half_len_max: u32) -> Result<Vec<BigInt>, TessellationError> {
    let (l, m) = (ball.l, ball.m);
    if m % 2 == 1 {
        return Err(TessellationError::OddHolly { m });
    }
    if (l - 2) * (m - 2) <= 4 {
        return Err(TessellationError::NotHyperbolic { l, m });
    }
    if half_len_max > ball.depth {
        return Err(TessellationError::OutOfRange {
            what: "holly half-length",
            requested: half_len_max,
            limit: ball.depth,
        });
    }
    let h = half_len_max;
    let m = m as usize;
    // totals[v][k]: holly trees at v of full length k, for v with |v| < h
    let mut totals: Vec<Vec<BigInt>> = vec![Vec::new(); ball.vertex_count()];
    for n in (0..h).rev() {
        for x in ball.level(n) {
            let kmax = 2 * (h - n) as usize;
            let succs = ball.succs(x);
            let cells = cells_at(ball, x);
            // a[e][k]: trees at x of length k whose first edge is succ e
            let mut a = vec![vec![BigInt::zero(); kmax + 1]; succs.len()];
            let mut t = vec![BigInt::zero(); kmax + 1];
            let excluding = |t: &[BigInt], a: &[Vec<BigInt>], e: usize, k: usize| &t[k] - &a[e][k];
            for k in 1..=kmax {
                for (e, &y) in succs.iter().enumerate() {
                    let ty = &totals[y as usize];
                    let mut acc = BigInt::zero();
                    // conjugates e h e^-1 of length j, followed by the rest
                    for (jh, cnt) in ty.iter().enumerate() {
                        let j = jh + 2;
                        if j > k || cnt.is_zero() {
                            continue;
                        }
                        if j == k {
                            acc += cnt;
                        } else {
                            acc += cnt * excluding(&t, &a, e, k - j);
                        }
                    }
                    for c in cells.iter().filter(|c| c.first == e) {
                        if m == k {
                            acc += 1;
                        } else if m < k {
                            acc += excluding(&t, &a, c.last, k - m);
                        }
                    }
                    a[e][k] = acc;
                }
                t[k] = a.iter().map(|row| row[k].clone()).sum();
            }
            totals[x as usize] = t;
        }
    }
    let t0 = &totals[0];
    Ok((0..=h as usize).map(|hl| t0.get(2 * hl).cloned().unwrap_or_default()).collect())
}
