//! Structural checks on a constructed ball.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::Serialize;

use super::ball::Ball;
use super::oracles::geodesic_multiplicities;
use super::types::{table_row, ConeType};

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Whether the check was applicable (skipped checks pass vacuously).
    pub applicable: bool,
    pub counterexamples: Vec<u32>,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ValidationReport {
    pub l: u32,
    pub m: u32,
    pub depth: u32,
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

const MAX_COUNTEREXAMPLES: usize = 10;

fn check(name: &str, bad: Vec<u32>, detail: String) -> Check {
    Check {
        name: name.to_string(),
        passed: bad.is_empty(),
        applicable: true,
        counterexamples: bad.into_iter().take(MAX_COUNTEREXAMPLES).collect(),
        detail,
    }
}

fn skipped(name: &str, why: &str) -> Check {
    Check {
        name: name.to_string(),
        passed: true,
        applicable: false,
        counterexamples: Vec::new(),
        detail: why.to_string(),
    }
}

pub fn validate_structure(ball: &Ball) -> ValidationReport {
    let checks = vec![
        check_degrees(ball),
        check_distances(ball),
        check_faces(ball),
        check_girth(ball),
        check_bipartite(ball),
        check_type_table(ball),
        check_type_definition(ball),
        check_fellow_travelers(ball),
    ];
    ValidationReport { l: ball.l, m: ball.m, depth: ball.depth, checks }
}

fn all_vertices(ball: &Ball) -> impl Iterator<Item = u32> {
    0..ball.vertex_count() as u32
}

fn check_degrees(ball: &Ball) -> Check {
    let bad: Vec<u32> =
        all_vertices(ball).filter(|&v| ball.is_interior(v) && ball.degree(v) != ball.l as usize).collect();
    let n = bad.len();
    check("degree", bad, format!("{n} interior vertices with degree != {}", ball.l))
}

fn check_distances(ball: &Ball) -> Check {
    let mut dist = vec![u32::MAX; ball.vertex_count()];
    let mut queue = VecDeque::from([0u32]);
    dist[0] = 0;
    while let Some(v) = queue.pop_front() {
        for w in ball.neighbors(v) {
            if dist[w as usize] == u32::MAX {
                dist[w as usize] = dist[v as usize] + 1;
                queue.push_back(w);
            }
        }
    }
    let mut bad: Vec<u32> = all_vertices(ball).filter(|&v| dist[v as usize] != ball.distance(v)).collect();
    for v in all_vertices(ball) {
        for w in ball.neighbors(v) {
            let (a, b) = (ball.distance(v), ball.distance(w));
            let peer = ball.left_peer(v) == Some(w) || ball.right_peer(v) == Some(w);
            let ok = if peer { a == b && ball.m % 2 == 1 } else { a.abs_diff(b) == 1 };
            if !ok {
                bad.push(v);
            }
        }
    }
    bad.sort_unstable();
    bad.dedup();
    check("distance", bad, "BFS distance equals construction level; neighbours differ by 1 or are peers".into())
}

/// Faces through interior darts whose traced cycle stays strictly inside.
fn check_faces(ball: &Ball) -> Check {
    let m = ball.m as usize;
    let mut bad = Vec::new();
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut complete = 0usize;
    for u in all_vertices(ball).filter(|&u| ball.is_interior(u)) {
        for v in ball.neighbors(u) {
            if !ball.is_interior(v) {
                continue;
            }
            match ball.trace_face(u, v, 4 * m) {
                Some(cycle) if cycle.iter().all(|&z| ball.is_interior(z)) => {
                    let mut key = cycle.clone();
                    key.sort_unstable();
                    if seen.insert(key) {
                        complete += 1;
                        if cycle.len() != m {
                            bad.push(u);
                        }
                    }
                }
                _ => {}
            }
        }
    }
    let detail = format!("{complete} complete faces traced, {} not of length {m}", bad.len());
    check("faces", bad, detail)
}

/// No cycle shorter than `m` among sampled roots (BFS within the ball).
fn check_girth(ball: &Ball) -> Check {
    let m = ball.m;
    let sample = sample_interior(ball, 50);
    let mut bad = Vec::new();
    let mut shortest = u32::MAX;
    for &root in &sample {
        let mut dist: HashMap<u32, u32> = HashMap::from([(root, 0)]);
        let mut parent: HashMap<u32, u32> = HashMap::new();
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let dv = dist[&v];
            if 2 * dv + 1 >= m {
                continue;
            }
            for w in ball.neighbors(v) {
                if parent.get(&v) == Some(&w) {
                    continue;
                }
                match dist.get(&w) {
                    None => {
                        dist.insert(w, dv + 1);
                        parent.insert(w, v);
                        queue.push_back(w);
                    }
                    Some(&dw) => {
                        let len = dv + dw + 1;
                        shortest = shortest.min(len);
                        if len < m {
                            bad.push(root);
                        }
                    }
                }
            }
        }
    }
    bad.sort_unstable();
    bad.dedup();
    let detail = format!("{} sampled roots; no cycle shorter than {m}", sample.len());
    check("girth", bad, detail)
}

fn sample_interior(ball: &Ball, count: usize) -> Vec<u32> {
    let w = ball.m / 2;
    let limit = ball.depth.saturating_sub(w);
    let candidates: Vec<u32> = all_vertices(ball).filter(|&v| ball.distance(v) <= limit).collect();
    if candidates.is_empty() {
        return Vec::new();
    }
    let step = (candidates.len() / count).max(1);
    candidates.into_iter().step_by(step).take(count).collect()
}

fn check_bipartite(ball: &Ball) -> Check {
    if ball.m % 2 == 1 {
        return skipped("bipartite", "odd m has peer edges");
    }
    let bad: Vec<u32> = all_vertices(ball)
        .filter(|&v| ball.neighbors(v).any(|w| ball.distance(w) % 2 == ball.distance(v) % 2))
        .collect();
    check("bipartite", bad, "even m: all edges join opposite distance parity".into())
}

fn check_type_table(ball: &Ball) -> Check {
    if ball.l < 4 || ball.m < 4 {
        return skipped("type-table", "tables assume l >= 4 and m >= 4");
    }
    let mut bad = Vec::new();
    for v in all_vertices(ball).filter(|&v| ball.is_interior(v)) {
        let t = ball.cone_type(v).level();
        let row = table_row(ball.l, ball.m, t);
        let mut expect: HashMap<u16, i64> = HashMap::new();
        if t == 0 {
            expect.insert(1, row.succ_type1);
        } else {
            *expect.entry(1).or_default() += row.succ_type1;
            *expect.entry(2).or_default() += row.succ_type2;
            *expect.entry(t + 1).or_default() += row.succ_next;
        }
        expect.retain(|_, c| *c != 0);
        let mut got: HashMap<u16, i64> = HashMap::new();
        for &s in ball.succs(v) {
            *got.entry(ball.cone_type(s).level()).or_default() += 1;
        }
        let peers = i64::from(ball.left_peer(v).is_some()) + i64::from(ball.right_peer(v).is_some());
        if got != expect || ball.pred_count(v) as i64 != row.preds || peers != row.peers {
            bad.push(v);
        }
    }
    let n = bad.len();
    check("type-table", bad, format!("{n} interior vertices disagree with the cone-type table"))
}

/// Even `m`: type equals `|x| - min |y|` over cells through `x`, for vertices
/// whose cells are fully built.
fn check_type_definition(ball: &Ball) -> Check {
    if ball.m % 2 == 1 {
        return skipped("type-definition", "only checked for even m");
    }
    let w = ball.m / 2;
    let limit = match ball.depth.checked_sub(w + 1) {
        Some(l) => l,
        None => return skipped("type-definition", "ball too shallow"),
    };
    let mut bad = Vec::new();
    let mut checked = 0;
    for x in all_vertices(ball).filter(|&x| ball.distance(x) <= limit) {
        let mut lowest = u32::MAX;
        let mut ok = true;
        for v in ball.neighbors(x) {
            match ball.trace_face(x, v, ball.m as usize + 1) {
                Some(c) if c.len() == ball.m as usize => {
                    lowest = lowest.min(c.iter().map(|&z| ball.distance(z)).min().unwrap());
                }
                _ => ok = false,
            }
        }
        checked += 1;
        let t = ball.distance(x) - lowest;
        let ty = ball.cone_type(x);
        let expected_level = if x == 0 { 0 } else { t as u16 };
        if !ok || ty.level() != expected_level || (x == 0) != (ty == ConeType::Origin) {
            bad.push(x);
        }
    }
    check("type-definition", bad, format!("{checked} vertices re-typed from their cells"))
}

/// Sampled pairs of geodesics to a common endpoint: positions `i` lie on a
/// common cell.
fn check_fellow_travelers(ball: &Ball) -> Check {
    if (ball.l - 2) * (ball.m - 2) <= 4 {
        return skipped("fellow-travelers", "needs a hyperbolic tessellation");
    }
    let w = ball.m / 2;
    let limit = ball.depth.saturating_sub(w + 1);
    let (lambda, _) = geodesic_multiplicities(ball);
    let targets: Vec<u32> =
        all_vertices(ball).filter(|&v| ball.distance(v) <= limit && lambda[v as usize] >= 2).collect();
    let step = (targets.len() / 40).max(1);
    let mut bad = Vec::new();
    let mut pairs = 0usize;
    for &x in targets.iter().step_by(step).take(40) {
        let geos = geodesics_to(ball, x, 16);
        for a in 0..geos.len() {
            for b in a + 1..geos.len() {
                pairs += 1;
                let ok = geos[a].iter().zip(&geos[b]).all(|(&p, &q)| p == q || share_cell(ball, p, q));
                if !ok {
                    bad.push(x);
                }
            }
        }
    }
    bad.dedup();
    check("fellow-travelers", bad, format!("{pairs} geodesic pairs checked"))
}

/// Up to `cap` geodesics from the base point to `x`, as vertex sequences.
pub fn geodesics_to(ball: &Ball, x: u32, cap: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut stack = vec![vec![x]];
    while let Some(path) = stack.pop() {
        if out.len() >= cap {
            break;
        }
        let head = *path.last().unwrap();
        if head == 0 {
            let mut p = path;
            p.reverse();
            out.push(p);
            continue;
        }
        for &p in ball.preds(head) {
            let mut next = path.clone();
            next.push(p);
            stack.push(next);
        }
    }
    out
}

fn share_cell(ball: &Ball, p: u32, q: u32) -> bool {
    let m = ball.m as usize;
    ball.neighbors(p).any(|v| ball.trace_face(p, v, m + 1).is_some_and(|c| c.contains(&q)))
}
