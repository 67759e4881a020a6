//! Layered construction of the ball of radius `R` around the base point of
//! `X(l, m)`.
//!
//! The sphere of radius `n` is kept as a cyclic left-to-right frontier.
//! Between two adjacent frontier vertices lies one open face, of which `c`
//! edges are already built. Going up one level, every frontier vertex grows
//! its missing edges; a face with `m - 2` built edges closes by a shared top
//! vertex, one with `m - 1` built edges closes by a peer edge.

use std::fmt::Write as _;

use super::types::ConeType;
use super::TessellationError;

pub const NONE: u32 = u32::MAX;

/// Default vertex budget, overridable with `HYPERGROWTH_MAX_VERTICES`.
pub const DEFAULT_MAX_VERTICES: usize = 10_000_000;

pub fn max_vertices() -> usize {
    std::env::var("HYPERGROWTH_MAX_VERTICES").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_MAX_VERTICES)
}

/// Kind of a labelled edge as seen from one endpoint.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EdgeLabel {
    /// Outgoing edge to the i-th successor (1-based, left to right).
    Succ(u16),
    /// Incoming edge from a predecessor, which labels it `e_i`.
    PredInv(u16),
    Peer,
}

impl std::fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EdgeLabel::Succ(i) => write!(f, "e{i}"),
            EdgeLabel::PredInv(i) => write!(f, "e{i}^-1"),
            EdgeLabel::Peer => write!(f, "ep"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ball {
    pub l: u32,
    pub m: u32,
    pub depth: u32,
    dist: Vec<u16>,
    ctype: Vec<ConeType>,
    left_peer: Vec<u32>,
    right_peer: Vec<u32>,
    pred_off: Vec<u32>,
    preds: Vec<u32>,
    succ_off: Vec<u32>,
    succs: Vec<u32>,
    level_start: Vec<u32>,
}

#[derive(Clone, Copy, Debug)]
struct Gap {
    /// Edges of the open face already built.
    c: u32,
    /// Lowest level on the face; for odd `m` on the union of the faces
    /// on both sides of a peer edge.
    mb: u32,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[rb] = ra;
        }
    }
}

pub fn check_parameters(l: u32, m: u32) -> Result<(), TessellationError> {
    if l < 3 || m < 3 {
        return Err(TessellationError::InvalidParameters { l, m });
    }
    if (l - 2) * (m - 2) < 4 {
        return Err(TessellationError::Spherical { l, m });
    }
    Ok(())
}

/// Builds `Ball(l, m, depth)` with the default vertex budget.
pub fn build_ball(l: u32, m: u32, depth: u32) -> Result<Ball, TessellationError> {
    build_ball_with_budget(l, m, depth, max_vertices())
}

pub fn build_ball_with_budget(l: u32, m: u32, depth: u32, budget: usize) -> Result<Ball, TessellationError> {
    check_parameters(l, m)?;
    if depth > u16::MAX as u32 {
        return Err(TessellationError::Budget { estimate: usize::MAX, budget });
    }
    let mut b = Ball {
        l,
        m,
        depth,
        dist: vec![0],
        ctype: vec![ConeType::Origin],
        left_peer: vec![NONE],
        right_peer: vec![NONE],
        pred_off: vec![0, 0],
        preds: Vec::new(),
        succ_off: vec![0],
        succs: Vec::new(),
        level_start: vec![0, 1],
    };
    if depth == 0 {
        b.succ_off.push(0);
        return Ok(b);
    }
    if 1 + l as usize > budget {
        return Err(TessellationError::Budget { estimate: 1 + l as usize, budget });
    }
    for i in 0..l {
        let id = 1 + i;
        b.dist.push(1);
        b.ctype.push(ConeType::One);
        b.left_peer.push(NONE);
        b.right_peer.push(NONE);
        b.preds.push(0);
        b.pred_off.push(b.preds.len() as u32);
        b.succs.push(id);
    }
    b.succ_off.push(b.succs.len() as u32);
    b.level_start.push(1 + l);
    let mut gaps = vec![Gap { c: 2, mb: 0 }; l as usize];
    for n in 1..depth {
        b.peer_step(n, &mut gaps);
        gaps = b.grow(n, &gaps, budget)?;
    }
    b.peer_step(depth, &mut gaps);
    let last = b.dist.len() as u32;
    while b.succ_off.len() <= last as usize {
        b.succ_off.push(b.succs.len() as u32);
    }
    Ok(b)
}

impl Ball {
    fn level_range(&self, n: u32) -> std::ops::Range<u32> {
        self.level_start[n as usize]..self.level_start[n as usize + 1]
    }

    fn peer_step(&mut self, n: u32, gaps: &mut [Gap]) {
        let r = self.level_range(n);
        let k = gaps.len();
        for (i, gap) in gaps.iter_mut().enumerate() {
            if gap.c == self.m - 1 {
                let a = r.start + i as u32;
                let z = r.start + ((i + 1) % k) as u32;
                self.right_peer[a as usize] = z;
                self.left_peer[z as usize] = a;
                gap.c = 1;
            }
        }
    }

    fn grow(&mut self, n: u32, gaps: &[Gap], budget: usize) -> Result<Vec<Gap>, TessellationError> {
        let r = self.level_range(n);
        let k = gaps.len();
        debug_assert_eq!(k, r.len());
        // slots: one per new edge, in left-to-right order
        let mut first_slot = Vec::with_capacity(k);
        let mut owner: Vec<usize> = Vec::new();
        for i in 0..k {
            let v = (r.start + i as u32) as usize;
            let used = self.pred_count(v as u32)
                + usize::from(self.left_peer[v] != NONE)
                + usize::from(self.right_peer[v] != NONE);
            let grow = (self.l as usize).checked_sub(used).filter(|&g| g > 0).ok_or(
                TessellationError::Inconsistent(format!("vertex {v} at level {n} has no room for successors")),
            )?;
            first_slot.push(owner.len());
            owner.extend(std::iter::repeat_n(i, grow));
        }
        let s = owner.len();
        let last_slot = |i: usize| {
            if i + 1 < k {
                first_slot[i + 1] - 1
            } else {
                s - 1
            }
        };
        let mut uf = UnionFind((0..s).collect());
        for (i, gap) in gaps.iter().enumerate() {
            if gap.c == self.m - 2 {
                uf.union(last_slot(i), first_slot[(i + 1) % k]);
            }
        }
        let group: Vec<usize> = (0..s).map(|x| uf.find(x)).collect();
        if group.iter().all(|&g| g == group[0]) {
            return Err(TessellationError::Inconsistent(format!(
                "all new edges at level {} meet in one vertex",
                n + 1
            )));
        }
        // start at a slot that begins its group
        let start = (0..s).find(|&x| group[(x + s - 1) % s] != group[x]).expect("some group boundary");
        let mut new_ids = vec![NONE; s];
        let base = self.dist.len() as u32;
        let mut count = 0u32;
        for step in 0..s {
            let x = (start + step) % s;
            if step == 0 || group[x] != group[(x + s - 1) % s] {
                count += 1;
            }
            new_ids[x] = base + count - 1;
        }
        let total = self.dist.len() + count as usize;
        if total > budget {
            let ratio = count as f64 / k.max(1) as f64;
            let remaining = (self.depth - n - 1) as i32;
            let estimate = total as f64 + count as f64 * ratio.powi(remaining);
            return Err(TessellationError::Budget { estimate: estimate.min(usize::MAX as f64) as usize, budget });
        }
        // successors of the current level, in id order
        for i in 0..k {
            for x in first_slot[i]..=last_slot(i) {
                self.succs.push(new_ids[x]);
            }
            self.succ_off.push(self.succs.len() as u32);
        }
        // face to the left of slot x: between slot x-1 and x
        let face_before = |x: usize| -> Gap {
            let p = (x + s - 1) % s;
            if owner[p] == owner[x] {
                Gap { c: 2, mb: n }
            } else {
                let g = gaps[owner[p]];
                Gap { c: g.c + 2, mb: g.mb }
            }
        };
        let mut new_gaps = Vec::with_capacity(count as usize);
        let mut step = 0;
        while step < s {
            let lo = (start + step) % s;
            let mut len = 1;
            while step + len < s && group[(start + step + len) % s] == group[lo] {
                len += 1;
            }
            let hi = (lo + len - 1) % s;
            let mut mids = u32::MAX;
            for j in 0..len - 1 {
                let x = (lo + j) % s;
                mids = mids.min(gaps[owner[x]].mb);
            }
            let left = face_before(lo).mb;
            let right_face = face_before((hi + 1) % s);
            let right = right_face.mb;
            let lowest = left.min(right).min(mids);
            let t = (n + 1 - lowest) as u16;
            let ctype = if t <= 1 {
                ConeType::One
            } else if mids <= left.min(right) || right <= left {
                ConeType::Left(t)
            } else {
                ConeType::Right(t)
            };
            for j in 0..len {
                self.preds.push(r.start + owner[(lo + j) % s] as u32);
            }
            self.pred_off.push(self.preds.len() as u32);
            self.dist.push((n + 1) as u16);
            self.ctype.push(ctype);
            self.left_peer.push(NONE);
            self.right_peer.push(NONE);
            new_gaps.push(right_face);
            step += len;
        }
        self.level_start.push(self.dist.len() as u32);
        Ok(new_gaps)
    }

    pub fn vertex_count(&self) -> usize {
        self.dist.len()
    }

    pub fn distance(&self, v: u32) -> u32 {
        self.dist[v as usize] as u32
    }

    pub fn cone_type(&self, v: u32) -> ConeType {
        self.ctype[v as usize]
    }

    pub fn preds(&self, v: u32) -> &[u32] {
        let v = v as usize;
        &self.preds[self.pred_off[v] as usize..self.pred_off[v + 1] as usize]
    }

    pub fn pred_count(&self, v: u32) -> usize {
        self.preds(v).len()
    }

    /// Successors from left to right; empty on the outer sphere.
    pub fn succs(&self, v: u32) -> &[u32] {
        let v = v as usize;
        &self.succs[self.succ_off[v] as usize..self.succ_off[v + 1] as usize]
    }

    pub fn left_peer(&self, v: u32) -> Option<u32> {
        Some(self.left_peer[v as usize]).filter(|&p| p != NONE)
    }

    pub fn right_peer(&self, v: u32) -> Option<u32> {
        Some(self.right_peer[v as usize]).filter(|&p| p != NONE)
    }

    pub fn level(&self, n: u32) -> std::ops::Range<u32> {
        self.level_range(n)
    }

    pub fn degree(&self, v: u32) -> usize {
        self.rotation(v).len()
    }

    /// Label `e_i` that predecessor `p` gives to its edge towards `v`.
    pub fn succ_label(&self, p: u32, v: u32) -> Option<u16> {
        self.succs(p).iter().position(|&x| x == v).map(|i| i as u16 + 1)
    }

    /// Neighbours in clockwise order: left peer, successors left to right,
    /// right peer, predecessors right to left.
    pub fn rotation(&self, v: u32) -> Vec<(EdgeLabel, u32)> {
        let mut out = Vec::with_capacity(self.l as usize);
        if let Some(p) = self.left_peer(v) {
            out.push((EdgeLabel::Peer, p));
        }
        for (i, &s) in self.succs(v).iter().enumerate() {
            out.push((EdgeLabel::Succ(i as u16 + 1), s));
        }
        if let Some(p) = self.right_peer(v) {
            out.push((EdgeLabel::Peer, p));
        }
        for &p in self.preds(v).iter().rev() {
            let lab = self.succ_label(p, v).expect("pred lists v as successor");
            out.push((EdgeLabel::PredInv(lab), p));
        }
        out
    }

    pub fn neighbors(&self, v: u32) -> impl Iterator<Item = u32> + '_ {
        self.left_peer(v)
            .into_iter()
            .chain(self.succs(v).iter().copied())
            .chain(self.right_peer(v))
            .chain(self.preds(v).iter().copied())
    }

    /// Whether `v`'s edge list is complete (all `l` edges inside the ball).
    pub fn is_interior(&self, v: u32) -> bool {
        self.distance(v) < self.depth
    }

    /// Traces the face entered by walking `u -> v`, turning to the next
    /// neighbour clockwise at every vertex. Returns the vertex cycle starting
    /// at `u`, or `None` if it does not close within `limit` steps.
    pub fn trace_face(&self, u: u32, v: u32, limit: usize) -> Option<Vec<u32>> {
        let mut cycle = vec![u];
        let (mut a, mut b) = (u, v);
        for _ in 0..limit {
            if b == u {
                return Some(cycle);
            }
            cycle.push(b);
            let rot = self.rotation(b);
            let pos = rot.iter().position(|&(_, x)| x == a)?;
            let next = rot[(pos + 1) % rot.len()].1;
            a = b;
            b = next;
        }
        None
    }

    /// One line per vertex: `id distance type label:neighbor ...`, neighbours
    /// in clockwise order.
    pub fn export(&self) -> String {
        let mut out = String::new();
        for v in 0..self.vertex_count() as u32 {
            write!(out, "{} {} {}", v, self.distance(v), self.cone_type(v)).unwrap();
            for (lab, w) in self.rotation(v) {
                write!(out, " {lab}:{w}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    /// Removes the edge `{a, b}` from both adjacency lists (fault injection
    /// for validation tests).
    pub fn delete_edge(&mut self, a: u32, b: u32) {
        for (x, y) in [(a, b), (b, a)] {
            if self.left_peer[x as usize] == y {
                self.left_peer[x as usize] = NONE;
            }
            if self.right_peer[x as usize] == y {
                self.right_peer[x as usize] = NONE;
            }
        }
        let (lo, hi) = if self.distance(a) < self.distance(b) { (a, b) } else { (b, a) };
        if self.distance(lo) + 1 != self.distance(hi) {
            return;
        }
        let (mut preds, mut pred_off) = (Vec::new(), vec![0u32]);
        for v in 0..self.vertex_count() as u32 {
            preds.extend(self.preds(v).iter().copied().filter(|&p| !(v == hi && p == lo)));
            pred_off.push(preds.len() as u32);
        }
        let (mut succs, mut succ_off) = (Vec::new(), vec![0u32]);
        for v in 0..self.vertex_count() as u32 {
            succs.extend(self.succs(v).iter().copied().filter(|&s| !(v == lo && s == hi)));
            succ_off.push(succs.len() as u32);
        }
        self.preds = preds;
        self.pred_off = pred_off;
        self.succs = succs;
        self.succ_off = succ_off;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sizes(b: &Ball) -> Vec<usize> {
        (0..=b.depth).map(|n| b.level(n).len()).collect()
    }

    #[test]
    fn square_lattice() {
        let b = build_ball(4, 4, 3).unwrap();
        assert_eq!(sizes(&b), vec![1, 4, 8, 12]);
    }

    #[test]
    fn girth_eight() {
        assert_eq!(sizes(&build_ball(8, 8, 2).unwrap()), vec![1, 8, 56]);
    }

    #[test]
    fn pentagons() {
        assert_eq!(sizes(&build_ball(5, 5, 2).unwrap()), vec![1, 5, 20]);
    }

    #[test]
    fn euclidean_hexagonal_and_triangular() {
        // honeycomb: 3, 6, 9, ...; triangular lattice: 6, 12, 18, ...
        assert_eq!(sizes(&build_ball(3, 6, 4).unwrap()), vec![1, 3, 6, 9, 12]);
        assert_eq!(sizes(&build_ball(6, 3, 4).unwrap()), vec![1, 6, 12, 18, 24]);
    }

    #[test]
    fn spherical_rejected() {
        assert!(matches!(build_ball(3, 3, 2), Err(TessellationError::Spherical { .. })));
        assert!(matches!(build_ball(3, 5, 2), Err(TessellationError::Spherical { .. })));
    }

    #[test]
    fn budget_is_enforced() {
        let e = build_ball_with_budget(8, 8, 6, 1000).unwrap_err();
        assert!(matches!(e, TessellationError::Budget { .. }));
    }

    #[test]
    fn deterministic_rebuild() {
        assert_eq!(build_ball(7, 6, 4).unwrap(), build_ball(7, 6, 4).unwrap());
        assert_eq!(build_ball(5, 5, 4).unwrap().export(), build_ball(5, 5, 4).unwrap().export());
    }

    #[test]
    fn export_format() {
        let b = build_ball(4, 4, 1).unwrap();
        let text = b.export();
        let first = text.lines().next().unwrap();
        assert_eq!(first, "0 0 0 e1:1 e2:2 e3:3 e4:4");
        assert!(text.lines().nth(1).unwrap().starts_with("1 1 1 e1^-1:0"));
    }

    #[test]
    fn depth_zero() {
        let b = build_ball(8, 8, 0).unwrap();
        assert_eq!(sizes(&b), vec![1]);
        assert!(b.succs(0).is_empty());
    }
}
