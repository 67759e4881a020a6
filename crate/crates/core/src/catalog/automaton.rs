//! Cone-type automaton: the types of a vertex's successors, left to right.

use std::collections::BTreeSet;

use crate::tessellation::ConeType;

/// One successor edge `e_index` of a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Succ {
    /// 1-based position among the successors, left to right.
    pub index: u16,
    pub ctype: ConeType,
    /// Edge reaching a cell top from the right side of the cell; the top is
    /// also reached from the left, so vertex counting skips this edge.
    pub top_from_right: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Automaton {
    pub l: u32,
    pub m: u32,
    /// Type of a cell top: `m/2` for even `m`, `m - 1` for odd `m`.
    pub top: u16,
    /// Type of the two ends of a peer edge (odd `m` only).
    pub peer: Option<u16>,
}

impl Automaton {
    /// Needs `l >= 4` and `m >= 4`; smaller values make the successor
    /// pattern degenerate.
    pub fn new(l: u32, m: u32) -> Option<Automaton> {
        if l < 4 || m < 4 {
            return None;
        }
        let (top, peer) =
            if m.is_multiple_of(2) { ((m / 2) as u16, None) } else { ((m - 1) as u16, Some(((m - 1) / 2) as u16)) };
        Some(Automaton { l, m, top, peer })
    }

    fn right_side(&self, t: u16) -> (ConeType, bool) {
        if t < self.top {
            (ConeType::Right(t), false)
        } else {
            (ConeType::Left(self.top), true)
        }
    }

    pub fn succs(&self, t: ConeType) -> Vec<Succ> {
        let l = self.l as usize;
        let mut out: Vec<(ConeType, bool)> = Vec::new();
        let ones = |n: usize| std::iter::repeat_n((ConeType::One, false), n);
        match t {
            ConeType::Origin => out.extend(ones(l)),
            ConeType::One => {
                out.push(self.right_side(2));
                out.extend(ones(l - 3));
                out.push((ConeType::Left(2), false));
            }
            ConeType::Left(s) if s == self.top => {
                out.push(self.right_side(2));
                out.extend(ones(l - 4));
                out.push((ConeType::Left(2), false));
            }
            ConeType::Left(s) => {
                let peer = Some(s) == self.peer;
                out.push(self.right_side(2));
                out.extend(ones(if peer { l - 4 } else { l - 3 }));
                out.push((ConeType::Left(s + 1), false));
            }
            ConeType::Right(s) => {
                let peer = Some(s) == self.peer;
                out.push(self.right_side(s + 1));
                out.extend(ones(if peer { l - 4 } else { l - 3 }));
                out.push((ConeType::Left(2), false));
            }
        }
        out.into_iter()
            .enumerate()
            .map(|(i, (ctype, top_from_right))| Succ { index: i as u16 + 1, ctype, top_from_right })
            .collect()
    }

    pub fn succ(&self, t: ConeType, index: u16) -> ConeType {
        self.succs(t)[index as usize - 1].ctype
    }

    pub fn succ_count(&self, t: ConeType) -> u16 {
        self.succs(t).len() as u16
    }

    /// Types reachable from the origin, sorted.
    pub fn types(&self) -> Vec<ConeType> {
        let mut seen = BTreeSet::new();
        let mut stack = vec![ConeType::Origin];
        while let Some(t) = stack.pop() {
            if seen.insert(t) {
                stack.extend(self.succs(t).into_iter().map(|s| s.ctype));
            }
        }
        seen.into_iter().collect()
    }

    /// Follows `steps` rightmost successors; returns labels and final type.
    pub fn rightmost_chain(&self, mut t: ConeType, steps: u32) -> (Vec<u16>, ConeType) {
        let mut labels = Vec::new();
        for _ in 0..steps {
            let k = self.succ_count(t);
            labels.push(k);
            t = self.succ(t, k);
        }
        (labels, t)
    }

    /// Follows `steps` leftmost successors.
    pub fn leftmost_chain(&self, mut t: ConeType, steps: u32) -> (Vec<u16>, ConeType) {
        let mut labels = Vec::new();
        for _ in 0..steps {
            labels.push(1);
            t = self.succ(t, 1);
        }
        (labels, t)
    }

    /// Consecutive successor pairs `(i, i + 1)` bounding a cell with lowest
    /// vertex of type `t`; at the origin the pair `(l, 1)` closes the cycle.
    pub fn cell_corners(&self, t: ConeType) -> Vec<(u16, u16)> {
        let k = self.succ_count(t);
        let mut out: Vec<(u16, u16)> = (1..k).map(|i| (i, i + 1)).collect();
        if t == ConeType::Origin {
            out.push((k, 1));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tessellation::build_ball;

    fn check_against_ball(l: u32, m: u32, depth: u32) {
        let a = Automaton::new(l, m).unwrap();
        let ball = build_ball(l, m, depth).unwrap();
        for n in 0..depth {
            for x in ball.level(n) {
                let expect = a.succs(ball.cone_type(x));
                let got = ball.succs(x);
                assert_eq!(got.len(), expect.len(), "({l},{m}) vertex {x} of type {}", ball.cone_type(x));
                for (s, &y) in expect.iter().zip(got) {
                    assert_eq!(ball.cone_type(y), s.ctype, "({l},{m}) child {} of {x}", s.index);
                    // tops reached from the right are the leftmost successor
                    // of their right-hand predecessor
                    if s.top_from_right {
                        assert_eq!(ball.preds(y).len(), 2);
                        assert_eq!(ball.succ_label(x, y), Some(1));
                    }
                }
            }
        }
    }

    #[test]
    fn matches_ball_construction() {
        check_against_ball(8, 8, 4);
        check_against_ball(4, 4, 6);
        check_against_ball(5, 5, 6);
        check_against_ball(4, 6, 6);
        check_against_ball(7, 6, 5);
        check_against_ball(4, 5, 7);
        check_against_ball(5, 4, 6);
        check_against_ball(4, 7, 8);
    }

    #[test]
    fn degenerate_parameters_rejected() {
        assert!(Automaton::new(3, 8).is_none());
        assert!(Automaton::new(8, 3).is_none());
    }

    #[test]
    fn type_sets() {
        let a = Automaton::new(8, 8).unwrap();
        let names: Vec<String> = a.types().iter().map(|t| t.to_string()).collect();
        assert_eq!(names, ["0", "1", "L2", "L3", "L4", "R2", "R3"]);
        let a = Automaton::new(5, 5).unwrap();
        assert_eq!(a.types().len(), 7);
    }
}
