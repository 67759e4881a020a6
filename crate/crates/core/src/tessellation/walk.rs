//! Following labelled words on a ball.

use super::ball::Ball;

/// One step of a path, by edge label.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Letter {
    /// `e_i`: to the i-th successor.
    Up(u16),
    /// `e_i^-1`: back to the predecessor whose `e_i` edge arrives here.
    Down(u16),
    /// `e_p`: across the peer edge.
    Peer,
}

impl std::fmt::Display for Letter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Letter::Up(i) => write!(f, "e{i}"),
            Letter::Down(i) => write!(f, "e{i}^-1"),
            Letter::Peer => write!(f, "ep"),
        }
    }
}

impl std::str::FromStr for Letter {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if s == "ep" {
            return Ok(Letter::Peer);
        }
        let body = s.strip_prefix('e').ok_or_else(|| format!("bad letter {s:?}"))?;
        let (num, inv) = match body.strip_suffix("^-1") {
            Some(n) => (n, true),
            None => (body, false),
        };
        let i: u16 = num.parse().map_err(|_| format!("bad letter {s:?}"))?;
        if i == 0 {
            return Err(format!("bad letter {s:?}"));
        }
        Ok(if inv { Letter::Down(i) } else { Letter::Up(i) })
    }
}

/// Vertex reached by one step, if it exists in the ball and is unambiguous.
pub fn step(ball: &Ball, v: u32, letter: Letter) -> Option<u32> {
    match letter {
        Letter::Up(i) => ball.succs(v).get(i as usize - 1).copied(),
        Letter::Down(i) => {
            let mut it = ball.preds(v).iter().copied().filter(|&p| ball.succ_label(p, v) == Some(i));
            let p = it.next()?;
            it.next().is_none().then_some(p)
        }
        Letter::Peer => match (ball.left_peer(v), ball.right_peer(v)) {
            (Some(p), None) | (None, Some(p)) => Some(p),
            _ => None,
        },
    }
}

/// Vertex sequence visited by `word` from `start`.
pub fn walk(ball: &Ball, start: u32, word: &[Letter]) -> Option<Vec<u32>> {
    let mut path = Vec::with_capacity(word.len() + 1);
    path.push(start);
    let mut v = start;
    for &a in word {
        v = step(ball, v, a)?;
        path.push(v);
    }
    Some(path)
}

/// Whether a vertex sequence never immediately backtracks.
pub fn is_proper(path: &[u32]) -> bool {
    path.windows(3).all(|w| w[0] != w[2])
}
