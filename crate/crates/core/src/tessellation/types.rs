//! Extended cone types.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Cone type of a vertex, with the side of its lowest adjacent cell for
/// types `>= 2`: `Left` vertices have that cell on their right.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum ConeType {
    Origin,
    One,
    Left(u16),
    Right(u16),
}

impl ConeType {
    /// The unextended type `t`.
    pub fn level(self) -> u16 {
        match self {
            ConeType::Origin => 0,
            ConeType::One => 1,
            ConeType::Left(t) | ConeType::Right(t) => t,
        }
    }
}

impl fmt::Display for ConeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConeType::Origin => write!(f, "0"),
            ConeType::One => write!(f, "1"),
            ConeType::Left(t) => write!(f, "L{t}"),
            ConeType::Right(t) => write!(f, "R{t}"),
        }
    }
}

impl FromStr for ConeType {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("bad cone type {s:?}");
        match s {
            "0" => Ok(ConeType::Origin),
            "1" => Ok(ConeType::One),
            _ => {
                let (side, t) = s.split_at(1);
                let t: u16 = t.parse().map_err(|_| bad())?;
                if t < 2 {
                    return Err(bad());
                }
                match side {
                    "L" => Ok(ConeType::Left(t)),
                    "R" => Ok(ConeType::Right(t)),
                    _ => Err(bad()),
                }
            }
        }
    }
}

impl Serialize for ConeType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ConeType {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Row of the cone-type tables: successor counts by type and predecessor
/// and peer counts.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TableRow {
    pub succ_type1: i64,
    pub succ_type2: i64,
    pub succ_next: i64,
    pub preds: i64,
    pub peers: i64,
}

/// Expected table row for a vertex of unextended type `t` in `X(l, m)`.
pub fn table_row(l: u32, m: u32, t: u16) -> TableRow {
    let l = l as i64;
    let t = t as u32;
    if t == 0 {
        return TableRow { succ_type1: l, succ_type2: 0, succ_next: 0, preds: 0, peers: 0 };
    }
    let top = if m.is_multiple_of(2) { m / 2 } else { m - 1 };
    if t == top {
        return TableRow { succ_type1: l - 4, succ_type2: 2, succ_next: 0, preds: 2, peers: 0 };
    }
    if m % 2 == 1 && t == (m - 1) / 2 {
        return TableRow { succ_type1: l - 4, succ_type2: 1, succ_next: 1, preds: 1, peers: 1 };
    }
    TableRow { succ_type1: l - 3, succ_type2: 1, succ_next: 1, preds: 1, peers: 0 }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_roundtrip() {
        for t in [ConeType::Origin, ConeType::One, ConeType::Left(4), ConeType::Right(2)] {
            assert_eq!(t.to_string().parse::<ConeType>(), Ok(t));
        }
        assert!("L1".parse::<ConeType>().is_err());
        assert!("X3".parse::<ConeType>().is_err());
    }

    #[test]
    fn table_rows() {
        assert_eq!(table_row(8, 8, 4).succ_type1, 4);
        assert_eq!(table_row(8, 8, 4).preds, 2);
        assert_eq!(table_row(5, 5, 2).peers, 1);
        assert_eq!(table_row(5, 5, 4).preds, 2);
        assert_eq!(table_row(5, 5, 3).peers, 0);
    }
}
