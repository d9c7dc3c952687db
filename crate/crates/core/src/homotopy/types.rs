//! Wedges of spheres under suspension, join and wedge.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A homotopy type of the form "point" or a finite wedge of spheres.
///
/// `Wedge({-1: 1})` is the empty complex `{∅}`, the sphere `S^-1`. It is the
/// unit for join and cannot be wedged with anything non-contractible.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum HomotopyType {
    Contractible,
    Wedge(BTreeMap<i64, u64>),
}

fn overflow() -> Error {
    Error::InvalidHomotopyType("sphere multiplicity overflows u64".into())
}

impl HomotopyType {
    pub fn point() -> HomotopyType {
        HomotopyType::Contractible
    }

    /// The empty complex, `S^-1`.
    pub fn empty() -> HomotopyType {
        HomotopyType::sphere(-1)
    }

    pub fn sphere(dim: i64) -> HomotopyType {
        HomotopyType::spheres(1, dim)
    }

    /// `count` copies of `S^dim` wedged together; zero copies is a point.
    pub fn spheres(count: u64, dim: i64) -> HomotopyType {
        assert!(dim >= -1, "sphere dimension {dim} < -1");
        assert!(dim >= 0 || count <= 1, "several copies of S^-1");
        if count == 0 {
            HomotopyType::Contractible
        } else {
            HomotopyType::Wedge(BTreeMap::from([(dim, count)]))
        }
    }

    /// Validates a dimension → multiplicity map. Zero multiplicities are
    /// dropped and an empty map is a point.
    pub fn from_map(map: BTreeMap<i64, u64>) -> Result<HomotopyType> {
        let map: BTreeMap<i64, u64> = map.into_iter().filter(|&(_, m)| m > 0).collect();
        if let Some((&d, _)) = map.iter().find(|(&d, _)| d < -1) {
            return Err(Error::InvalidHomotopyType(format!("sphere dimension {d}")));
        }
        if map.contains_key(&-1) && (map.len() > 1 || map[&-1] > 1) {
            return Err(Error::InvalidHomotopyType(
                "the empty complex S^-1 cannot be wedged with anything".into(),
            ));
        }
        Ok(if map.is_empty() { HomotopyType::Contractible } else { HomotopyType::Wedge(map) })
    }

    pub fn is_contractible(&self) -> bool {
        matches!(self, HomotopyType::Contractible)
    }

    /// Reduced Betti numbers implied by the type (all of them; torsion-free).
    pub fn betti(&self) -> BTreeMap<i64, u64> {
        match self {
            HomotopyType::Contractible => BTreeMap::new(),
            HomotopyType::Wedge(m) => m.clone(),
        }
    }

    /// Total number of spheres.
    pub fn sphere_count(&self) -> u64 {
        self.betti().values().sum()
    }

    pub fn suspend(&self) -> HomotopyType {
        match self {
            HomotopyType::Contractible => HomotopyType::Contractible,
            HomotopyType::Wedge(m) => HomotopyType::Wedge(m.iter().map(|(&d, &c)| (d + 1, c)).collect()),
        }
    }

    /// `count`-fold suspension.
    pub fn suspend_times(&self, count: usize) -> HomotopyType {
        (0..count).fold(self.clone(), |t, _| t.suspend())
    }

    pub fn join(&self, other: &HomotopyType) -> Result<HomotopyType> {
        let (HomotopyType::Wedge(a), HomotopyType::Wedge(b)) = (self, other) else {
            return Ok(HomotopyType::Contractible);
        };
        let mut out = BTreeMap::new();
        for (&p, &x) in a {
            for (&q, &y) in b {
                let c = x.checked_mul(y).ok_or_else(overflow)?;
                let slot: &mut u64 = out.entry(p + q + 1).or_default();
                *slot = slot.checked_add(c).ok_or_else(overflow)?;
            }
        }
        HomotopyType::from_map(out)
    }

    pub fn wedge(&self, other: &HomotopyType) -> Result<HomotopyType> {
        let mut out = self.betti();
        for (d, c) in other.betti() {
            let slot = out.entry(d).or_default();
            *slot = slot.checked_add(c).ok_or_else(overflow)?;
        }
        HomotopyType::from_map(out)
    }

    /// Wedge of an arbitrary collection; a point when it is empty.
    pub fn wedge_all<'a, I: IntoIterator<Item = &'a HomotopyType>>(items: I) -> Result<HomotopyType> {
        items.into_iter().try_fold(HomotopyType::Contractible, |acc, t| acc.wedge(t))
    }
}

impl fmt::Display for HomotopyType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomotopyType::Contractible => f.write_str("point"),
            HomotopyType::Wedge(m) => {
                for (k, (d, c)) in m.iter().enumerate() {
                    if k > 0 {
                        f.write_str(" v ")?;
                    }
                    if *c == 1 {
                        write!(f, "S^{d}")?;
                    } else {
                        write!(f, "wedge({c}, S^{d})")?;
                    }
                }
                Ok(())
            }
        }
    }
}

impl FromStr for HomotopyType {
    type Err = Error;

    fn from_str(s: &str) -> Result<HomotopyType> {
        let s = s.trim();
        if s == "point" {
            return Ok(HomotopyType::Contractible);
        }
        let bad = || Error::Parse(format!("bad homotopy type {s:?}"));
        let mut map = BTreeMap::new();
        for term in s.split(" v ") {
            let term = term.trim();
            let (count, sphere) = match term.strip_prefix("wedge(").and_then(|t| t.strip_suffix(')')) {
                Some(inner) => {
                    let (c, sph) = inner.split_once(',').ok_or_else(bad)?;
                    (c.trim().parse::<u64>().map_err(|_| bad())?, sph.trim())
                }
                None => (1, term),
            };
            let dim: i64 = sphere.strip_prefix("S^").ok_or_else(bad)?.parse().map_err(|_| bad())?;
            *map.entry(dim).or_insert(0) += count;
        }
        HomotopyType::from_map(map)
    }
}

impl Serialize for HomotopyType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for HomotopyType {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}
