use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Which tile side-counts a dissection may use.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TileRule {
    Any,
    TrianglesOnly,
    NoTriangles,
    OddOnly,
    EvenOnly,
    Custom(CustomTiles),
}

/// A finite set of side-counts, optionally together with every side-count
/// from `tail_from` upwards.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CustomTiles {
    sizes: BTreeSet<u32>,
    tail_from: Option<u32>,
}

impl CustomTiles {
    pub fn new<I: IntoIterator<Item = u32>>(sizes: I, tail_from: Option<u32>) -> Result<Self> {
        let sizes: BTreeSet<u32> = sizes.into_iter().collect();
        if sizes.is_empty() && tail_from.is_none() {
            return Err(Error::InvalidTileSet("no side-count is allowed".into()));
        }
        if let Some(&s) = sizes.iter().chain(tail_from.iter()).find(|&&s| s < 3) {
            return Err(Error::InvalidTileSet(format!("side-count {s} is below 3")));
        }
        Ok(CustomTiles { sizes, tail_from })
    }

    pub fn sizes(&self) -> &BTreeSet<u32> {
        &self.sizes
    }

    pub fn tail_from(&self) -> Option<u32> {
        self.tail_from
    }
}

/// The allowed side-counts as a finite set plus at most one arithmetic
/// progression `start, start + step, ...`. Finite members already covered
/// by the progression are removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SideCounts {
    pub finite: BTreeSet<u32>,
    pub progression: Option<(u32, u32)>,
}

impl TileRule {
    pub fn custom<I: IntoIterator<Item = u32>>(sizes: I, tail_from: Option<u32>) -> Result<Self> {
        CustomTiles::new(sizes, tail_from).map(TileRule::Custom)
    }

    /// The five rules with a name of their own.
    pub fn named() -> [TileRule; 5] {
        [
            TileRule::Any,
            TileRule::TrianglesOnly,
            TileRule::NoTriangles,
            TileRule::OddOnly,
            TileRule::EvenOnly,
        ]
    }

    pub fn allows(&self, sides: usize) -> bool {
        if sides < 3 {
            return false;
        }
        match self {
            TileRule::Any => true,
            TileRule::TrianglesOnly => sides == 3,
            TileRule::NoTriangles => sides >= 4,
            TileRule::OddOnly => sides % 2 == 1,
            TileRule::EvenOnly => sides.is_multiple_of(2),
            TileRule::Custom(c) => {
                c.sizes.contains(&(sides as u32)) || c.tail_from.is_some_and(|t| sides as u32 >= t)
            }
        }
    }

    pub fn side_counts(&self) -> SideCounts {
        let (finite, progression) = match self {
            TileRule::Any => (BTreeSet::new(), Some((3, 1))),
            TileRule::TrianglesOnly => (BTreeSet::from([3]), None),
            TileRule::NoTriangles => (BTreeSet::new(), Some((4, 1))),
            TileRule::OddOnly => (BTreeSet::new(), Some((3, 2))),
            TileRule::EvenOnly => (BTreeSet::new(), Some((4, 2))),
            TileRule::Custom(c) => (c.sizes.clone(), c.tail_from.map(|t| (t, 1))),
        };
        let finite = finite
            .into_iter()
            .filter(|&s| match progression {
                Some((start, step)) => s < start || (s - start) % step != 0,
                None => true,
            })
            .collect();
        SideCounts { finite, progression }
    }

    /// Allowed side-counts not exceeding `max`, ascending.
    pub fn sizes_up_to(&self, max: usize) -> impl Iterator<Item = usize> + '_ {
        (3..=max).filter(move |&s| self.allows(s))
    }

    pub fn keyword(&self) -> Option<&'static str> {
        match self {
            TileRule::Any => Some("any"),
            TileRule::TrianglesOnly => Some("triangles"),
            TileRule::NoTriangles => Some("notriangles"),
            TileRule::OddOnly => Some("odd"),
            TileRule::EvenOnly => Some("even"),
            TileRule::Custom(_) => None,
        }
    }
}

impl fmt::Display for TileRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(k) = self.keyword() {
            return f.write_str(k);
        }
        let TileRule::Custom(c) = self else { unreachable!() };
        let mut parts: Vec<String> = c.sizes.iter().map(u32::to_string).collect();
        if let Some(t) = c.tail_from {
            parts.push(format!("{t}+"));
        }
        f.write_str(&parts.join(","))
    }
}

/// Accepts a keyword (`any`, `triangles`, `notriangles`, `odd`, `even`) or a
/// comma list of side-counts whose last entry may carry a `+` suffix
/// meaning "and every larger side-count".
impl FromStr for TileRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.to_ascii_lowercase().as_str() {
            "any" => return Ok(TileRule::Any),
            "triangles" => return Ok(TileRule::TrianglesOnly),
            "notriangles" => return Ok(TileRule::NoTriangles),
            "odd" => return Ok(TileRule::OddOnly),
            "even" => return Ok(TileRule::EvenOnly),
            _ => {}
        }
        if s.is_empty() {
            return Err(Error::InvalidTileSet("empty tile specification".into()));
        }
        let items: Vec<&str> = s.split(',').map(str::trim).collect();
        let mut sizes = Vec::new();
        let mut tail = None;
        for (i, item) in items.iter().enumerate() {
            let (digits, is_tail) = match item.strip_suffix('+') {
                Some(d) => (d.trim(), true),
                None => (*item, false),
            };
            if is_tail && i + 1 != items.len() {
                return Err(Error::ParseError(format!("`+` is only allowed on the last entry: `{s}`")));
            }
            let v: u32 = digits
                .parse()
                .map_err(|_| Error::ParseError(format!("bad side-count `{item}` in `{s}`")))?;
            if is_tail {
                tail = Some(v);
            } else {
                sizes.push(v);
            }
        }
        TileRule::custom(sizes, tail)
    }
}
