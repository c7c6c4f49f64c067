//! Brute-force ground truth: dissections of a labelled convex polygon, the
//! root-edge functional equation solved by fixed-point iteration, and
//! non-crossing partial chord diagrams.
//!
//! The `(n+2)`-gon has vertices `0..=n+1`. A diagonal `(i, j)` is stored
//! with `i < j` and never joins two polygon neighbours.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact_arith::Integer;
use crate::power_series::TruncatedSeries;
use crate::symbols::TileRule;

/// Largest `n` the exhaustive dissection enumerator accepts by default.
pub const DEFAULT_DISSECTION_CAP: usize = 12;
/// Largest number of circle points the chord enumerator accepts by default.
pub const DEFAULT_CHORD_CAP: usize = 16;

/// Hard ceiling on `n`: faces are stored as 64-bit vertex masks.
pub const MAX_DISSECTION_N: usize = 62;

pub type Diagonal = (usize, usize);

/// Whether two diagonals cross in the open interior of the polygon.
/// Diagonals sharing an endpoint do not cross.
pub fn crosses((a, b): Diagonal, (c, d): Diagonal) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// All diagonals of the `(n+2)`-gon in lexicographic order.
pub fn candidate_diagonals(n: usize) -> Vec<Diagonal> {
    let v = n + 2;
    let mut out = Vec::new();
    for i in 0..v {
        for j in (i + 2)..v {
            if !(i == 0 && j == v - 1) {
                out.push((i, j));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dissection {
    n: usize,
    diagonals: BTreeSet<Diagonal>,
}

impl Dissection {
    pub fn new<I: IntoIterator<Item = Diagonal>>(n: usize, diagonals: I) -> Result<Self> {
        let v = n + 2;
        let mut set = BTreeSet::new();
        for (i, j) in diagonals {
            let (a, b) = if i < j { (i, j) } else { (j, i) };
            if b >= v {
                return Err(Error::DomainError(format!("vertex {b} outside the {v}-gon")));
            }
            if b - a < 2 || (a == 0 && b == v - 1) {
                return Err(Error::DomainError(format!("({a},{b}) is a side of the {v}-gon")));
            }
            set.insert((a, b));
        }
        for &d in &set {
            if let Some(&e) = set.iter().find(|&&e| crosses(d, e)) {
                return Err(Error::DomainError(format!("diagonals {d:?} and {e:?} cross")));
            }
        }
        Ok(Dissection { n, diagonals: set })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diagonals(&self) -> &BTreeSet<Diagonal> {
        &self.diagonals
    }
}

/// `n=<n> diagonals=(i,j);(k,l);... tiles=[s1,s2,...]`
impl fmt::Display for Dissection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let diags: Vec<String> = self.diagonals.iter().map(|(i, j)| format!("({i},{j})")).collect();
        let sides: Vec<String> = tiles_of(self).iter().map(|t| t.side_count().to_string()).collect();
        write!(f, "n={} diagonals={} tiles=[{}]", self.n, diags.join(";"), sides.join(","))
    }
}

/// A face of a dissection, vertices in increasing (hence cyclic) order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Tile {
    vertices: Vec<usize>,
}

impl Tile {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn side_count(&self) -> usize {
        self.vertices.len()
    }
}

/// Faces of `d`, found by splitting the polygon along one diagonal at a
/// time. Sorted by vertex list.
pub fn tiles_of(d: &Dissection) -> Vec<Tile> {
    fn split(vertices: Vec<usize>, diagonals: &[Diagonal], out: &mut Vec<Tile>) {
        let pos = |x: usize| vertices.binary_search(&x).ok();
        let cut = diagonals.iter().find_map(|&(a, b)| {
            let (pa, pb) = (pos(a)?, pos(b)?);
            // A side of this sub-polygon is not a cut.
            (pb - pa >= 2 && !(pa == 0 && pb == vertices.len() - 1)).then_some((a, b))
        });
        match cut {
            None => out.push(Tile { vertices }),
            Some((a, b)) => {
                let inner: Vec<usize> = vertices.iter().copied().filter(|&x| a <= x && x <= b).collect();
                let outer: Vec<usize> = vertices.iter().copied().filter(|&x| x <= a || b <= x).collect();
                split(inner, diagonals, out);
                split(outer, diagonals, out);
            }
        }
    }
    let diagonals: Vec<Diagonal> = d.diagonals.iter().copied().collect();
    let mut out = Vec::with_capacity(diagonals.len() + 1);
    split((0..d.n + 2).collect(), &diagonals, &mut out);
    out.sort();
    out
}

/// Depth-first walk over every non-crossing diagonal set of the
/// `(n+2)`-gon, adding candidates in lexicographic order. Each visited node
/// is a dissection; faces are kept as vertex bitmasks and split in place as
/// diagonals are added.
struct Walker<'a, F> {
    candidates: Vec<Diagonal>,
    chosen: Vec<Diagonal>,
    faces: Vec<u64>,
    visit: &'a mut F,
}

impl<F: FnMut(&[Diagonal], &[u64])> Walker<'_, F> {
    fn walk(&mut self, from: usize) {
        (self.visit)(&self.chosen, &self.faces);
        for idx in from..self.candidates.len() {
            let d = self.candidates[idx];
            if self.chosen.iter().any(|&c| crosses(c, d)) {
                continue;
            }
            let (a, b) = d;
            let ends = (1u64 << a) | (1u64 << b);
            let f = self
                .faces
                .iter()
                .position(|&m| m & ends == ends)
                .expect("a non-crossing diagonal lies in one face");
            let face = self.faces[f];
            let upto_b = if b == 63 { u64::MAX } else { (1u64 << (b + 1)) - 1 };
            let span = upto_b & !((1u64 << a) - 1);
            let strictly_inside = span & !ends;
            self.faces[f] = face & span;
            self.faces.push(face & !strictly_inside);
            self.chosen.push(d);
            self.walk(idx + 1);
            self.chosen.pop();
            self.faces.pop();
            self.faces[f] = face;
        }
    }
}

fn walk_dissections<F: FnMut(&[Diagonal], &[u64])>(n: usize, mut visit: F) {
    let v = n + 2;
    let full = if v == 64 { u64::MAX } else { (1u64 << v) - 1 };
    let mut walker = Walker {
        candidates: candidate_diagonals(n),
        chosen: Vec::new(),
        faces: vec![full],
        visit: &mut visit,
    };
    walker.walk(0);
}

/// Every dissection of the `(n+2)`-gon, in the enumerator's visiting order.
fn check_cap(n: usize, cap: usize) -> Result<()> {
    let cap = cap.min(MAX_DISSECTION_N);
    if n > cap {
        return Err(Error::CapExceeded { requested: n, cap });
    }
    Ok(())
}

pub fn enumerate_dissections(n: usize, cap: usize) -> Result<Vec<Dissection>> {
    check_cap(n, cap)?;
    let mut out = Vec::new();
    walk_dissections(n, |chosen, _| {
        out.push(Dissection {
            n,
            diagonals: chosen.iter().copied().collect(),
        })
    });
    Ok(out)
}

/// Number of dissections of the `(n+2)`-gon all of whose tiles satisfy
/// `rule`, by exhaustive enumeration. `n = 0` gives 1 for every rule.
pub fn enumerate_count(n: usize, rule: &TileRule, cap: usize) -> Result<Integer> {
    check_cap(n, cap)?;
    if n == 0 {
        return Ok(Integer::from(1));
    }
    let allowed: Vec<bool> = (0..=n + 2).map(|s| rule.allows(s)).collect();
    let mut count: u64 = 0;
    walk_dissections(n, |_, faces| {
        if faces.iter().all(|m| allowed[m.count_ones() as usize]) {
            count += 1;
        }
    });
    Ok(Integer::from(count))
}

/// `a_0 ..= a_max` from `A = 1 + sum_{s in rule} x^(s-2) A^(s-1)`.
///
/// Iteration `k` runs at precision `k`; one substitution fixes one more
/// coefficient because every term on the right carries a factor `x`.
pub fn count_by_series(max: usize, rule: &TileRule) -> Vec<Integer> {
    let mut a = TruncatedSeries::one(0);
    for k in 1..=max {
        let prev = TruncatedSeries::new(a.coeffs().to_vec(), k);
        let mut next = TruncatedSeries::one(k);
        let mut power = prev.clone();
        for s in 3..=k + 2 {
            power = power.mul(&prev);
            if rule.allows(s) {
                next = next.add(&power.shift_up(s - 2));
            }
        }
        a = next;
    }
    a.to_integers().expect("integer recursion stays integral")
}

/// Partial matchings of `p` labelled points on a circle into pairwise
/// disjoint chords: no shared endpoints, no crossings. Includes the empty
/// matching.
pub fn count_chord_diagrams(p: usize, cap: usize) -> Result<Integer> {
    fn go(i: usize, p: usize, used: &mut [bool], chords: &mut Vec<Diagonal>) -> u64 {
        if i == p {
            return 1;
        }
        if used[i] {
            return go(i + 1, p, used, chords);
        }
        // i stays unmatched
        let mut total = go(i + 1, p, used, chords);
        for j in (i + 1)..p {
            if used[j] || chords.iter().any(|&c| crosses(c, (i, j))) {
                continue;
            }
            used[j] = true;
            chords.push((i, j));
            total += go(i + 1, p, used, chords);
            chords.pop();
            used[j] = false;
        }
        total
    }
    if p > cap {
        return Err(Error::CapExceeded { requested: p, cap });
    }
    let mut used = vec![false; p];
    Ok(Integer::from(go(0, p, &mut used, &mut Vec::new())))
}
