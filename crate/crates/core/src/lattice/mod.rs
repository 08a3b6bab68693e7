//! Capped upward-closed subsets of `N²`, stored as minimal corners.
//!
//! A set `Q` with cap `n` and corners `C` has
//! `(r, s) ∈ Q ⇔ r + s ≤ n and (a, b) ≤ (r, s) for some (a, b) ∈ C`.
//! Every inertia set, elementary set and color-vector expansion in this
//! crate has this shape.

mod partition;
mod render;

pub use partition::Partition;
pub use render::{render_ascii, render_svg};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Upper bound on `r + s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cap {
    Finite(usize),
    Infinite,
}

impl Cap {
    pub fn allows(self, sum: usize) -> bool {
        match self {
            Cap::Finite(n) => sum <= n,
            Cap::Infinite => true,
        }
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Cap::Finite(n) => Some(n),
            Cap::Infinite => None,
        }
    }

    fn add(self, other: Cap) -> Cap {
        match (self, other) {
            (Cap::Finite(a), Cap::Finite(b)) => Cap::Finite(a + b),
            _ => Cap::Infinite,
        }
    }

    fn min(self, n: usize) -> Cap {
        match self {
            Cap::Finite(m) => Cap::Finite(m.min(n)),
            Cap::Infinite => Cap::Finite(n),
        }
    }
}

/// A capped upward-closed lattice set in canonical corner form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticeSet {
    cap: Cap,
    /// minimal antichain, increasing in `r` (hence decreasing in `s`)
    corners: Vec<(usize, usize)>,
}

impl LatticeSet {
    /// Builds the set generated by `points`, dropping points over the cap.
    pub fn new(cap: Cap, points: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut pts: Vec<(usize, usize)> = points
            .into_iter()
            .filter(|&(r, s)| cap.allows(r + s))
            .collect();
        pts.sort_unstable();
        let mut corners: Vec<(usize, usize)> = Vec::with_capacity(pts.len());
        for p in pts {
            // sorted by r, so p is dominated iff some kept corner has s <= p.s
            if corners.last().is_none_or(|&(_, s)| p.1 < s) {
                corners.push(p);
            }
        }
        LatticeSet { cap, corners }
    }

    pub fn finite(cap: usize, points: impl IntoIterator<Item = (usize, usize)>) -> Self {
        LatticeSet::new(Cap::Finite(cap), points)
    }

    pub fn empty(cap: Cap) -> Self {
        LatticeSet {
            cap,
            corners: Vec::new(),
        }
    }

    /// The single point `(r, s)`, capped at `r + s`.
    pub fn point(r: usize, s: usize) -> Self {
        LatticeSet::finite(r + s, [(r, s)])
    }

    /// `N²_{[i,j]}`: points with `i <= r + s <= j`, for `i <= j <= n`.
    pub fn region(i: usize, j: usize, n: usize) -> Result<Self> {
        if i > j || j > n {
            return Err(Error::InvalidRegion { i, j, n });
        }
        Ok(LatticeSet::finite(j, (0..=i).map(|a| (a, i - a))))
    }

    pub fn cap(&self) -> Cap {
        self.cap
    }

    pub fn corners(&self) -> &[(usize, usize)] {
        &self.corners
    }

    pub fn is_empty(&self) -> bool {
        self.corners.is_empty()
    }

    pub fn contains(&self, r: usize, s: usize) -> bool {
        self.cap.allows(r + s) && self.corners.iter().any(|&(a, b)| a <= r && b <= s)
    }

    /// `Q + R = {q + r}`; the cap is the sum of caps.
    pub fn minkowski_sum(&self, other: &LatticeSet) -> LatticeSet {
        let pts = self
            .corners
            .iter()
            .flat_map(|&(a, b)| other.corners.iter().map(move |&(c, d)| (a + c, b + d)));
        LatticeSet::new(self.cap.add(other.cap), pts)
    }

    /// Sum of many sets; the empty sum is `{(0,0)}` with cap 0.
    pub fn sum_all<'a>(sets: impl IntoIterator<Item = &'a LatticeSet>) -> LatticeSet {
        sets.into_iter()
            .fold(LatticeSet::point(0, 0), |acc, q| acc.minkowski_sum(q))
    }

    /// Union of two sets with the same cap.
    ///
    /// # Panics
    /// If the caps differ; such a union is not of this shape in general.
    pub fn union(&self, other: &LatticeSet) -> LatticeSet {
        assert_eq!(self.cap, other.cap, "union needs equal caps");
        LatticeSet::new(
            self.cap,
            self.corners.iter().chain(&other.corners).copied(),
        )
    }

    /// `[Q]_n = Q ∩ N²_{≤n}`.
    pub fn truncate(&self, n: usize) -> LatticeSet {
        LatticeSet::new(self.cap.min(n), self.corners.iter().copied())
    }

    /// `Q + {(a, b)}`.
    pub fn shift(&self, a: usize, b: usize) -> LatticeSet {
        self.minkowski_sum(&LatticeSet::point(a, b))
    }

    /// Northeast expansion: the same corners with the cap removed.
    pub fn ne_expand(&self) -> LatticeSet {
        LatticeSet {
            cap: Cap::Infinite,
            corners: self.corners.clone(),
        }
    }

    /// Whether the two sets have the same northeast expansion.
    pub fn ne_equivalent(&self, other: &LatticeSet) -> bool {
        self.corners == other.corners
    }

    /// Reflection `(r, s) -> (s, r)`.
    pub fn reflect(&self) -> LatticeSet {
        LatticeSet::new(self.cap, self.corners.iter().map(|&(r, s)| (s, r)))
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.reflect()
    }

    pub fn is_subset(&self, other: &LatticeSet) -> bool {
        if self.is_empty() {
            return true;
        }
        let caps_ok = match (self.cap, other.cap) {
            (_, Cap::Infinite) => true,
            (Cap::Infinite, Cap::Finite(_)) => false,
            (Cap::Finite(a), Cap::Finite(b)) => a <= b,
        };
        caps_ok && self.corners.iter().all(|&(r, s)| other.contains(r, s))
    }

    /// Members with `r + s = m`.
    pub fn stripe(&self, m: usize) -> Stripe {
        let rs = (0..=m).filter(|&r| self.contains(r, m - r)).collect();
        Stripe { rank: m, rs }
    }

    /// Whether every nonempty rank slice is convex. For an infinite cap the
    /// check stops once slices stabilize.
    pub fn stripes_convex(&self) -> bool {
        let top = match self.cap {
            Cap::Finite(n) => n,
            Cap::Infinite => {
                let mr = self.corners.iter().map(|c| c.0).max().unwrap_or(0);
                let ms = self.corners.iter().map(|c| c.1).max().unwrap_or(0);
                mr + ms
            }
        };
        (0..=top).all(|m| self.stripe(m).is_convex())
    }

    /// All members, by increasing `s` then `r`.
    ///
    /// # Panics
    /// If the cap is infinite.
    pub fn members(&self) -> Vec<(usize, usize)> {
        let n = self.cap.finite().expect("members needs a finite cap");
        (0..=n)
            .flat_map(|s| (0..=n - s).map(move |r| (r, s)))
            .filter(|&(r, s)| self.contains(r, s))
            .collect()
    }

    /// Smallest `k` with `(k, 0)` a member.
    pub fn axis_min(&self) -> Option<usize> {
        self.corners
            .iter()
            .find(|c| c.1 == 0)
            .map(|c| c.0)
            .filter(|&k| self.cap.allows(k))
    }

    /// Inertial partition `(π_0, …, π_{π_0 - 1})`, `π_i = min{r : (r, i) ∈ Q}`.
    pub fn to_partition(&self) -> Result<Partition> {
        let Some(width) = self.axis_min() else {
            if self.is_empty() {
                return Ok(Partition::new(Vec::new()));
            }
            return Err(Error::NotPartitionShaped(format!(
                "no point on the r-axis in {self}"
            )));
        };
        let mut parts = Vec::with_capacity(width);
        for i in 0..width {
            let row_min = self
                .corners
                .iter()
                .filter(|c| c.1 <= i)
                .map(|c| c.0)
                .min()
                .filter(|&r| self.cap.allows(r + i));
            match row_min {
                Some(r) if r > 0 => parts.push(r),
                _ => {
                    return Err(Error::NotPartitionShaped(format!(
                        "row {i} of {self} has no positive minimum"
                    )))
                }
            }
        }
        Ok(Partition::new(parts))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(LatticeJson::from(self)).expect("plain data")
    }

    pub fn from_json(value: serde_json::Value) -> Result<Self> {
        let raw: LatticeJson = serde_json::from_value(value)?;
        Ok(raw.into())
    }
}

impl fmt::Display for LatticeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cap = match self.cap {
            Cap::Finite(n) => n.to_string(),
            Cap::Infinite => "inf".into(),
        };
        let corners: Vec<String> = self
            .corners
            .iter()
            .map(|(r, s)| format!("({r},{s})"))
            .collect();
        write!(f, "cap {cap}, corners {{{}}}", corners.join(","))
    }
}

/// Wire form: `{"cap": n | null, "corners": [[r, s], …]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LatticeJson {
    pub cap: Option<usize>,
    pub corners: Vec<[usize; 2]>,
}

impl From<&LatticeSet> for LatticeJson {
    fn from(q: &LatticeSet) -> Self {
        LatticeJson {
            cap: q.cap.finite(),
            corners: q.corners.iter().map(|&(r, s)| [r, s]).collect(),
        }
    }
}

impl From<LatticeJson> for LatticeSet {
    fn from(raw: LatticeJson) -> Self {
        let cap = raw.cap.map_or(Cap::Infinite, Cap::Finite);
        LatticeSet::new(cap, raw.corners.into_iter().map(|[r, s]| (r, s)))
    }
}

/// The points of a set on one antidiagonal `r + s = rank`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stripe {
    pub rank: usize,
    /// `r`-coordinates, ascending
    pub rs: Vec<usize>,
}

impl Stripe {
    pub fn points(&self) -> Vec<(usize, usize)> {
        self.rs.iter().map(|&r| (r, self.rank - r)).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.rs.is_empty()
    }

    pub fn is_symmetric(&self) -> bool {
        self.rs.iter().all(|&r| self.rs.binary_search(&(self.rank - r)).is_ok())
    }

    /// Consecutive `r`-projection. Empty stripes count as convex.
    pub fn is_convex(&self) -> bool {
        self.rs.windows(2).all(|w| w[1] == w[0] + 1)
    }
}
