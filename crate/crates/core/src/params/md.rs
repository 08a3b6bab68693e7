//! Maximal disconnection `MD_k(G)`: the largest number of components of
//! `G - S` over all `k`-vertex sets `S`.
//!
//! Exact branch and bound over vertex bitmasks. Computing `MD_k` is NP-hard
//! in general (it bounds the independence number), so the search refuses
//! graphs above a configurable vertex cap.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Limits for the exponential subset searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Largest vertex count accepted by exact subset searches.
    pub cap: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { cap: 24 }
    }
}

impl SearchConfig {
    pub fn with_cap(cap: usize) -> Self {
        SearchConfig { cap }
    }

    pub(crate) fn check(&self, n: usize) -> Result<()> {
        // bitmask search is limited to 63 vertices regardless of the cap
        let cap = self.cap.min(63);
        if n > cap {
            Err(Error::SearchTooLarge { n, cap })
        } else {
            Ok(())
        }
    }
}

/// `MD_0..=MD_K` together with one optimal deleted set per `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MdProfile {
    pub values: Vec<usize>,
    pub witnesses: Vec<VertexSet>,
}

impl MdProfile {
    pub fn get(&self, k: usize) -> Option<usize> {
        self.values.get(k).copied()
    }
}

/// Number of connected components of the subgraph induced on `alive`.
pub(crate) fn count_components(adj: &[u64], alive: u64) -> usize {
    let mut rest = alive;
    let mut count = 0;
    while rest != 0 {
        let start = rest & rest.wrapping_neg();
        let mut seen = start;
        let mut frontier = start;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & alive & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        rest &= !seen;
        count += 1;
    }
    count
}

/// Incremental maximal-disconnection search over one graph.
pub struct MdSearch {
    n: usize,
    adj: Vec<u64>,
    /// vertices by decreasing degree, ties by index
    order: Vec<usize>,
    full: u64,
}

struct Frame {
    k: usize,
    best: usize,
    best_set: u64,
}

impl MdSearch {
    pub fn new(g: &Graph, cfg: SearchConfig) -> Result<Self> {
        cfg.check(g.n())?;
        let n = g.n();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Ok(MdSearch {
            n,
            adj: g.adjacency_masks(),
            order,
            full,
        })
    }

    /// `MD_k` and an optimal set, optionally seeded with a known lower bound.
    pub fn solve(&self, k: usize, seed: Option<u64>) -> (usize, u64) {
        assert!(k <= self.n, "k = {k} exceeds n = {}", self.n);
        let mut frame = Frame {
            k,
            best: 0,
            best_set: 0,
        };
        if let Some(s) = seed {
            debug_assert_eq!(s.count_ones() as usize, k);
            frame.best = count_components(&self.adj, self.full & !s);
            frame.best_set = s;
        } else {
            frame.best = usize::MAX;
        }
        if frame.best == usize::MAX {
            // any k-set is a valid starting point
            let s = self.order[..k].iter().fold(0u64, |m, &v| m | 1 << v);
            frame.best = count_components(&self.adj, self.full & !s);
            frame.best_set = s;
        }
        self.branch(0, 0, &mut frame);
        (frame.best, frame.best_set)
    }

    fn branch(&self, pos: usize, chosen: u64, f: &mut Frame) {
        let taken = chosen.count_ones() as usize;
        let need = f.k - taken;
        let alive = self.full & !chosen;
        if need == 0 {
            let c = count_components(&self.adj, alive);
            if c > f.best {
                f.best = c;
                f.best_set = chosen;
            }
            return;
        }
        if self.n - pos < need {
            return;
        }
        if self.upper_bound(pos, alive, need) <= f.best {
            return;
        }
        let v = self.order[pos];
        self.branch(pos + 1, chosen | 1 << v, f);
        self.branch(pos + 1, chosen, f);
    }

    // comps(G - S') plus the largest possible gains from `need` more
    // deletions; deleting v from H adds at most deg_H(v) - 1 components and
    // degrees only shrink as more vertices go.
    fn upper_bound(&self, pos: usize, alive: u64, need: usize) -> usize {
        let base = count_components(&self.adj, alive);
        let mut gains: Vec<usize> = self.order[pos..]
            .iter()
            .map(|&v| ((self.adj[v] & alive).count_ones() as usize).saturating_sub(1))
            .collect();
        gains.sort_unstable_by(|a, b| b.cmp(a));
        let bound = base + gains.iter().take(need).sum::<usize>();
        // G - S keeps n - k vertices, a hard ceiling
        bound.min(alive.count_ones() as usize - need)
    }

    /// Best single-vertex extension of `s`, used to seed the next level.
    fn greedy_extend(&self, s: u64) -> u64 {
        let alive = self.full & !s;
        let mut best: Option<(usize, usize)> = None;
        for &v in &self.order {
            if alive >> v & 1 == 1 {
                let c = count_components(&self.adj, alive & !(1 << v));
                if best.is_none_or(|(bc, _)| c > bc) {
                    best = Some((c, v));
                }
            }
        }
        s | 1 << best.expect("a vertex remains").1
    }

    /// Profile for `k = 0..=kmax`, reusing each witness to seed the next.
    pub fn profile(&self, kmax: usize) -> MdProfile {
        let kmax = kmax.min(self.n);
        let mut values = Vec::with_capacity(kmax + 1);
        let mut witnesses = Vec::with_capacity(kmax + 1);
        let mut prev: Option<u64> = None;
        for k in 0..=kmax {
            let seed = prev.map(|s| self.greedy_extend(s));
            let (v, s) = self.solve(k, if k == 0 { Some(0) } else { seed });
            values.push(v);
            witnesses.push(VertexSet::from_mask(s));
            prev = Some(s);
        }
        MdProfile { values, witnesses }
    }

    /// Extends the profile until `MD_k - k` reaches `target`, returning
    /// the profile up to and including that `k`.
    pub fn profile_until(&self, target: usize) -> MdProfile {
        let mut values = Vec::new();
        let mut witnesses = Vec::new();
        let mut prev: Option<u64> = None;
        for k in 0..=self.n {
            let seed = prev.map(|s| self.greedy_extend(s));
            let (v, s) = self.solve(k, if k == 0 { Some(0) } else { seed });
            values.push(v);
            witnesses.push(VertexSet::from_mask(s));
            prev = Some(s);
            if v >= k && v - k == target {
                break;
            }
        }
        MdProfile { values, witnesses }
    }
}

/// Exact `MD_k(G)`.
pub fn md(g: &Graph, k: usize, cfg: SearchConfig) -> Result<usize> {
    md_with_witness(g, k, cfg).map(|(v, _)| v)
}

/// Exact `MD_k(G)` with an optimal `k`-set.
pub fn md_with_witness(g: &Graph, k: usize, cfg: SearchConfig) -> Result<(usize, VertexSet)> {
    if k > g.n() {
        return Err(Error::Precondition(format!(
            "k = {k} exceeds the {} vertices",
            g.n()
        )));
    }
    let search = MdSearch::new(g, cfg)?;
    let (v, s) = search.solve(k, None);
    Ok((v, VertexSet::from_mask(s)))
}

/// `MD_0..=MD_kmax` (clamped to `n`).
pub fn md_profile(g: &Graph, kmax: usize, cfg: SearchConfig) -> Result<MdProfile> {
    Ok(MdSearch::new(g, cfg)?.profile(kmax))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(g: &Graph, k: usize) -> usize {
        let n = g.n();
        let adj = g.adjacency_masks();
        let full = (1u64 << n) - 1;
        (0..1u64 << n)
            .filter(|s| s.count_ones() as usize == k)
            .map(|s| count_components(&adj, full & !s))
            .max()
            .unwrap()
    }

    #[test]
    fn matches_brute_force() {
        let graphs = [
            Graph::sun(4),
            Graph::sun(5),
            Graph::star4_sum(3),
            Graph::complete(5),
            Graph::cycle(7),
            Graph::new(4),
            Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]).unwrap(),
        ];
        for g in &graphs {
            let prof = md_profile(g, g.n(), SearchConfig::default()).unwrap();
            for k in 0..=g.n() {
                assert_eq!(prof.values[k], brute(g, k), "{g:?} k={k}");
                let w = &prof.witnesses[k];
                assert_eq!(w.len(), k);
                assert_eq!(g.delete_vertices(w).graph.num_components(), prof.values[k]);
                assert_eq!(md(g, k, SearchConfig::default()).unwrap(), prof.values[k]);
            }
        }
    }

    #[test]
    fn reference_values() {
        let cfg = SearchConfig::default();
        assert_eq!(md_profile(&Graph::star(4), 4, cfg).unwrap().values, vec![1, 3, 2, 1, 0]);
        assert_eq!(md_profile(&Graph::sun(4), 2, cfg).unwrap().values, vec![1, 2, 4]);
        assert_eq!(md_profile(&Graph::sun(6), 3, cfg).unwrap().values, vec![1, 2, 4, 6]);
        assert_eq!(
            md_profile(&Graph::star4_sum(4), 4, cfg).unwrap().values,
            vec![1, 4, 5, 7, 9]
        );
    }

    #[test]
    fn cap_is_enforced() {
        let big = Graph::path(30);
        assert!(matches!(
            md(&big, 3, SearchConfig::default()),
            Err(Error::SearchTooLarge { n: 30, cap: 24 })
        ));
        assert_eq!(md(&big, 3, SearchConfig::with_cap(30)).unwrap(), 4);
    }
}
