//! Graph parameters that determine inertia sets of trees: edge boundaries,
//! `f_G(S)`, maximal disconnection, path cover number, `c(T)` and `r_k(T)`.

mod md;
mod path_cover;

pub use md::{md, md_profile, md_with_witness, MdProfile, MdSearch, SearchConfig};
pub use path_cover::path_cover_number;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// `|E_G(S)|`: edges with at least one endpoint in `S`.
pub fn edge_boundary_count(g: &Graph, s: &VertexSet) -> usize {
    g.edges()
        .filter(|&(u, v)| s.contains(u) || s.contains(v))
        .count()
}

/// `f_G(S) = |E_G(S)| - 2|S| + 1`.
pub fn f_value(g: &Graph, s: &VertexSet) -> i64 {
    edge_boundary_count(g, s) as i64 - 2 * s.len() as i64 + 1
}

/// `max_S f_T(S)` over all vertex subsets of a tree, by enumeration.
pub fn path_cover_by_search(t: &Graph, cfg: SearchConfig) -> Result<usize> {
    if !t.is_tree() {
        return Err(Error::NotTree);
    }
    Ok(optimal_f_sets(t, cfg)?.0 as usize)
}

/// Maximum of `f_G` and every subset attaining it, as bitmasks.
pub fn optimal_f_sets(g: &Graph, cfg: SearchConfig) -> Result<(i64, Vec<u64>)> {
    cfg.check(g.n())?;
    let n = g.n();
    let edges: Vec<u64> = g.edges().map(|(u, v)| 1u64 << u | 1u64 << v).collect();
    let mut best = i64::MIN;
    let mut sets = Vec::new();
    for s in 0..1u64 << n {
        let touched = edges.iter().filter(|&&e| e & s != 0).count() as i64;
        let f = touched - 2 * s.count_ones() as i64 + 1;
        if f > best {
            best = f;
            sets.clear();
        }
        if f == best {
            sets.push(s);
        }
    }
    Ok((best, sets))
}

/// `c(F)`: smallest `k` with `MD_k - k = P`, summed over components.
pub fn c_param(f: &Graph, cfg: SearchConfig) -> Result<usize> {
    let mut total = 0;
    for comp in forest_components(f)? {
        total += tree_md_until_optimal(&comp, cfg)?.1.values.len() - 1;
    }
    Ok(total)
}

/// `r_k(T) = MD_k(T) + k - 1` for `0 <= k <= c(T)`.
pub fn r_profile(t: &Graph, cfg: SearchConfig) -> Result<Vec<usize>> {
    if !t.is_tree() {
        return Err(Error::NotTree);
    }
    let (_, prof) = tree_md_until_optimal(t, cfg)?;
    Ok(prof
        .values
        .iter()
        .enumerate()
        .map(|(k, &m)| m + k - 1)
        .collect())
}

/// `max_{k <= K} (MD_k(G) - k)`, a lower bound on maximum nullity that is
/// exact on forests.
pub fn max_mult_bound(g: &Graph, kmax: usize, cfg: SearchConfig) -> Result<usize> {
    let prof = md_profile(g, kmax, cfg)?;
    Ok(prof
        .values
        .iter()
        .enumerate()
        .map(|(k, &m)| m as i64 - k as i64)
        .max()
        .unwrap_or(0)
        .max(0) as usize)
}

pub(crate) fn forest_components(f: &Graph) -> Result<Vec<Graph>> {
    if !f.is_forest() {
        return Err(Error::NotForest);
    }
    Ok(f
        .components()
        .iter()
        .map(|c| f.induced(c.as_slice()).graph)
        .collect())
}

/// `P(T)` and `MD_0..=MD_{c(T)}` for a tree.
pub(crate) fn tree_md_until_optimal(t: &Graph, cfg: SearchConfig) -> Result<(usize, MdProfile)> {
    let p = path_cover_number(t)?;
    let prof = MdSearch::new(t, cfg)?.profile_until(p);
    Ok((p, prof))
}

/// Summary parameters of a forest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeParams {
    pub n: usize,
    /// number of components
    pub components: usize,
    #[serde(rename = "P")]
    pub p: usize,
    pub mr: usize,
    pub c: usize,
    /// `MD_0..=MD_c`
    #[serde(rename = "MD")]
    pub md: Vec<usize>,
    /// `r_k = MD_k + k - (number of components)`, `0 <= k <= c`
    pub r: Vec<usize>,
    /// `max_k (MD_k - k)`; equals `P` on forests
    #[serde(rename = "Mbound")]
    pub m_bound: usize,
}

impl TreeParams {
    pub fn compute(f: &Graph, cfg: SearchConfig) -> Result<Self> {
        let comps = forest_components(f)?;
        let mut p = 0;
        let mut c = 0;
        for t in &comps {
            let (pt, prof) = tree_md_until_optimal(t, cfg)?;
            p += pt;
            c += prof.values.len() - 1;
        }
        let prof = md_profile(f, c, cfg)?;
        let ell = comps.len();
        let r = prof
            .values
            .iter()
            .enumerate()
            .map(|(k, &m)| m + k - ell)
            .collect();
        Ok(TreeParams {
            n: f.n(),
            components: ell,
            p,
            mr: f.n() - p,
            c,
            md: prof.values.clone(),
            r,
            m_bound: p,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::nonisomorphic_trees;

    fn ex46() -> Graph {
        Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]).unwrap()
    }

    #[test]
    fn boundary_and_f() {
        let s4 = Graph::star(4);
        assert_eq!(edge_boundary_count(&s4, &VertexSet::new([0])), 3);
        assert_eq!(edge_boundary_count(&s4, &VertexSet::empty()), 0);
        assert_eq!(edge_boundary_count(&Graph::path(4), &VertexSet::new([0, 3])), 2);
        assert_eq!(f_value(&Graph::sun(4), &VertexSet::empty()), 1);
        for n in 3..8 {
            assert_eq!(f_value(&Graph::star(n), &VertexSet::new([0])), n as i64 - 2);
        }
        for v in 1..4 {
            assert_eq!(f_value(&Graph::path(5), &VertexSet::new([v])), 1);
        }
    }

    #[test]
    fn path_cover_by_search_examples() {
        let cfg = SearchConfig::default();
        assert_eq!(path_cover_by_search(&Graph::star(4), cfg).unwrap(), 2);
        assert_eq!(path_cover_by_search(&Graph::path(7), cfg).unwrap(), 1);
        assert_eq!(path_cover_by_search(&ex46(), cfg).unwrap(), 2);
        assert!(matches!(
            path_cover_by_search(&Graph::new(2), cfg),
            Err(Error::NotTree)
        ));
    }

    #[test]
    fn c_examples() {
        let cfg = SearchConfig::default();
        assert_eq!(c_param(&Graph::path(6), cfg).unwrap(), 0);
        assert_eq!(c_param(&Graph::star(5), cfg).unwrap(), 1);
        assert_eq!(c_param(&Graph::star4_sum(2), cfg).unwrap(), 2);
        assert_eq!(c_param(&Graph::star4_sum(4), cfg).unwrap(), 4);
        assert_eq!(c_param(&ex46(), cfg).unwrap(), 1);
        assert!(matches!(c_param(&Graph::cycle(3), cfg), Err(Error::NotForest)));
    }

    #[test]
    fn r_examples() {
        let cfg = SearchConfig::default();
        assert_eq!(r_profile(&Graph::star(4), cfg).unwrap(), vec![0, 3]);
        assert_eq!(r_profile(&Graph::path(5), cfg).unwrap(), vec![0]);
        assert_eq!(
            r_profile(&Graph::star4_sum(4), cfg).unwrap(),
            vec![0, 4, 6, 9, 12]
        );
    }

    #[test]
    fn mult_bound_examples() {
        let cfg = SearchConfig::default();
        assert_eq!(max_mult_bound(&Graph::new(1), 0, cfg).unwrap(), 1);
        assert_eq!(max_mult_bound(&Graph::sun(4), 2, cfg).unwrap(), 2);
        assert_eq!(max_mult_bound(&Graph::sun(6), 3, cfg).unwrap(), 3);
        let t = ex46();
        assert_eq!(max_mult_bound(&t, 6, cfg).unwrap(), 2);
    }

    #[test]
    fn params_record() {
        let cfg = SearchConfig::default();
        let p = TreeParams::compute(&ex46(), cfg).unwrap();
        assert_eq!((p.p, p.mr, p.c, p.md.clone()), (2, 4, 1, vec![1, 3]));
        let p = TreeParams::compute(&Graph::star4_sum(2), cfg).unwrap();
        assert_eq!((p.p, p.mr, p.c, p.md.clone()), (3, 4, 2, vec![1, 3, 5]));
        let p = TreeParams::compute(&Graph::path(6), cfg).unwrap();
        assert_eq!((p.p, p.mr, p.c), (1, 5, 0));
        // forest: two stars and an isolated vertex
        let f = Graph::disjoint_union(&[&Graph::star(4), &Graph::star(5), &Graph::new(1)]);
        let p = TreeParams::compute(&f, cfg).unwrap();
        assert_eq!((p.p, p.c, p.components), (2 + 3 + 1, 2, 3));
        assert_eq!(p.md, vec![3, 6, 8]);
    }

    #[test]
    fn small_tree_laws() {
        let cfg = SearchConfig::default();
        for n in 1..=9 {
            for t in nonisomorphic_trees(n) {
                let p = path_cover_number(&t).unwrap();
                assert_eq!(p, path_cover_by_search(&t, cfg).unwrap());
                let c = c_param(&t, cfg).unwrap();
                if n >= 3 {
                    assert!(2 * c <= n - p && 3 * c < n);
                }
                let prof = md_profile(&t, n, cfg).unwrap();
                // f_T(S) <= MD_|S| - |S|
                for s in 0..1u64 << n {
                    let set = VertexSet::from_mask(s);
                    let k = set.len();
                    assert!(f_value(&t, &set) <= prof.values[k] as i64 - k as i64);
                }
                // optimal sets of size c use only vertices of degree >= 3
                let (_, sets) = optimal_f_sets(&t, cfg).unwrap();
                for s in sets.into_iter().filter(|s| s.count_ones() as usize == c) {
                    assert!(VertexSet::from_mask(s).iter().all(|v| t.degree(v) >= 3));
                }
                // r jumps by at least 2, and by 3 at k = 1 and k = c
                let r = r_profile(&t, cfg).unwrap();
                for k in 1..=c {
                    assert!(prof.values[k] > prof.values[k - 1]);
                    let gap = if k == 1 || k == c { 3 } else { 2 };
                    assert!(r[k] >= r[k - 1] + gap, "{t:?}");
                }
            }
        }
    }
}
