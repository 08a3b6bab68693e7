//! Bicolored spans `(S, X, Y)`: a deleted set `S` and a two-colored
//! spanning forest `X ∪ Y` of `G - S`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// How many spans to visit per deleted set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpanMode {
    /// One span per `(S, |X|)`: a fixed spanning forest split at `|X|`.
    /// Only `(|X|, |Y|)` enters a color vector, so this loses nothing.
    Representative,
    /// Every spanning forest of `G - S` with every two-coloring.
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpanConfig {
    pub mode: SpanMode,
    /// Largest vertex count accepted.
    pub cap: usize,
}

impl Default for SpanConfig {
    fn default() -> Self {
        SpanConfig {
            mode: SpanMode::Representative,
            cap: 12,
        }
    }
}

impl SpanConfig {
    /// Exhaustive enumeration, for validation on small graphs.
    pub fn full() -> Self {
        SpanConfig {
            mode: SpanMode::Full,
            cap: 8,
        }
    }
}

/// A deleted set with a two-colored spanning forest of what remains.
/// Edges use the vertex indices of the original graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BicoloredSpan {
    pub s: VertexSet,
    pub x: Vec<(usize, usize)>,
    pub y: Vec<(usize, usize)>,
}

impl BicoloredSpan {
    /// `(|S| + |X|, |S| + |Y|)`.
    pub fn color_vector(&self) -> (usize, usize) {
        (self.s.len() + self.x.len(), self.s.len() + self.y.len())
    }

    /// Checks the defining conditions against `g`.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let rest = g.delete_vertices(&self.s);
        let edges: Vec<_> = self.x.iter().chain(&self.y).copied().collect();
        let distinct: BTreeSet<_> = edges.iter().collect();
        if distinct.len() != edges.len() {
            return false;
        }
        let mut uf = UnionFind::new(g.n());
        for &(u, v) in &edges {
            if self.s.contains(u) || self.s.contains(v) || !g.has_edge(u, v) || !uf.union(u, v) {
                return false;
            }
        }
        edges.len() + rest.graph.num_components() == rest.graph.n()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, v: usize) -> usize {
        let mut r = v;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut c = v;
        while self.parent[c] != r {
            let next = self.parent[c];
            self.parent[c] = r;
            c = next;
        }
        r
    }

    /// Joins the classes; false if already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Visits spans of `g` in order of the deleted set's bitmask.
pub fn for_each_span(g: &Graph, cfg: SpanConfig, mut visit: impl FnMut(&BicoloredSpan)) -> Result<()> {
    let n = g.n();
    let cap = cfg.cap.min(30);
    if n > cap {
        return Err(Error::SearchTooLarge { n, cap });
    }
    for mask in 0u64..1 << n {
        let s = VertexSet::from_mask(mask);
        let rest = g.delete_vertices(&s);
        let edges: Vec<(usize, usize)> = rest
            .graph
            .edges()
            .map(|(a, b)| (rest.new_to_old[a], rest.new_to_old[b]))
            .collect();
        let size = rest.graph.n() - rest.graph.num_components();
        match cfg.mode {
            SpanMode::Representative => {
                let forest = greedy_forest(n, &edges);
                for split in 0..=size {
                    visit(&BicoloredSpan {
                        s: s.clone(),
                        x: forest[..split].to_vec(),
                        y: forest[split..].to_vec(),
                    });
                }
            }
            SpanMode::Full => {
                spanning_forests(n, &edges, size, &mut |forest| {
                    for coloring in 0u64..1 << forest.len() {
                        let (x, y): (Vec<_>, Vec<_>) = forest
                            .iter()
                            .enumerate()
                            .partition(|(i, _)| coloring >> i & 1 == 1);
                        visit(&BicoloredSpan {
                            s: s.clone(),
                            x: x.into_iter().map(|(_, e)| *e).collect(),
                            y: y.into_iter().map(|(_, e)| *e).collect(),
                        });
                    }
                });
            }
        }
    }
    Ok(())
}

/// All spans, collected.
pub fn enumerate_spans(g: &Graph, cfg: SpanConfig) -> Result<Vec<BicoloredSpan>> {
    let mut out = Vec::new();
    for_each_span(g, cfg, |sp| out.push(sp.clone()))?;
    Ok(out)
}

/// `C(G)`, the set of color vectors.
pub fn color_vectors(g: &Graph, cfg: SpanConfig) -> Result<BTreeSet<(usize, usize)>> {
    let mut out = BTreeSet::new();
    for_each_span(g, cfg, |sp| {
        out.insert(sp.color_vector());
    })?;
    Ok(out)
}

fn greedy_forest(n: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut uf = UnionFind::new(n);
    edges.iter().copied().filter(|&(a, b)| uf.union(a, b)).collect()
}

// Include/exclude over edges, keeping only acyclic choices of `size` edges.
fn spanning_forests(
    n: usize,
    edges: &[(usize, usize)],
    size: usize,
    emit: &mut dyn FnMut(&[(usize, usize)]),
) {
    fn rec(
        edges: &[(usize, usize)],
        i: usize,
        size: usize,
        parent: &mut Vec<usize>,
        chosen: &mut Vec<(usize, usize)>,
        emit: &mut dyn FnMut(&[(usize, usize)]),
    ) {
        if chosen.len() == size {
            emit(chosen);
            return;
        }
        if edges.len() - i < size - chosen.len() {
            return;
        }
        let (a, b) = edges[i];
        let root = |parent: &Vec<usize>, mut v: usize| {
            while parent[v] != v {
                v = parent[v];
            }
            v
        };
        let (ra, rb) = (root(parent, a), root(parent, b));
        if ra != rb {
            parent[ra] = rb;
            chosen.push((a, b));
            rec(edges, i + 1, size, parent, chosen, emit);
            chosen.pop();
            parent[ra] = ra;
        }
        rec(edges, i + 1, size, parent, chosen, emit);
    }
    let mut parent: Vec<usize> = (0..n).collect();
    rec(edges, 0, size, &mut parent, &mut Vec::new(), emit);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex() {
        let spans = enumerate_spans(&Graph::new(1), SpanConfig::full()).unwrap();
        assert!(spans.contains(&BicoloredSpan {
            s: VertexSet::empty(),
            x: vec![],
            y: vec![]
        }));
        let cv = color_vectors(&Graph::new(1), SpanConfig::full()).unwrap();
        assert!(cv.contains(&(0, 0)));
        // S = {0} leaves nothing to span
        assert_eq!(cv, [(0, 0), (1, 1)].into_iter().collect());
    }

    #[test]
    fn edge_color_vectors() {
        let cv = color_vectors(&Graph::path(2), SpanConfig::full()).unwrap();
        assert_eq!(cv, [(1, 0), (0, 1), (1, 1), (2, 2)].into_iter().collect());
    }

    #[test]
    fn spans_are_valid_and_modes_agree() {
        for g in [Graph::cycle(4), Graph::complete(4), Graph::star4_sum(2), Graph::sun(3)] {
            let full = enumerate_spans(&g, SpanConfig::full()).unwrap();
            assert!(full.iter().all(|sp| sp.is_valid(&g)));
            let rep = enumerate_spans(&g, SpanConfig::default()).unwrap();
            assert!(rep.iter().all(|sp| sp.is_valid(&g)));
            assert_eq!(
                color_vectors(&g, SpanConfig::full()).unwrap(),
                color_vectors(&g, SpanConfig::default()).unwrap()
            );
        }
    }

    #[test]
    fn spanning_tree_counts() {
        // Cayley: K4 has 16 spanning trees; C5 has 5
        let mut count = 0;
        let k4: Vec<_> = Graph::complete(4).edges().collect();
        spanning_forests(4, &k4, 3, &mut |_| count += 1);
        assert_eq!(count, 16);
        let mut count = 0;
        let c5: Vec<_> = Graph::cycle(5).edges().collect();
        spanning_forests(5, &c5, 4, &mut |_| count += 1);
        assert_eq!(count, 5);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            color_vectors(&Graph::path(13), SpanConfig::default()),
            Err(Error::SearchTooLarge { n: 13, cap: 12 })
        ));
    }
}
