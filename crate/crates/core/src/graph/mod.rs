//! Simple undirected graphs on dense vertex indices `0..n`.
//!
//! Deletion and splitting always hand back the old/new index maps, so that
//! matrix rows built on a subgraph can be traced to the parent graph.

mod canon;
mod generate;
mod parse;

pub use canon::{invariant_key, is_isomorphic, tree_code};
pub use generate::{nonisomorphic_forests, nonisomorphic_trees};
pub use parse::parse_graph;

use crate::error::{Error, Result};

/// A simple undirected graph. Neighbor lists are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

/// A sorted set of vertices of some graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn from_mask(mask: u64) -> Self {
        VertexSet((0..64).filter(|i| mask >> i & 1 == 1).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn min(&self) -> Option<usize> {
        self.0.first().copied()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

/// An induced subgraph together with its re-indexing maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    /// `new_to_old[i]` is the parent index of subgraph vertex `i`.
    pub new_to_old: Vec<usize>,
    /// `old_to_new[v]` is the subgraph index of parent vertex `v`, if kept.
    pub old_to_new: Vec<Option<usize>>,
}

impl Subgraph {
    /// Subgraph index of a parent vertex.
    pub fn local(&self, old: usize) -> Option<usize> {
        self.old_to_new.get(old).copied().flatten()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop { vertex: u });
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(Error::DuplicateEdge {
                u: u.min(v),
                v: u.max(v),
            }),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(())
            }
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Neighborhood bitmasks. Only valid for `n <= 64`.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n() <= 64, "bitmask view needs n <= 64");
        self.adj
            .iter()
            .map(|nb| nb.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect()
    }

    /// Canonical edge-list document (see [`parse_graph`]).
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.num_edges());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            out.push(VertexSet::new(comp));
        }
        out
    }

    pub fn num_components(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.num_components() <= 1
    }

    pub fn is_forest(&self) -> bool {
        self.num_edges() + self.num_components() == self.n()
    }

    /// Connected forest on at least one vertex.
    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.is_forest() && self.num_components() == 1
    }

    /// Subgraph induced on `keep` (order of `keep` is irrelevant).
    pub fn induced(&self, keep: &[usize]) -> Subgraph {
        let mut new_to_old: Vec<usize> = keep.to_vec();
        new_to_old.sort_unstable();
        new_to_old.dedup();
        let mut old_to_new = vec![None; self.n()];
        for (i, &v) in new_to_old.iter().enumerate() {
            old_to_new[v] = Some(i);
        }
        let adj = new_to_old
            .iter()
            .map(|&v| self.adj[v].iter().filter_map(|&w| old_to_new[w]).collect())
            .collect();
        Subgraph {
            graph: Graph { adj },
            new_to_old,
            old_to_new,
        }
    }

    /// `G - S`.
    pub fn delete_vertices(&self, s: &VertexSet) -> Subgraph {
        let keep: Vec<usize> = (0..self.n()).filter(|&v| !s.contains(v)).collect();
        self.induced(&keep)
    }

    pub fn delete_vertex(&self, v: usize) -> Subgraph {
        self.delete_vertices(&VertexSet::new([v]))
    }

    /// Articulation points, ascending.
    pub fn cut_vertices(&self) -> Vec<usize> {
        let n = self.n();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut is_cut = vec![false; n];
        let mut timer = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            let mut root_children = 0;
            // (vertex, parent, next neighbor position)
            let mut stack = vec![(root, usize::MAX, 0usize)];
            while let Some(&mut (u, parent, ref mut pos)) = stack.last_mut() {
                if *pos < self.adj[u].len() {
                    let w = self.adj[u][*pos];
                    *pos += 1;
                    if w == parent {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        if u == root {
                            root_children += 1;
                        }
                        stack.push((w, u, 0));
                    } else {
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[u]);
                        if parent != root && low[u] >= disc[parent] {
                            is_cut[parent] = true;
                        }
                    }
                }
            }
            if root_children >= 2 {
                is_cut[root] = true;
            }
        }
        (0..n).filter(|&v| is_cut[v]).collect()
    }

    /// Writes `G` as a vertex sum at the cut vertex `v`: one summand per
    /// component of `G - v`, each induced on that component plus `v`.
    /// Summands are ordered by their smallest vertex other than `v`.
    pub fn split_at(&self, v: usize) -> Result<Vec<Subgraph>> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            });
        }
        let rest = self.delete_vertex(v);
        let comps = rest.graph.components();
        let own = self
            .components()
            .into_iter()
            .find(|c| c.contains(v))
            .expect("v lies in some component");
        // only the components that were attached to v count as summands
        let attached: Vec<Vec<usize>> = comps
            .iter()
            .map(|c| c.iter().map(|i| rest.new_to_old[i]).collect::<Vec<_>>())
            .filter(|c: &Vec<usize>| c.iter().any(|&w| own.contains(w)))
            .collect();
        if attached.len() < 2 {
            return Err(Error::NotCutVertex { vertex: v });
        }
        Ok(attached
            .into_iter()
            .map(|mut c| {
                c.push(v);
                self.induced(&c)
            })
            .collect())
    }

    /// Glues graphs at one marked vertex each. The shared vertex becomes
    /// vertex 0; the remaining vertices follow part by part, in order.
    pub fn vertex_sum(parts: &[(&Graph, usize)]) -> Graph {
        let total = 1 + parts.iter().map(|(g, _)| g.n() - 1).sum::<usize>();
        let mut out = Graph::new(total);
        let mut offset = 1;
        for &(g, pivot) in parts {
            let map: Vec<usize> = (0..g.n())
                .map(|i| match i.cmp(&pivot) {
                    std::cmp::Ordering::Equal => 0,
                    std::cmp::Ordering::Less => offset + i,
                    std::cmp::Ordering::Greater => offset + i - 1,
                })
                .collect();
            for (a, b) in g.edges() {
                out.add_edge(map[a], map[b]).expect("parts are simple graphs");
            }
            offset += g.n() - 1;
        }
        out
    }

    pub fn disjoint_union(parts: &[&Graph]) -> Graph {
        let total = parts.iter().map(|g| g.n()).sum();
        let mut out = Graph::new(total);
        let mut offset = 0;
        for g in parts {
            for (a, b) in g.edges() {
                out.add_edge(a + offset, b + offset).expect("parts are simple");
            }
            offset += g.n();
        }
        out
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("valid path")
    }

    /// `S_n`: center 0 joined to `1..n`.
    pub fn star(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        Graph::from_edges(n, &edges).expect("valid star")
    }

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(n, &edges).expect("valid complete graph")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("valid cycle")
    }

    /// The `m`-sun: cycle `0..m` with pendant `m + i` attached to `i`.
    pub fn sun(m: usize) -> Graph {
        let mut g = Graph::cycle(m);
        g.adj.resize(2 * m, Vec::new());
        for i in 0..m {
            g.add_edge(i, m + i).expect("valid sun");
        }
        g
    }

    /// `k` copies of `S_4` glued at a pendant vertex (vertex 0). Copy `i`
    /// has center `3i + 1` and leaves `3i + 2`, `3i + 3`.
    pub fn star4_sum(k: usize) -> Graph {
        let s4 = Graph::star(4);
        let parts: Vec<(&Graph, usize)> = (0..k).map(|_| (&s4, 3)).collect();
        Graph::vertex_sum(&parts)
    }

    /// Structural test for `K_n` (n >= 1).
    pub fn is_complete(&self) -> bool {
        let n = self.n();
        n >= 1 && self.adj.iter().all(|nb| nb.len() == n - 1)
    }

    /// Structural test for a path `P_n` (n >= 1).
    pub fn is_path(&self) -> bool {
        let n = self.n();
        n >= 1 && self.is_tree() && self.max_degree() <= 2
    }

    /// Structural test for a star `S_n` with `n >= 3`; returns the center.
    pub fn star_center(&self) -> Option<usize> {
        let n = self.n();
        if n < 3 || self.num_edges() != n - 1 {
            return None;
        }
        (0..n).find(|&v| self.degree(v) == n - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_cut_vertices(g: &Graph) -> Vec<usize> {
        let base = g.num_components();
        (0..g.n())
            .filter(|&v| g.delete_vertex(v).graph.num_components() > base)
            .collect()
    }

    #[test]
    fn components_of_small_graphs() {
        assert_eq!(Graph::new(2).num_components(), 2);
        assert_eq!(Graph::path(5).num_components(), 1);
        let sun = Graph::sun(4);
        let rest = sun.delete_vertices(&VertexSet::new(0..4));
        assert_eq!(rest.graph.num_components(), 4);
    }

    #[test]
    fn deletion_maps() {
        let p3 = Graph::path(3);
        let sub = p3.delete_vertex(1);
        assert_eq!(sub.graph, Graph::new(2));
        assert_eq!(sub.new_to_old, vec![0, 2]);
        assert_eq!(sub.old_to_new, vec![Some(0), None, Some(1)]);
        let s4 = Graph::star(4).delete_vertex(0);
        assert_eq!(s4.graph, Graph::new(3));
    }

    #[test]
    fn forest_and_tree() {
        assert!(Graph::path(5).is_forest());
        assert!(Graph::path(5).is_tree());
        assert!(!Graph::complete(3).is_forest());
        assert!(!Graph::sun(4).is_forest());
        assert!(Graph::new(3).is_forest());
        assert!(!Graph::new(3).is_tree());
    }

    #[test]
    fn cut_vertices_examples() {
        assert_eq!(Graph::path(3).cut_vertices(), vec![1]);
        assert!(Graph::complete(4).cut_vertices().is_empty());
        // S4 (center 0, leaves 1, 2, 3) glued to P3 (middle 3, ends 4, 5)
        let t = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]).unwrap();
        assert_eq!(t.cut_vertices(), brute_cut_vertices(&t));
        assert_eq!(t.cut_vertices(), vec![0, 3]);
    }

    #[test]
    fn cut_vertices_match_brute_force() {
        let graphs = [
            Graph::sun(5),
            Graph::cycle(6),
            Graph::star4_sum(3),
            Graph::disjoint_union(&[&Graph::path(4), &Graph::complete(3), &Graph::new(1)]),
            Graph::from_edges(7, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3), (5, 6)])
                .unwrap(),
        ];
        for g in &graphs {
            assert_eq!(g.cut_vertices(), brute_cut_vertices(g), "{g:?}");
        }
    }

    #[test]
    fn split_and_reconstruct() {
        let t = Graph::star4_sum(2);
        let parts = t.split_at(0).unwrap();
        assert_eq!(parts.len(), 2);
        for p in &parts {
            assert_eq!(p.graph.n(), 4);
            assert!(p.graph.star_center().is_some());
        }
        let p5 = Graph::path(5);
        let parts = p5.split_at(2).unwrap();
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|p| p.graph == Graph::path(3)));
        assert_eq!(Graph::star4_sum(4).split_at(0).unwrap().len(), 4);
        assert!(matches!(
            Graph::path(3).split_at(0),
            Err(Error::NotCutVertex { vertex: 0 })
        ));
    }

    #[test]
    fn split_orders_by_smallest_vertex() {
        let g = Graph::from_edges(5, &[(4, 0), (4, 3), (3, 1), (4, 2)]).unwrap();
        let parts = g.split_at(4).unwrap();
        let mins: Vec<usize> = parts.iter().map(|p| p.new_to_old[0]).collect();
        assert_eq!(mins, vec![0, 1, 2]);
    }

    #[test]
    fn reconstruct_from_split_is_identity() {
        for g in [Graph::star4_sum(3), Graph::sun(4), Graph::path(6)] {
            for v in g.cut_vertices() {
                let mut rebuilt = Graph::new(g.n());
                for part in g.split_at(v).unwrap() {
                    for (a, b) in part.graph.edges() {
                        rebuilt
                            .add_edge(part.new_to_old[a], part.new_to_old[b])
                            .unwrap();
                    }
                }
                assert_eq!(rebuilt, g);
            }
        }
    }

    #[test]
    fn edge_insertion_errors() {
        let mut g = Graph::new(3);
        g.add_edge(0, 1).unwrap();
        assert!(matches!(g.add_edge(1, 0), Err(Error::DuplicateEdge { u: 0, v: 1 })));
        assert!(matches!(g.add_edge(2, 2), Err(Error::SelfLoop { vertex: 2 })));
        assert!(matches!(
            g.add_edge(0, 3),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn vertex_deletion_changes_components_boundedly_on_forests() {
        for n in 1..=9 {
            for t in nonisomorphic_trees(n) {
                let base = t.num_components() as isize;
                for v in 0..n {
                    let after = t.delete_vertex(v).graph.num_components() as isize;
                    let delta = after - base;
                    assert!(delta >= -1 && delta < t.degree(v) as isize);
                    if t.degree(v) > 0 {
                        assert!(delta >= 0);
                    }
                }
            }
        }
    }
}
