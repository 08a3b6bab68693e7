//! Exhaustive generation of small trees and forests up to isomorphism.

use std::collections::BTreeMap;

use super::{tree_code, Graph};

/// One representative per isomorphism class of trees on `n` vertices.
///
/// Grows trees one leaf at a time and deduplicates by canonical code;
/// fine for the `n <= 12` range used in tests.
pub fn nonisomorphic_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: BTreeMap<String, Graph> = BTreeMap::new();
    let k1 = Graph::new(1);
    level.insert(tree_code(&k1), k1);
    for size in 2..=n {
        let mut next = BTreeMap::new();
        for t in level.values() {
            for v in 0..size - 1 {
                let mut edges: Vec<_> = t.edges().collect();
                edges.push((v, size - 1));
                let grown = Graph::from_edges(size, &edges).expect("new leaf");
                next.entry(tree_code(&grown)).or_insert(grown);
            }
        }
        level = next;
    }
    level.into_values().collect()
}

/// One representative per isomorphism class of forests on `n` vertices.
/// Components are laid out consecutively, largest first.
pub fn nonisomorphic_forests(n: usize) -> Vec<Graph> {
    let trees: Vec<Vec<Graph>> = (0..=n).map(nonisomorphic_trees).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    forests_rec(n, n, usize::MAX, &trees, &mut chosen, &mut out);
    out
}

// Components are chosen as a non-increasing sequence of (size, index) pairs,
// which lists each multiset exactly once.
fn forests_rec<'a>(
    left: usize,
    max_size: usize,
    max_index: usize,
    trees: &'a [Vec<Graph>],
    chosen: &mut Vec<&'a Graph>,
    out: &mut Vec<Graph>,
) {
    if left == 0 {
        out.push(Graph::disjoint_union(chosen));
        return;
    }
    for size in (1..=max_size.min(left)).rev() {
        let limit = if size == max_size {
            max_index
        } else {
            trees[size].len() - 1
        };
        for idx in (0..=limit.min(trees[size].len() - 1)).rev() {
            chosen.push(&trees[size][idx]);
            forests_rec(left - size, size, idx, trees, chosen, out);
            chosen.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=9).map(|n| nonisomorphic_trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47]);
        assert!(nonisomorphic_trees(7).iter().all(Graph::is_tree));
    }

    #[test]
    fn forest_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| nonisomorphic_forests(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 6, 10, 20, 37, 76]);
        assert!(nonisomorphic_forests(6).iter().all(Graph::is_forest));
    }
}
