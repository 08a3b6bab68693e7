//! Path cover number of forests by pendant reduction.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// `P(F)`: minimum number of vertex-disjoint induced paths covering `F`.
///
/// Each tree is reduced independently:
/// 1. while some pendant `u` hangs off a degree-2 vertex, delete `u`;
/// 2. a vertex or an edge contributes 1, a star on `m + 1` vertices `m - 1`;
/// 3. otherwise the smallest-index `v` with `m >= 2` pendant neighbors and
///    one other neighbor is deleted with its pendants, contributing `m - 1`.
pub fn path_cover_number(f: &Graph) -> Result<usize> {
    if !f.is_forest() {
        return Err(Error::NotForest);
    }
    Ok(f
        .components()
        .iter()
        .map(|c| reduce_tree(f.induced(c.as_slice()).graph))
        .sum())
}

fn reduce_tree(t: Graph) -> usize {
    let n = t.n();
    let mut adj: Vec<BTreeSet<usize>> = (0..n)
        .map(|v| t.neighbors(v).iter().copied().collect())
        .collect();
    let mut alive: BTreeSet<usize> = (0..n).collect();
    let mut p = 0;

    let remove = |adj: &mut Vec<BTreeSet<usize>>, alive: &mut BTreeSet<usize>, v: usize| {
        for w in std::mem::take(&mut adj[v]) {
            adj[w].remove(&v);
        }
        alive.remove(&v);
    };

    loop {
        // pendant behind a degree-2 vertex
        loop {
            let hit = alive.iter().copied().find(|&u| {
                adj[u].len() == 1 && adj[*adj[u].first().unwrap()].len() == 2
            });
            match hit {
                Some(u) => remove(&mut adj, &mut alive, u),
                None => break,
            }
        }

        let size = alive.len();
        if size <= 2 {
            return p + 1;
        }
        if alive.iter().any(|&v| adj[v].len() == size - 1) {
            return p + size - 2;
        }

        let (v, pendants) = alive
            .iter()
            .find_map(|&v| {
                let pend: Vec<usize> = adj[v].iter().copied().filter(|&w| adj[w].len() == 1).collect();
                (pend.len() >= 2 && adj[v].len() == pend.len() + 1).then_some((v, pend))
            })
            .expect("a non-star tree with no degree-2 pendant parent has such a vertex");
        p += pendants.len() - 1;
        for u in pendants {
            remove(&mut adj, &mut alive, u);
        }
        remove(&mut adj, &mut alive, v);
    }
}
