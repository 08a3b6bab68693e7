//! Cut-vertex recursion. For a cut vertex `v` splitting `G` into
//! `G_1, …, G_k`:
//!
//! `I(G) = [Σ I(G_i)]_n ∪ [Σ I(G_i - v) + {(1,1)}]_n`,
//!
//! and the second term may be dropped when `deg(v) = 2`.

use std::collections::{BTreeSet, HashMap};

use super::registry::{describe_block, BaseRegistry, BlockSource};
use super::{InertiaResult, Provenance};
use crate::error::{Error, Result};
use crate::graph::{invariant_key, is_isomorphic, Graph};
use crate::lattice::LatticeSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CutOptions {
    /// Drop the second term at degree-2 cut vertices.
    pub degree_two_shortcut: bool,
    /// Look up every intermediate graph in the registry before splitting
    /// it. When false only blocks without a cut vertex are looked up, so
    /// paths and stars are rebuilt from edges.
    pub prefer_registry: bool,
}

impl Default for CutOptions {
    fn default() -> Self {
        CutOptions {
            degree_two_shortcut: true,
            prefer_registry: true,
        }
    }
}

struct Memo {
    table: HashMap<u64, Vec<(Graph, LatticeSet, BTreeSet<String>)>>,
}

impl Memo {
    fn get(&self, key: u64, g: &Graph) -> Option<(LatticeSet, BTreeSet<String>)> {
        self.table.get(&key)?.iter().find_map(|(h, set, used)| {
            is_isomorphic(g, h).then(|| (set.clone(), used.clone()))
        })
    }

    fn put(&mut self, key: u64, g: &Graph, set: &LatticeSet, used: &BTreeSet<String>) {
        self.table
            .entry(key)
            .or_default()
            .push((g.clone(), set.clone(), used.clone()));
    }
}

/// `I(G)` by recursion on cut vertices down to registered blocks.
pub fn inertia_cut_recursive(
    g: &Graph,
    reg: &BaseRegistry,
    opts: CutOptions,
) -> Result<InertiaResult> {
    let mut memo = Memo {
        table: HashMap::new(),
    };
    let top_hit = opts.prefer_registry && g.is_connected() && reg.lookup(g).is_some();
    let (set, used) = solve(g, reg, opts, &mut memo)?;
    Ok(InertiaResult {
        set,
        provenance: if top_hit {
            Provenance::Registry
        } else {
            Provenance::CutVertexRecursion
        },
        unverified_blocks: used.into_iter().collect(),
    })
}

fn solve(
    g: &Graph,
    reg: &BaseRegistry,
    opts: CutOptions,
    memo: &mut Memo,
) -> Result<(LatticeSet, BTreeSet<String>)> {
    let n = g.n();
    if n == 0 {
        return Ok((LatticeSet::point(0, 0), BTreeSet::new()));
    }
    let key = invariant_key(g);
    if let Some(hit) = memo.get(key, g) {
        return Ok(hit);
    }
    let mut used = BTreeSet::new();
    let comps = g.components();
    let set = if comps.len() > 1 {
        let mut acc = LatticeSet::point(0, 0);
        for c in &comps {
            let (s, u) = solve(&g.induced(c.as_slice()).graph, reg, opts, memo)?;
            acc = acc.minkowski_sum(&s);
            used.extend(u);
        }
        acc
    } else {
        let cuts = g.cut_vertices();
        let looked_up = if opts.prefer_registry || cuts.is_empty() {
            reg.lookup(g)
        } else {
            None
        };
        if let Some((set, src)) = looked_up {
            if let BlockSource::User(name) = src {
                used.insert(name);
            }
            set
        } else if cuts.is_empty() {
            return Err(Error::UnknownBlock(describe_block(g)));
        } else {
            let v = *cuts
                .iter()
                .max_by_key(|&&v| (g.degree(v), std::cmp::Reverse(v)))
                .expect("nonempty");
            split_formula(g, v, reg, opts, memo, &mut used)?
        }
    };
    memo.put(key, g, &set, &used);
    Ok((set, used))
}

fn split_formula(
    g: &Graph,
    v: usize,
    reg: &BaseRegistry,
    opts: CutOptions,
    memo: &mut Memo,
    used: &mut BTreeSet<String>,
) -> Result<LatticeSet> {
    let n = g.n();
    let parts = g.split_at(v)?;
    let mut kept = LatticeSet::point(0, 0);
    for p in &parts {
        let (s, u) = solve(&p.graph, reg, opts, memo)?;
        kept = kept.minkowski_sum(&s);
        used.extend(u);
    }
    let kept = kept.truncate(n);
    if opts.degree_two_shortcut && g.degree(v) == 2 {
        return Ok(kept);
    }
    let mut deleted = LatticeSet::point(1, 1);
    for p in &parts {
        let local = p.local(v).expect("v is in every summand");
        let (s, u) = solve(&p.graph.delete_vertex(local).graph, reg, opts, memo)?;
        deleted = deleted.minkowski_sum(&s);
        used.extend(u);
    }
    Ok(kept.union(&deleted.truncate(n)))
}
