//! Inertia sets `I(G)`.
//!
//! Forests are exact through the maximal-disconnection profile of each
//! tree. Other graphs go through the cut-vertex recursion over a registry
//! of known blocks.

mod cut;
mod registry;

pub use cut::{inertia_cut_recursive, CutOptions};
pub use registry::{describe_block, star_set, BaseRegistry, BlockSource, RegistryEntry};

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lattice::{LatticeSet, Stripe};
use crate::params::{forest_components, tree_md_until_optimal, SearchConfig};

/// How a set was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    ForestFormula,
    CutVertexRecursion,
    Registry,
    /// `E(G)`; equal to `I(G)` on forests and contained in it otherwise.
    ElementarySet,
    /// Observed inertias of random matrices; a subset of `I(G)`.
    EmpiricalLowerBound,
}

impl Provenance {
    pub fn is_exact(self) -> bool {
        matches!(
            self,
            Provenance::ForestFormula | Provenance::CutVertexRecursion | Provenance::Registry
        )
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::ForestFormula => "forest-formula",
            Provenance::CutVertexRecursion => "cut-vertex-recursion",
            Provenance::Registry => "registry",
            Provenance::ElementarySet => "elementary-set",
            Provenance::EmpiricalLowerBound => "empirical-lower-bound",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InertiaResult {
    pub set: LatticeSet,
    pub provenance: Provenance,
    /// User registry entries the result depends on.
    pub unverified_blocks: Vec<String>,
}

/// Per-tree data behind the forest formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeInertia {
    pub n: usize,
    pub p: usize,
    pub c: usize,
    /// `MD_0..=MD_c`
    pub md: Vec<usize>,
}

impl TreeInertia {
    pub fn of(t: &Graph, cfg: SearchConfig) -> Result<Self> {
        if !t.is_tree() {
            return Err(Error::NotTree);
        }
        let (p, prof) = tree_md_until_optimal(t, cfg)?;
        Ok(TreeInertia {
            n: t.n(),
            p,
            c: prof.values.len() - 1,
            md: prof.values,
        })
    }

    pub fn mr(&self) -> usize {
        self.n - self.p
    }

    /// `π_k = n - MD_k` for `0 <= k <= c`.
    pub fn pi_profile(&self) -> Vec<usize> {
        self.md.iter().map(|&m| self.n - m).collect()
    }

    /// `L_T = {(r, s) : r + s = mr, r >= c, s >= c}`.
    pub fn l_stripe(&self) -> Stripe {
        let mr = self.mr();
        Stripe {
            rank: mr,
            rs: (self.c..=mr - self.c).collect(),
        }
    }

    /// Corners `(π_k, k)` and reflections for `k < c`, plus `L_T`.
    pub fn set(&self) -> LatticeSet {
        let pi = self.pi_profile();
        let staircase = (0..self.c).flat_map(|k| [(pi[k], k), (k, pi[k])]);
        LatticeSet::finite(self.n, staircase.chain(self.l_stripe().points()))
    }
}

/// `I(F)` for a forest: the tree sets combined by Minkowski sum.
pub fn inertia_forest(f: &Graph, cfg: SearchConfig) -> Result<InertiaResult> {
    let mut set = LatticeSet::point(0, 0);
    for t in forest_components(f)? {
        set = set.minkowski_sum(&TreeInertia::of(&t, cfg)?.set());
    }
    Ok(InertiaResult {
        set,
        provenance: Provenance::ForestFormula,
        unverified_blocks: Vec::new(),
    })
}

/// `(π_0, …, π_c)` of a tree.
pub fn pi_profile(t: &Graph, cfg: SearchConfig) -> Result<Vec<usize>> {
    Ok(TreeInertia::of(t, cfg)?.pi_profile())
}

/// The minimum-rank stripe `L_T` of a tree.
pub fn l_stripe(t: &Graph, cfg: SearchConfig) -> Result<Stripe> {
    Ok(TreeInertia::of(t, cfg)?.l_stripe())
}

/// `mr_+(G)` read off `I(G)`: the first point on the `r`-axis.
pub fn msr_from_inertia(q: &LatticeSet) -> Result<usize> {
    q.axis_min().ok_or_else(|| {
        Error::Precondition(format!("no point on the r-axis; not a graph inertia set: {q}"))
    })
}
