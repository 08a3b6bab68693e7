//! Explicit matrices in `S(G)` with a prescribed partial inertia.

use std::collections::VecDeque;
use std::fmt;

use num_traits::{One, Zero};

use super::{inertia_exact, int, northeast_perturb, ratio, Inertia, Rational, SymMatrix};
use crate::engine::inertia_forest;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::params::{md_profile, md_with_witness, SearchConfig};

/// `D + A_G / 2n` with `D = diag(r, …, 1, -1, …, -s)`. Every Gershgorin
/// disc has radius below `1/2` and centre at distance `>= 1` from zero,
/// so the inertia is `(r, s, 0)`.
pub fn witness_full_rank(g: &Graph, r: usize, s: usize) -> Result<SymMatrix> {
    let n = g.n();
    if r + s != n {
        return Err(Error::Precondition(format!("r + s = {} but n = {n}", r + s)));
    }
    let off = ratio(1, 2 * n.max(1) as i64);
    Ok(SymMatrix::from_fn(n, |i, j| {
        if i == j {
            if i < r {
                int((r - i) as i64)
            } else {
                int(r as i64 - i as i64 - 1)
            }
        } else if g.has_edge(i, j) {
            off.clone()
        } else {
            Rational::zero()
        }
    }))
}

fn incidence_sum(n: usize, weighted: &[((usize, usize), Rational)]) -> SymMatrix {
    let mut m = SymMatrix::zeros(n);
    for ((u, v), w) in weighted {
        m.add_diag(*u, w);
        m.add_diag(*v, w);
        m.set(*u, *v, m.get(*u, *v) - w);
    }
    m
}

/// `BᵀWB` for the signed edge-vertex incidence matrix `B` of a tree and
/// `W` with `a` entries `+1` and `b` entries `-1`. `B` has full row rank,
/// so the inertia is `(a, b, 1)`.
pub fn witness_tree_corank1(t: &Graph, a: usize, b: usize) -> Result<SymMatrix> {
    if !t.is_tree() {
        return Err(Error::NotTree);
    }
    witness_connected_corank1(t, a, b)
}

/// Corank-1 witness `(a, b, 1)` for any connected graph: `±1` weights on a
/// BFS spanning tree, and a common small weight `δ` on the other edges,
/// halved from 1 until the inertia is right. All rows of `B` are
/// orthogonal to the all-ones vector, so the corank never drops below 1.
pub fn witness_connected_corank1(g: &Graph, a: usize, b: usize) -> Result<SymMatrix> {
    let n = g.n();
    if !g.is_connected() || n == 0 {
        return Err(Error::Precondition("graph must be connected and nonempty".into()));
    }
    if a + b + 1 != n {
        return Err(Error::Precondition(format!("a + b = {} but n - 1 = {}", a + b, n - 1)));
    }
    let tree = bfs_tree(g);
    let mut weighted: Vec<((usize, usize), Rational)> = tree
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, if i < a { int(1) } else { int(-1) }))
        .collect();
    let extra: Vec<(usize, usize)> = g.edges().filter(|e| !tree.contains(e)).collect();
    let mut delta = Rational::one();
    let target = Inertia { pos: a, neg: b, zero: 1 };
    loop {
        weighted.truncate(tree.len());
        weighted.extend(extra.iter().map(|&e| (e, delta.clone())));
        let m = incidence_sum(n, &weighted);
        if inertia_exact(&m) == target {
            return Ok(m);
        }
        delta /= int(2);
    }
}

fn bfs_tree(g: &Graph) -> Vec<(usize, usize)> {
    let mut seen = vec![false; g.n()];
    let mut edges = Vec::new();
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                edges.push((u.min(v), u.max(v)));
                queue.push_back(v);
            }
        }
    }
    edges
}

/// `Σ_{v∈S} A_v + C`, then raised to `(r, s)`.
///
/// `A_v` is the adjacency matrix of the star of edges at `v`, of inertia
/// `(1, 1)`, and `C` is a direct sum of corank-1 witnesses on the
/// components of `G - S` totalling `(r - k, s - k)`.
pub fn witness_stars_stripes(
    g: &Graph,
    set: &VertexSet,
    r: usize,
    s: usize,
) -> Result<SymMatrix> {
    let n = g.n();
    let k = set.len();
    let rest = g.delete_vertices(set);
    let comps = rest.graph.components();
    if r < k || s < k || r + s + comps.len() != n + k {
        return Err(Error::Precondition(format!(
            "need r, s >= {k} and r + s = n - {} + {k}",
            comps.len()
        )));
    }
    let mut m = SymMatrix::zeros(n);
    for v in set.iter() {
        for &w in g.neighbors(v) {
            m.set(v, w, m.get(v, w) + int(1));
        }
    }
    let mut pos_left = r - k;
    for c in &comps {
        let size = c.len();
        let a = pos_left.min(size - 1);
        pos_left -= a;
        let sub = rest.graph.induced(c.as_slice());
        let block = witness_connected_corank1(&sub.graph, a, size - 1 - a)?;
        let at: Vec<usize> = sub.new_to_old.iter().map(|&x| rest.new_to_old[x]).collect();
        m.embed(&block, &at);
    }
    northeast_perturb(&m, (r, s))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessRoute {
    FullRank,
    Corank1,
    StarsStripes { k: usize },
    SignedAllOnes,
}

impl fmt::Display for WitnessRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessRoute::FullRank => f.write_str("full-rank"),
            WitnessRoute::Corank1 => f.write_str("corank-1"),
            WitnessRoute::StarsStripes { k } => write!(f, "stars-and-stripes (k = {k})"),
            WitnessRoute::SignedAllOnes => f.write_str("signed all-ones"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Witness {
    pub matrix: SymMatrix,
    pub route: WitnessRoute,
    pub inertia: Inertia,
}

/// A verified matrix in `S(G)` with partial inertia `(r, s)`.
///
/// Covers every elementary inertia of every graph (so all of `I(F)` for
/// forests) and all of `I(K_n)`. Other targets give `NoWitness`.
pub fn witness_for(g: &Graph, r: usize, s: usize, cfg: SearchConfig) -> Result<Witness> {
    let n = g.n();
    let (matrix, route) = if r + s > n {
        return Err(Error::NotAchievable {
            target: (r, s),
            set: format!("rank is at most {n}"),
        });
    } else if r + s == n {
        (witness_full_rank(g, r, s)?, WitnessRoute::FullRank)
    } else if let Some(k) = elementary_level(g, r, s, cfg)? {
        let (m, set) = md_with_witness(g, k, cfg)?;
        let t = n - m + k;
        let r0 = r.min(t - k);
        let base = witness_stars_stripes(g, &set, r0, t - r0)?;
        let route = if k == 0 {
            WitnessRoute::Corank1
        } else {
            WitnessRoute::StarsStripes { k }
        };
        (northeast_perturb(&base, (r, s))?, route)
    } else if g.is_complete() && r + s >= 1 {
        let sign = if r >= 1 { int(1) } else { int(-1) };
        let j = SymMatrix::from_fn(n, |_, _| sign.clone());
        (northeast_perturb(&j, (r, s))?, WitnessRoute::SignedAllOnes)
    } else if g.is_forest() {
        let set = inertia_forest(g, cfg)?.set;
        return Err(Error::NotAchievable {
            target: (r, s),
            set: set.to_string(),
        });
    } else {
        return Err(Error::NoWitness(format!(
            "({r}, {s}) is not an elementary inertia of this graph"
        )));
    };
    let inertia = inertia_exact(&matrix);
    if inertia.pin() != (r, s) || !matrix.has_pattern(g) {
        return Err(Error::Verification(format!(
            "{route} construction produced inertia {inertia} for target ({r}, {s})"
        )));
    }
    Ok(Witness {
        matrix,
        route,
        inertia,
    })
}

/// The least `k` making `(r, s)` elementary, if any.
fn elementary_level(g: &Graph, r: usize, s: usize, cfg: SearchConfig) -> Result<Option<usize>> {
    let n = g.n();
    let prof = md_profile(g, r.min(s).min(n / 2), cfg)?;
    Ok(prof
        .values
        .iter()
        .enumerate()
        .find(|&(k, &m)| m >= k && n - m + k <= r + s)
        .map(|(k, _)| k))
}
