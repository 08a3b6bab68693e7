//! Isomorphism-invariant keys and an exact isomorphism check for small
//! graphs, used to memoize recursions and to deduplicate generated trees.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use super::Graph;

fn hash_of<T: Hash>(t: &T) -> u64 {
    let mut h = DefaultHasher::new();
    t.hash(&mut h);
    h.finish()
}

/// Stable color classes from degree-seeded color refinement.
fn refine(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let mut colors: Vec<u64> = (0..n).map(|v| g.degree(v) as u64).collect();
    let mut classes = count_classes(&colors);
    for _ in 0..n {
        let next: Vec<u64> = (0..n)
            .map(|v| {
                let mut nb: Vec<u64> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                nb.sort_unstable();
                hash_of(&(colors[v], nb))
            })
            .collect();
        let c = count_classes(&next);
        colors = next;
        if c == classes {
            break;
        }
        classes = c;
    }
    colors
}

fn count_classes(colors: &[u64]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// A key equal on isomorphic graphs. Distinct keys imply non-isomorphic
/// graphs; equal keys must be confirmed with [`is_isomorphic`].
pub fn invariant_key(g: &Graph) -> u64 {
    let mut colors = refine(g);
    colors.sort_unstable();
    hash_of(&(g.n(), g.num_edges(), colors))
}

/// Exact isomorphism test by backtracking over refined color classes.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.n();
    if n != b.n() || a.num_edges() != b.num_edges() {
        return false;
    }
    // refine both graphs jointly so colors are comparable
    let joint = Graph::disjoint_union(&[a, b]);
    let colors = refine(&joint);
    let (ca, cb) = colors.split_at(n);
    let mut sa = ca.to_vec();
    let mut sb = cb.to_vec();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return false;
    }
    // map vertices of `a` in order of rarest class first
    let mut order: Vec<usize> = (0..n).collect();
    let freq = |c: u64| ca.iter().filter(|&&x| x == c).count();
    order.sort_by_key(|&v| (freq(ca[v]), v));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(a, b, ca, cb, &order, 0, &mut map, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    a: &Graph,
    b: &Graph,
    ca: &[u64],
    cb: &[u64],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..b.n() {
        if used[w] || cb[w] != ca[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| a.has_edge(u, v) == b.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(a, b, ca, cb, order, depth + 1, map, used) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}

/// Canonical string of a tree (AHU encoding rooted at a center, minimized
/// over the one or two centers). Equal codes iff isomorphic trees.
pub fn tree_code(t: &Graph) -> String {
    assert!(t.is_tree(), "tree_code needs a tree");
    centers(t)
        .into_iter()
        .map(|c| rooted_code(t, c, usize::MAX))
        .min()
        .expect("a tree has a center")
}

fn rooted_code(t: &Graph, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_code(t, w, v))
        .collect();
    kids.sort_unstable();
    format!("({})", kids.concat())
}

fn centers(t: &Graph) -> Vec<usize> {
    let n = t.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in t.neighbors(leaf) {
                if deg[w] > 1 {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
            deg[leaf] = 0;
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}
