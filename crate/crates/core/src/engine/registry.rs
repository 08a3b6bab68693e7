//! Known inertia sets of atomic blocks.
//!
//! Built in: complete graphs (`N²_[1,n]`, and `N²_[0,1]` for `K_1`), paths
//! (`N²_[n-1,n]`) and stars. Users may add entries from a JSON file; those
//! take priority over the built-ins and are reported as unverified.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::graph::{invariant_key, is_isomorphic, Graph};
use crate::lattice::LatticeSet;

/// A user-supplied block and its claimed inertia set.
#[derive(Debug, Clone)]
pub struct RegistryEntry {
    pub name: String,
    pub graph: Graph,
    pub set: LatticeSet,
    pub note: String,
    key: u64,
}

#[derive(Debug, Deserialize)]
struct RawEntry {
    name: String,
    n: usize,
    corners: Vec<[usize; 2]>,
    #[serde(default)]
    note: String,
    #[serde(default)]
    edges: Option<Vec<[usize; 2]>>,
}

/// Where a registry hit came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockSource {
    BuiltIn(String),
    User(String),
}

/// Lookup table from atomic graphs to inertia sets.
#[derive(Debug, Clone, Default)]
pub struct BaseRegistry {
    user: Vec<RegistryEntry>,
}

impl BaseRegistry {
    /// Only the built-in families.
    pub fn builtin() -> Self {
        BaseRegistry::default()
    }

    /// Parses a JSON array of `{"name", "n", "corners", "note"}` objects.
    ///
    /// The block graph comes from an optional `"edges"` list, or else from
    /// a family name: `K<n>`, `P<n>`, `S<n>` or `C<n>`.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let raw: Vec<RawEntry> = serde_json::from_str(text)?;
        let mut user = Vec::with_capacity(raw.len());
        for e in raw {
            user.push(Self::validate(e)?);
        }
        Ok(BaseRegistry { user })
    }

    fn validate(e: RawEntry) -> Result<RegistryEntry> {
        let bad = |msg: String| Error::Registry(format!("entry `{}`: {msg}", e.name));
        let graph = match &e.edges {
            Some(edges) => {
                let pairs: Vec<(usize, usize)> = edges.iter().map(|&[u, v]| (u, v)).collect();
                Graph::from_edges(e.n, &pairs).map_err(|err| bad(err.to_string()))?
            }
            None => family_graph(&e.name)
                .ok_or_else(|| bad("no `edges` and the name is not K<n>, P<n>, S<n> or C<n>".into()))?,
        };
        if graph.n() != e.n {
            return Err(bad(format!("graph has {} vertices, entry says {}", graph.n(), e.n)));
        }
        if let Some(&[r, s]) = e.corners.iter().find(|&&[r, s]| r + s > e.n) {
            return Err(bad(format!("corner ({r},{s}) exceeds rank {}", e.n)));
        }
        let set = LatticeSet::finite(e.n, e.corners.iter().map(|&[r, s]| (r, s)));
        if !set.is_symmetric() {
            return Err(bad(format!("set is not symmetric: {set}")));
        }
        Ok(RegistryEntry {
            key: invariant_key(&graph),
            name: e.name,
            graph,
            set,
            note: e.note,
        })
    }

    pub fn user_entries(&self) -> &[RegistryEntry] {
        &self.user
    }

    /// The inertia set of `g` if it is a registered block.
    pub fn lookup(&self, g: &Graph) -> Option<(LatticeSet, BlockSource)> {
        let key = invariant_key(g);
        if let Some(e) = self
            .user
            .iter()
            .find(|e| e.key == key && is_isomorphic(&e.graph, g))
        {
            return Some((e.set.clone(), BlockSource::User(e.name.clone())));
        }
        builtin_set(g)
    }
}

fn family_graph(name: &str) -> Option<Graph> {
    let (head, digits) = name.split_at(name.find(|c: char| c.is_ascii_digit())?);
    let n: usize = digits.parse().ok()?;
    match head {
        "K" => Some(Graph::complete(n)),
        "P" if n >= 1 => Some(Graph::path(n)),
        "S" if n >= 3 => Some(Graph::star(n)),
        "C" if n >= 3 => Some(Graph::cycle(n)),
        _ => None,
    }
}

/// `I(S_n)`: the axis points from `n - 1`, and everything with
/// `r, s >= 1`.
pub fn star_set(n: usize) -> LatticeSet {
    LatticeSet::finite(n, [(n - 1, 0), (1, 1), (0, n - 1)])
}

fn builtin_set(g: &Graph) -> Option<(LatticeSet, BlockSource)> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    if g.is_complete() {
        let set = if n == 1 {
            LatticeSet::region(0, 1, 1)
        } else {
            LatticeSet::region(1, n, n)
        };
        return Some((set.expect("valid region"), BlockSource::BuiltIn(format!("K{n}"))));
    }
    if g.is_path() {
        let set = LatticeSet::region(n - 1, n, n).expect("valid region");
        return Some((set, BlockSource::BuiltIn(format!("P{n}"))));
    }
    if g.star_center().is_some() {
        return Some((star_set(n), BlockSource::BuiltIn(format!("S{n}"))));
    }
    None
}

/// Short human-readable name for an unrecognized block.
pub fn describe_block(g: &Graph) -> String {
    if g.n() >= 3 && g.num_edges() == g.n() && (0..g.n()).all(|v| g.degree(v) == 2) && g.is_connected() {
        return format!("C{}", g.n());
    }
    let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("block on {} vertices [{}]", g.n(), edges.join(" "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins() {
        let reg = BaseRegistry::builtin();
        let (k1, _) = reg.lookup(&Graph::new(1)).unwrap();
        assert_eq!(k1, LatticeSet::region(0, 1, 1).unwrap());
        let (k2, _) = reg.lookup(&Graph::path(2)).unwrap();
        assert_eq!(k2.corners(), &[(0, 1), (1, 0)]);
        let (s4, src) = reg.lookup(&Graph::star(4)).unwrap();
        assert_eq!(s4.corners(), &[(0, 3), (1, 1), (3, 0)]);
        assert_eq!(src, BlockSource::BuiltIn("S4".into()));
        assert_eq!(reg.lookup(&Graph::path(5)).unwrap().0.corners().len(), 5);
        assert!(reg.lookup(&Graph::cycle(4)).is_none());
        assert_eq!(describe_block(&Graph::cycle(5)), "C5");
    }

    #[test]
    fn user_entries_take_priority_and_validate() {
        let text = r#"[
            {"name": "C4", "n": 4, "corners": [[2,0],[1,1],[0,2]], "note": "claimed"},
            {"name": "odd", "n": 3, "edges": [[0,1],[1,2],[0,2]], "corners": [[1,0],[0,1]]}
        ]"#;
        let reg = BaseRegistry::from_json_str(text).unwrap();
        let (set, src) = reg.lookup(&Graph::cycle(4)).unwrap();
        assert_eq!(src, BlockSource::User("C4".into()));
        assert_eq!(set.corners(), &[(0, 2), (1, 1), (2, 0)]);
        assert!(matches!(reg.lookup(&Graph::complete(3)).unwrap().1, BlockSource::User(_)));

        let asym = r#"[{"name": "K3", "n": 3, "corners": [[1,0]]}]"#;
        assert!(matches!(BaseRegistry::from_json_str(asym), Err(Error::Registry(_))));
        let over = r#"[{"name": "K3", "n": 3, "corners": [[4,0],[0,4]]}]"#;
        assert!(BaseRegistry::from_json_str(over).is_err());
        let anon = r#"[{"name": "blob", "n": 3, "corners": [[1,0],[0,1]]}]"#;
        assert!(BaseRegistry::from_json_str(anon).is_err());
        assert!(BaseRegistry::from_json_str("{").is_err());
    }
}
