//! Elementary inertias, computed two ways: from the maximal-disconnection
//! profile (a union of trapezoids) and from color vectors of bicolored
//! spans.

mod spans;

pub use spans::{
    color_vectors, enumerate_spans, for_each_span, BicoloredSpan, SpanConfig, SpanMode,
};

use crate::error::Result;
use crate::graph::Graph;
use crate::lattice::LatticeSet;
use crate::params::{md_profile, SearchConfig};

/// `E(G)`: points `(x, y)` with `k <= x, y` and
/// `n - MD_k + k <= x + y <= n` for some `k` with `MD_k >= k`.
pub fn elementary_set(g: &Graph, cfg: SearchConfig) -> Result<LatticeSet> {
    let n = g.n();
    // MD_k >= k forces 2k <= n
    let prof = md_profile(g, n / 2, cfg)?;
    let mut corners = Vec::new();
    for (k, &m) in prof.values.iter().enumerate() {
        if m < k {
            continue;
        }
        let t = n - m + k;
        corners.extend((k..=t - k).map(|x| (x, t - x)));
    }
    Ok(LatticeSet::finite(n, corners))
}

/// `[ne(C(G))]_n`, the elementary set rebuilt from color vectors.
pub fn elementary_from_spans(g: &Graph, cfg: SpanConfig) -> Result<LatticeSet> {
    Ok(LatticeSet::finite(g.n(), color_vectors(g, cfg)?))
}

/// Both constructions of `E(G)` agree.
pub fn check_elementary_equals_spans(
    g: &Graph,
    search: SearchConfig,
    spans: SpanConfig,
) -> Result<bool> {
    Ok(elementary_set(g, search)? == elementary_from_spans(g, spans)?)
}

/// Splits `E(G)` by whether `v` is deleted: returns the sets generated by
/// color vectors of spans with `v ∈ S` and with `v ∉ S`, each capped at `n`.
pub fn ev_split(g: &Graph, v: usize, cfg: SpanConfig) -> Result<(LatticeSet, LatticeSet)> {
    let mut deleting = Vec::new();
    let mut keeping = Vec::new();
    for_each_span(g, cfg, |span| {
        let cv = span.color_vector();
        if span.s.contains(v) {
            deleting.push(cv);
        } else {
            keeping.push(cv);
        }
    })?;
    let n = g.n();
    Ok((LatticeSet::finite(n, deleting), LatticeSet::finite(n, keeping)))
}
