//! Random members of `S(G)` and the partial inertias they hit.

use std::collections::BTreeSet;

use nalgebra::{DMatrix, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::count_signs;
use crate::graph::Graph;
use crate::lattice::LatticeSet;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleConfig {
    pub trials: usize,
    pub seed: u64,
    /// Eigenvalues within this distance of zero count as zero.
    pub tol: f64,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            trials: 10_000,
            seed: 0,
            tol: 1e-9,
        }
    }
}

/// Observed partial inertias of random matrices in `S(G)`, closed
/// upward within rank `n`. A lower bound for `I(G)` up to the tolerance.
///
/// Each trial draws off-diagonal entries `±U[0.5, 1.5]` on edges and
/// diagonal entries `U[-2, 2]`, and records the inertia of `A` and of
/// `A - λI` for every eigenvalue `λ` of `A`. Trial `t` uses its own
/// stream of a ChaCha generator seeded with `seed`, so the result does
/// not depend on scheduling.
pub fn sample_inertias(g: &Graph, cfg: SampleConfig) -> LatticeSet {
    let n = g.n();
    if n == 0 {
        return LatticeSet::finite(0, [(0, 0)]);
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let seen = (0..cfg.trials as u64)
        .into_par_iter()
        .fold(BTreeSet::new, |mut acc, trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            rng.set_stream(trial);
            let mut a = DMatrix::<f64>::zeros(n, n);
            for i in 0..n {
                a[(i, i)] = rng.gen_range(-2.0..=2.0);
            }
            for &(u, v) in &edges {
                let mag: f64 = rng.gen_range(0.5..=1.5);
                let x = if rng.gen::<bool>() { mag } else { -mag };
                a[(u, v)] = x;
                a[(v, u)] = x;
            }
            let eig = SymmetricEigen::new(a).eigenvalues;
            acc.insert(count_signs(eig.iter().copied(), cfg.tol).pin());
            for &lam in eig.iter() {
                acc.insert(count_signs(eig.iter().map(|&x| x - lam), cfg.tol).pin());
            }
            acc
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    LatticeSet::finite(n, seen)
}
