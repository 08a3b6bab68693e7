//! From a positive semidefinite `M` of rank `k >= 2` to a matrix with the
//! same pattern whose positive and negative counts are both below `k`.
//!
//! Factor `M = AᵀA`, rotate the first two rows of `A` into general
//! position, and set `M' = BᵀB - CᵀC` where `B` has rows `a_1j²` and
//! `a_1j a_(i+1)j`, and `C` rows `a_2j²` and `a_2j a_(i+1)j`. Then
//! `m'_ij = (a_1i a_1j - a_2i a_2j) m_ij`, so zeros of `M` stay zeros and
//! nothing else vanishes.

use std::f64::consts::PI;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{float_inertia, inertia_exact, int, to_f64, Inertia, Rational, SymMatrix};
use crate::error::{Error, Result};

const MARGIN: f64 = 1e-6;
const EIG_TOL: f64 = 1e-7;

#[derive(Debug, Clone)]
pub struct SquareBreak {
    pub matrix: DMatrix<f64>,
    pub rank: usize,
    /// Rotation angle applied to the first two rows of the factor.
    pub theta: f64,
    /// Smallest normalized general-position quantity after rotation.
    pub margin: f64,
    /// Float inertia of the output at tolerance `1e-7`.
    pub inertia: Inertia,
    /// Largest entrywise gap between `(a_1i a_1j - a_2i a_2j) m_ij` and
    /// `BᵀB - CᵀC`.
    pub consistency: f64,
}

pub fn square_breaker(m: &SymMatrix) -> Result<SquareBreak> {
    let exact = inertia_exact(m);
    let k = exact.pos;
    if exact.neg != 0 || k < 2 {
        return Err(Error::Precondition(format!(
            "need a positive semidefinite matrix of rank at least 2, got inertia {exact}"
        )));
    }
    let n = m.n();
    let live: Vec<bool> = (0..n).map(|j| !m.get(j, j).is_zero()).collect();
    let factor = gram_factor(m, k, &live);

    for attempt in 0..16u64 {
        let mixed = mix(attempt, k) * &factor;
        let theta = proof_angle(&mixed, &live);
        let mut chosen = Some((theta, margin(&rotate(&mixed, theta), &live)))
            .filter(|&(_, g)| g >= MARGIN);
        if chosen.is_none() {
            chosen = (1..720)
                .map(|i| i as f64 * PI / 360.0)
                .map(|t| (t, margin(&rotate(&mixed, t), &live)))
                .find(|&(_, g)| g >= MARGIN);
        }
        let Some((theta, margin)) = chosen else {
            continue;
        };
        let a = rotate(&mixed, theta);
        return finish(m, a, k, theta, margin);
    }
    Err(Error::Verification(
        "no rotation put the factor in general position".into(),
    ))
}

fn finish(m: &SymMatrix, a: DMatrix<f64>, k: usize, theta: f64, margin: f64) -> Result<SquareBreak> {
    let n = m.n();
    let mut b = DMatrix::<f64>::zeros(k - 1, n);
    let mut c = DMatrix::<f64>::zeros(k - 1, n);
    for j in 0..n {
        b[(0, j)] = a[(0, j)] * a[(0, j)];
        c[(0, j)] = a[(1, j)] * a[(1, j)];
        for i in 1..k - 1 {
            b[(i, j)] = a[(0, j)] * a[(i + 1, j)];
            c[(i, j)] = a[(1, j)] * a[(i + 1, j)];
        }
    }
    let via_rows = b.transpose() * &b - c.transpose() * &c;
    let out = DMatrix::from_fn(n, n, |i, j| {
        (a[(0, i)] * a[(0, j)] - a[(1, i)] * a[(1, j)]) * to_f64(m.get(i, j))
    });
    let consistency = (&out - &via_rows).abs().max();
    let inertia = float_inertia(&out, EIG_TOL);
    let broken = SquareBreak {
        matrix: out,
        rank: k,
        theta,
        margin,
        inertia,
        consistency,
    };
    if !broken.pattern_matches(m) {
        return Err(Error::Verification("pattern changed".into()));
    }
    if inertia.pos >= k || inertia.neg >= k {
        return Err(Error::Verification(format!(
            "inertia {inertia} is not below rank {k}"
        )));
    }
    Ok(broken)
}

impl SquareBreak {
    /// Off-diagonal zeros of the output coincide with those of `m`.
    pub fn pattern_matches(&self, m: &SymMatrix) -> bool {
        let n = m.n();
        self.matrix.nrows() == n
            && (0..n).all(|i| {
                (0..n).all(|j| i == j || (self.matrix[(i, j)] == 0.0) == m.get(i, j).is_zero())
            })
    }
}

/// `k × n` real `A` with `AᵀA = M`, from the positive eigenpairs.
fn gram_factor(m: &SymMatrix, k: usize, live: &[bool]) -> DMatrix<f64> {
    let n = m.n();
    let eig = SymmetricEigen::new(m.to_f64());
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| eig.eigenvalues[y].total_cmp(&eig.eigenvalues[x]));
    DMatrix::from_fn(k, n, |r, j| {
        let idx = order[r];
        if live[j] {
            eig.eigenvalues[idx].max(0.0).sqrt() * eig.eigenvectors[(j, idx)]
        } else {
            0.0
        }
    })
}

/// Identity first, then seeded random orthogonal matrices.
fn mix(attempt: u64, k: usize) -> DMatrix<f64> {
    if attempt == 0 {
        return DMatrix::identity(k, k);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(attempt);
    let g = DMatrix::from_fn(k, k, |_, _| rng.gen_range(-1.0..1.0));
    g.qr().q()
}

/// The columns `x_j = (a_1j, a_2j)` map to unit-circle points
/// `z(Qx_j) = (a_1j + i a_2j) / (a_2j + i a_1j)`. With `ε` the least
/// nonzero angle between such a point and a conjugate or `±i`, the
/// rotation by `θ = ε/3` separates them all.
fn proof_angle(a: &DMatrix<f64>, live: &[bool]) -> f64 {
    let i = Complex64::i();
    let pts: Vec<Complex64> = live
        .iter()
        .enumerate()
        .filter(|&(_, &l)| l)
        .map(|(j, _)| {
            let (p, q) = (a[(0, j)], a[(1, j)]);
            let z = (p + i * q) / (q + i * p);
            z / z.norm()
        })
        .collect();
    let mut others: Vec<Complex64> = pts.iter().map(|z| z.conj()).collect();
    others.extend([i, -i]);
    let eps = pts
        .iter()
        .flat_map(|z| others.iter().map(move |w| (z / w).arg().abs()))
        .filter(|&d| d > 1e-12)
        .fold(f64::INFINITY, f64::min);
    if eps.is_finite() {
        eps / 3.0
    } else {
        PI / 3.0
    }
}

/// `U_1 A` with `U_1 = [[cos θ/2, -sin θ/2], [sin θ/2, cos θ/2]] ⊕ I`.
fn rotate(a: &DMatrix<f64>, theta: f64) -> DMatrix<f64> {
    let (s, c) = (theta / 2.0).sin_cos();
    let mut out = a.clone();
    for j in 0..a.ncols() {
        out[(0, j)] = c * a[(0, j)] - s * a[(1, j)];
        out[(1, j)] = s * a[(0, j)] + c * a[(1, j)];
    }
    out
}

/// Smallest of `|a_1j|`, `|a_2j|` and `|a_1i a_1j - a_2i a_2j|`, each
/// relative to the column norms, over nonzero columns.
fn margin(a: &DMatrix<f64>, live: &[bool]) -> f64 {
    let cols: Vec<(f64, f64)> = (0..a.ncols())
        .filter(|&j| live[j])
        .map(|j| {
            let norm = a.column(j).norm();
            (a[(0, j)] / norm, a[(1, j)] / norm)
        })
        .collect();
    let mut g = f64::INFINITY;
    for (x, &(p, q)) in cols.iter().enumerate() {
        g = g.min(p.abs()).min(q.abs());
        for &(u, v) in &cols[x..] {
            g = g.min((p * u - q * v).abs());
        }
    }
    g
}

/// `AᵀA` for a random `k × n` integer matrix with entries in `-2..=2`,
/// redrawn until the rank is `k`. Roughly a third of the entries are
/// zero, so the pattern is usually not complete.
pub fn random_gram(k: usize, n: usize, seed: u64) -> SymMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let rows: Vec<Vec<Rational>> = (0..k)
            .map(|_| (0..n).map(|_| int(rng.gen_range(-2..=2))).collect())
            .collect();
        let m = SymMatrix::gram(&rows, &vec![int(1); k]).expect("rectangular");
        if inertia_exact(&m).pos == k {
            return m;
        }
    }
}
