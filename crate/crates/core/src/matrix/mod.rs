//! Symmetric matrices over the rationals, exact inertia, and the
//! constructions that realize points of an inertia set.

mod g12;
mod perturb;
mod sample;
mod square;
mod witness;

pub use g12::{
    certificates, g12_suite, g13_graph, m13, Certificate, CertificateCheck, G12Report,
    EXCLUSION_NOTE, M13_LABELS,
};
pub use perturb::northeast_perturb;
pub use sample::{sample_inertias, SampleConfig};
pub use square::{random_gram, square_breaker, SquareBreak};
pub use witness::{
    witness_connected_corank1, witness_for, witness_full_rank, witness_stars_stripes,
    witness_tree_corank1, Witness, WitnessRoute,
};

use std::fmt;
use std::str::FromStr;

use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// `(π, ν, δ)`: positive, negative and zero eigenvalue counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Inertia {
    pub pos: usize,
    pub neg: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn pin(self) -> (usize, usize) {
        (self.pos, self.neg)
    }

    pub fn rank(self) -> usize {
        self.pos + self.neg
    }
}

impl fmt::Display for Inertia {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.pos, self.neg, self.zero)
    }
}

/// A real symmetric matrix with exact rational entries, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymMatrix {
    n: usize,
    a: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    n: usize,
    entries: Vec<String>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            n,
            a: vec![Rational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Calls `f(i, j)` for `i <= j` and mirrors.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in i..n {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Matrix("rows must all have length n".into()));
        }
        let a: Vec<Rational> = rows.into_iter().flatten().collect();
        let m = SymMatrix { n, a };
        for i in 0..n {
            for j in 0..i {
                if m.get(i, j) != m.get(j, i) {
                    return Err(Error::Matrix(format!("not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(m)
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
    }

    /// `Pᵀ D P` for a `k × n` matrix `P` given by rows and diagonal `D`.
    pub fn gram(rows: &[Vec<Rational>], diag: &[Rational]) -> Result<Self> {
        if rows.len() != diag.len() {
            return Err(Error::Matrix("one diagonal weight per row".into()));
        }
        let n = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Matrix("ragged rows".into()));
        }
        Ok(Self::from_fn(n, |i, j| {
            rows.iter()
                .zip(diag)
                .map(|(r, d)| d * &r[i] * &r[j])
                .sum()
        }))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.a[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        let n = self.n;
        self.a[j * n + i] = v.clone();
        self.a[i * n + j] = v;
    }

    pub fn add_diag(&mut self, i: usize, v: &Rational) {
        let n = self.n;
        self.a[i * n + i] += v;
    }

    pub fn add(&self, other: &SymMatrix) -> SymMatrix {
        assert_eq!(self.n, other.n, "dimension mismatch");
        SymMatrix {
            n: self.n,
            a: self.a.iter().zip(&other.a).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> SymMatrix {
        SymMatrix {
            n: self.n,
            a: self.a.iter().map(|x| x * c).collect(),
        }
    }

    pub fn neg(&self) -> SymMatrix {
        self.scale(&int(-1))
    }

    /// `A + c·x·xᵀ`.
    pub fn rank_one_update(&self, c: &Rational, x: &[Rational]) -> SymMatrix {
        let mut m = self.clone();
        for i in 0..self.n {
            for j in i..self.n {
                let v = m.get(i, j) + c * &x[i] * &x[j];
                m.set(i, j, v);
            }
        }
        m
    }

    /// The principal submatrix on `keep`, in the given order.
    pub fn principal(&self, keep: &[usize]) -> SymMatrix {
        Self::from_fn(keep.len(), |i, j| self.get(keep[i], keep[j]).clone())
    }

    /// Places `block` at the rows and columns listed in `at`.
    pub fn embed(&mut self, block: &SymMatrix, at: &[usize]) {
        for i in 0..block.n {
            for j in i..block.n {
                self.set(at[i], at[j], block.get(i, j).clone());
            }
        }
    }

    /// The graph of nonzero off-diagonal entries.
    pub fn pattern(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for i in 0..self.n {
            for j in i + 1..self.n {
                if !self.get(i, j).is_zero() {
                    g.add_edge(i, j).expect("fresh edge");
                }
            }
        }
        g
    }

    pub fn has_pattern(&self, g: &Graph) -> bool {
        self.n == g.n()
            && (0..self.n).all(|i| {
                (i + 1..self.n).all(|j| self.get(i, j).is_zero() != g.has_edge(i, j))
            })
    }

    pub fn to_f64(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.n, self.n, |i, j| to_f64(self.get(i, j)))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(MatrixJson {
            n: self.n,
            entries: self.a.iter().map(|x| x.to_string()).collect(),
        })
        .expect("plain data")
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let raw: MatrixJson = serde_json::from_str(text)?;
        if raw.entries.len() != raw.n * raw.n {
            return Err(Error::Matrix(format!(
                "{} entries for n = {}",
                raw.entries.len(),
                raw.n
            )));
        }
        let mut a = Vec::with_capacity(raw.entries.len());
        for e in &raw.entries {
            a.push(
                Rational::from_str(e.trim())
                    .map_err(|_| Error::Matrix(format!("bad rational `{e}`")))?,
            );
        }
        let rows = a.chunks(raw.n.max(1)).map(<[_]>::to_vec).collect();
        if raw.n == 0 {
            return Ok(Self::zeros(0));
        }
        Self::from_rows(rows)
    }
}

pub(crate) fn to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

/// Exact inertia by congruence: symmetric elimination with `1×1` pivots
/// on nonzero diagonal entries and `2×2` pivots `[[0, a], [a, 0]]`
/// (inertia `(1, 1)`) when the remaining diagonal is zero.
pub fn inertia_exact(m: &SymMatrix) -> Inertia {
    let n = m.n;
    let mut w: Vec<Vec<Rational>> = (0..n).map(|i| m.a[i * n..(i + 1) * n].to_vec()).collect();
    let mut active: Vec<usize> = (0..n).collect();
    let (mut pos, mut neg) = (0, 0);
    loop {
        if let Some(p) = active.iter().position(|&i| !w[i][i].is_zero()) {
            let i = active.swap_remove(p);
            let piv = w[i][i].clone();
            if piv.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            let col: Vec<Rational> = active.iter().map(|&k| &w[k][i] / &piv).collect();
            for (x, &k) in active.iter().enumerate() {
                if col[x].is_zero() {
                    continue;
                }
                for &l in &active {
                    let d = &col[x] * &w[i][l];
                    w[k][l] -= d;
                }
            }
            continue;
        }
        let off = active.iter().enumerate().find_map(|(x, &i)| {
            active[x + 1..]
                .iter()
                .find(|&&j| !w[i][j].is_zero())
                .map(|&j| (i, j))
        });
        let Some((i, j)) = off else {
            break;
        };
        active.retain(|&k| k != i && k != j);
        pos += 1;
        neg += 1;
        let a = w[i][j].clone();
        let rows: Vec<(Rational, Rational)> = active
            .iter()
            .map(|&k| (&w[k][i] / &a, &w[k][j] / &a))
            .collect();
        for (x, &k) in active.iter().enumerate() {
            for &l in &active {
                let d = &rows[x].0 * &w[j][l] + &rows[x].1 * &w[i][l];
                w[k][l] -= d;
            }
        }
    }
    Inertia {
        pos,
        neg,
        zero: n - pos - neg,
    }
}

/// Eigenvalue sign counts with `|λ| <= tol` treated as zero.
pub fn float_inertia(m: &DMatrix<f64>, tol: f64) -> Inertia {
    count_signs(SymmetricEigen::new(m.clone()).eigenvalues.iter().copied(), tol)
}

pub(crate) fn count_signs(values: impl Iterator<Item = f64>, tol: f64) -> Inertia {
    let mut inertia = Inertia {
        pos: 0,
        neg: 0,
        zero: 0,
    };
    for v in values {
        if v > tol {
            inertia.pos += 1;
        } else if v < -tol {
            inertia.neg += 1;
        } else {
            inertia.zero += 1;
        }
    }
    inertia
}
