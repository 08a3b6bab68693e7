//! A 12-vertex graph whose inertial partition is `(3, 3, 2)`, built from
//! thirteen cube directions in `R³`.
//!
//! The columns of `M13` are representatives of the lines through the
//! centres of opposite faces (`x, y, z`), edges (`1..6`) and corners
//! (`7..10`) of a cube. `G13` joins two columns when they are not
//! orthogonal, and `G12 = G13 - 10`. Then `M12ᵀM12 ∈ S(G12)` has partial
//! inertia `(3, 0)`, and squaring it off gives `(2, 2)`. That
//! `(2, 1) ∉ I(G12)` is a theorem, not a finite computation, and is only
//! recorded here.

use std::fmt;

use super::{inertia_exact, int, square_breaker, Inertia, Rational, SymMatrix};
use crate::error::Result;
use crate::graph::Graph;
use crate::lattice::{LatticeSet, Partition};

pub const M13_LABELS: [&str; 13] = [
    "x", "y", "z", "1", "2", "3", "4", "5", "6", "7", "8", "9", "10",
];

const M13_ROWS: [[i64; 13]; 3] = [
    [1, 0, 0, 0, 1, 1, 0, -1, 1, 1, -1, -1, 1],
    [0, 1, 0, 1, 0, 1, 1, 0, -1, -1, 1, -1, 1],
    [0, 0, 1, 1, 1, 0, -1, 1, 0, -1, -1, 1, 1],
];

pub const EXCLUSION_NOTE: &str =
    "(2,1) is not a Hermitian partial inertia of G12: established by proof, not checked here";

fn label_index(label: &str) -> usize {
    M13_LABELS
        .iter()
        .position(|&l| l == label)
        .expect("known label")
}

/// The `3 × 13` integer matrix, as rows.
pub fn m13() -> Vec<Vec<Rational>> {
    M13_ROWS
        .iter()
        .map(|r| r.iter().map(|&v| int(v)).collect())
        .collect()
}

fn columns(rows: &[Vec<Rational>], keep: &[usize]) -> Vec<Vec<Rational>> {
    rows.iter()
        .map(|r| keep.iter().map(|&j| r[j].clone()).collect())
        .collect()
}

fn gram(rows: &[Vec<Rational>]) -> SymMatrix {
    SymMatrix::gram(rows, &vec![int(1); rows.len()]).expect("rectangular")
}

/// Columns of `M13` joined when not orthogonal.
pub fn g13_graph() -> Graph {
    gram(&m13()).pattern()
}

fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let mut c = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                c.add_edge(u, v).expect("fresh edge");
            }
        }
    }
    c
}

fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, &edges).expect("valid")
}

/// A diagonal `D` and a `3 × n` matrix `M` with `MᵀDM ∈ S(G13 - deleted)`.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub deleted: Vec<&'static str>,
    pub diag: [i64; 3],
    /// Columns of the deleted vertices are `None`.
    pub rows: [[Option<i64>; 13]; 3],
}

impl Certificate {
    pub fn name(&self) -> String {
        format!("G13 - {{{}}}", self.deleted.join(","))
    }

    fn kept(&self) -> Vec<usize> {
        let gone: Vec<usize> = self.deleted.iter().map(|l| label_index(l)).collect();
        (0..13).filter(|j| !gone.contains(j)).collect()
    }

    pub fn graph(&self) -> Graph {
        g13_graph().induced(&self.kept()).graph
    }

    pub fn matrix(&self) -> SymMatrix {
        let kept = self.kept();
        let rows: Vec<Vec<Rational>> = self
            .rows
            .iter()
            .map(|r| kept.iter().map(|&j| int(r[j].expect("kept column"))).collect())
            .collect();
        let d: Vec<Rational> = self.diag.iter().map(|&v| int(v)).collect();
        SymMatrix::gram(&rows, &d).expect("rectangular")
    }
}

const N: Option<i64> = None;

fn s(v: i64) -> Option<i64> {
    Some(v)
}

pub fn certificates() -> Vec<Certificate> {
    vec![
        Certificate {
            deleted: vec!["x"],
            diag: [3, 1, -2],
            rows: [
                [N, s(0), s(2), s(-1), s(1), s(1), s(-1), s(0), s(1), s(0), s(1), s(0), s(1)],
                [N, s(1), s(0), s(1), s(0), s(-1), s(-1), s(0), s(1), s(-2), s(3), s(2), s(-3)],
                [N, s(0), s(3), s(1), s(0), s(1), s(1), s(1), s(1), s(1), s(0), s(1), s(0)],
            ],
        },
        Certificate {
            deleted: vec!["3"],
            diag: [1, 1, -1],
            rows: [
                [s(1), s(0), s(0), s(0), s(2), N, s(0), s(1), s(-1), s(1), s(4), s(1), s(2)],
                [s(0), s(1), s(0), s(2), s(0), N, s(1), s(0), s(1), s(4), s(1), s(1), s(2)],
                [s(0), s(0), s(1), s(1), s(1), N, s(2), s(2), s(0), s(2), s(2), s(2), s(1)],
            ],
        },
        Certificate {
            deleted: vec!["7", "8"],
            diag: [1, 1, -1],
            rows: [
                [s(1), s(0), s(0), s(0), s(2), s(1), s(0), s(1), s(-1), N, N, s(1), s(2)],
                [s(0), s(1), s(0), s(2), s(0), s(1), s(1), s(0), s(1), N, N, s(1), s(2)],
                [s(0), s(0), s(1), s(1), s(1), s(0), s(2), s(2), s(0), N, N, s(2), s(1)],
            ],
        },
    ]
}

#[derive(Debug, Clone)]
pub struct CertificateCheck {
    pub name: String,
    pub inertia: Inertia,
    pub pattern_matches: bool,
}

impl CertificateCheck {
    pub fn passed(&self) -> bool {
        self.pattern_matches && self.inertia.pin() == (2, 1)
    }
}

#[derive(Debug, Clone)]
pub struct G12Report {
    pub g13_edges: usize,
    pub m13_inertia: Inertia,
    pub m12_inertia: Inertia,
    pub petersen_complement: bool,
    pub certificates: Vec<CertificateCheck>,
    /// Float inertia of the squared-off `M12ᵀM12`, if the transform ran.
    pub broken: Option<Inertia>,
    /// Points realized above, their reflections, and everything northeast.
    pub lower_bound: LatticeSet,
    pub partition: Option<Partition>,
}

impl G12Report {
    pub fn checks(&self) -> Vec<(String, bool)> {
        let mut out = vec![
            (
                format!("pin(M12ᵀM12) = (3,0,9): got {}", self.m12_inertia),
                self.m12_inertia
                    == Inertia {
                        pos: 3,
                        neg: 0,
                        zero: 9,
                    },
            ),
            (
                "vertices 1..10 of G13 induce the complement of the Petersen graph".into(),
                self.petersen_complement,
            ),
        ];
        for c in &self.certificates {
            out.push((
                format!(
                    "{}: pin ({},{}), pattern {}",
                    c.name,
                    c.inertia.pos,
                    c.inertia.neg,
                    if c.pattern_matches { "matches" } else { "differs" }
                ),
                c.passed(),
            ));
        }
        let b = self.broken.map(|i| i.pin());
        let shown = b.map_or("nothing".to_string(), |(p, q)| format!("({p},{q})"));
        out.push((
            format!("squaring off M12ᵀM12 gives pin {shown}, at most (2,2)"),
            matches!(b, Some((p, q)) if p <= 2 && q <= 2),
        ));
        out.push((
            format!(
                "lower bound has partition {}",
                self.partition
                    .as_ref()
                    .map_or("none".to_string(), |p| p.to_string())
            ),
            self.partition.as_ref().map(|p| p.parts().to_vec()) == Some(vec![3, 3, 2]),
        ));
        out
    }

    pub fn passed(&self) -> bool {
        self.checks().iter().all(|(_, ok)| *ok)
    }
}

impl fmt::Display for G12Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "G13: 13 vertices, {} edges", self.g13_edges)?;
        for (msg, ok) in self.checks() {
            writeln!(f, "{} {msg}", if ok { "PASS" } else { "FAIL" })?;
        }
        write!(f, "NOTE {EXCLUSION_NOTE}")
    }
}

pub fn g12_suite() -> Result<G12Report> {
    let rows = m13();
    let g13 = g13_graph();
    let m12 = gram(&columns(&rows, &(0..12).collect::<Vec<_>>()));
    let ten: Vec<usize> = (3..13).collect();
    let petersen_complement =
        crate::graph::is_isomorphic(&g13.induced(&ten).graph, &complement(&petersen()));
    let certificates = certificates()
        .iter()
        .map(|c| {
            let m = c.matrix();
            CertificateCheck {
                name: c.name(),
                inertia: inertia_exact(&m),
                pattern_matches: m.has_pattern(&c.graph()),
            }
        })
        .collect();
    let m12_inertia = inertia_exact(&m12);
    let broken = square_breaker(&m12).ok().map(|b| b.inertia);
    // observed points, their negations, and the northeast closure
    let mut seen = vec![m12_inertia.pin()];
    seen.extend(broken.map(Inertia::pin));
    let swapped: Vec<(usize, usize)> = seen.iter().map(|&(p, q)| (q, p)).collect();
    let lower_bound = LatticeSet::finite(12, seen.into_iter().chain(swapped));
    Ok(G12Report {
        g13_edges: g13.num_edges(),
        m13_inertia: inertia_exact(&gram(&rows)),
        m12_inertia,
        petersen_complement,
        certificates,
        broken,
        partition: lower_bound.to_partition().ok(),
        lower_bound,
    })
}
