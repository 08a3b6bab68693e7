//! Worked examples with known answers, checked end to end.
//!
//! Cut-vertex checks go through the supplied registry, so a registry with
//! wrong entries makes the suite fail.

use crate::engine::{
    inertia_cut_recursive, inertia_forest, l_stripe, pi_profile, BaseRegistry, CutOptions,
};
use crate::error::Result;
use crate::graph::Graph;
use crate::lattice::LatticeSet;
use crate::matrix::{inertia_exact, int, witness_for, SymMatrix};
use crate::params::{SearchConfig, TreeParams};

#[derive(Debug, Clone)]
pub struct GoldenOutcome {
    pub name: &'static str,
    pub failures: Vec<String>,
}

impl GoldenOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// A 6-vertex tree: `S4` centred at 0 with a `P3` hanging off leaf 3.
pub fn star_with_pendant_path() -> Graph {
    Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]).expect("valid")
}

struct Check<'a> {
    failures: &'a mut Vec<String>,
}

impl Check<'_> {
    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, got: T, want: T) {
        if got != want {
            self.failures.push(format!("{what}: got {got:?}, expected {want:?}"));
        }
    }

    fn holds(&mut self, what: &str, ok: bool) {
        if !ok {
            self.failures.push(what.to_string());
        }
    }
}

type Case = fn(&BaseRegistry, SearchConfig, &mut Check) -> Result<()>;

fn both_cut_options(
    g: &Graph,
    reg: &BaseRegistry,
    want: &LatticeSet,
    check: &mut Check,
) -> Result<()> {
    for (label, opts) in [
        ("cut recursion with shortcut", CutOptions::default()),
        (
            "cut recursion without shortcut",
            CutOptions {
                degree_two_shortcut: false,
                prefer_registry: false,
            },
        ),
    ] {
        let got = inertia_cut_recursive(g, reg, opts)?.set;
        check.eq(label, &got, want);
    }
    Ok(())
}

fn all_ones(reg: &BaseRegistry, _: SearchConfig, check: &mut Check) -> Result<()> {
    for n in 1..=6 {
        let j = SymMatrix::from_fn(n, |_, _| int(1));
        check.eq("pin(J_n)", inertia_exact(&j).pin(), (1, 0));
        check.eq("pin(-J_n)", inertia_exact(&j.neg()).pin(), (0, 1));
        if n >= 2 {
            let got = inertia_cut_recursive(&Graph::complete(n), reg, CutOptions::default())?.set;
            check.eq("I(K_n)", got, LatticeSet::region(1, n, n)?);
        }
    }
    Ok(())
}

fn paths(reg: &BaseRegistry, cfg: SearchConfig, check: &mut Check) -> Result<()> {
    for n in 1..=7 {
        let p = Graph::path(n);
        let want = LatticeSet::region(n - 1, n, n)?;
        check.eq("I(P_n) by forest formula", &inertia_forest(&p, cfg)?.set, &want);
        both_cut_options(&p, reg, &want, check)?;
    }
    Ok(())
}

fn star(reg: &BaseRegistry, cfg: SearchConfig, check: &mut Check) -> Result<()> {
    let s4 = Graph::star(4);
    let want = LatticeSet::finite(4, [(3, 0), (0, 3), (1, 1)]);
    check.eq("I(S4)", &inertia_forest(&s4, cfg)?.set, &want);
    both_cut_options(&s4, reg, &want, check)?;
    let w = witness_for(&s4, 1, 1, cfg)?;
    check.eq("S4 witness at (1,1)", w.inertia.pin(), (1, 1));
    Ok(())
}

fn star_with_path(reg: &BaseRegistry, cfg: SearchConfig, check: &mut Check) -> Result<()> {
    let t = star_with_pendant_path();
    let p = TreeParams::compute(&t, cfg)?;
    check.eq("(P, mr, c)", (p.p, p.mr, p.c), (2, 4, 1));
    check.eq("MD", p.md, vec![1, 3]);
    let want = LatticeSet::finite(6, [(5, 0), (3, 1), (2, 2), (1, 3), (0, 5)]);
    check.eq("I(T)", &inertia_forest(&t, cfg)?.set, &want);
    both_cut_options(&t, reg, &want, check)
}

fn two_stars(reg: &BaseRegistry, cfg: SearchConfig, check: &mut Check) -> Result<()> {
    let t = Graph::star4_sum(2);
    let p = TreeParams::compute(&t, cfg)?;
    check.eq("(P, mr, c)", (p.p, p.mr, p.c), (3, 4, 2));
    check.eq("MD", p.md, vec![1, 3, 5]);
    let set = inertia_forest(&t, cfg)?.set;
    check.eq("rank-4 slice", set.stripe(4).points(), vec![(2, 2)]);
    check.eq("L_T", l_stripe(&t, cfg)?.points(), vec![(2, 2)]);
    both_cut_options(&t, reg, &set, check)
}

fn four_stars(reg: &BaseRegistry, cfg: SearchConfig, check: &mut Check) -> Result<()> {
    let t = Graph::star4_sum(4);
    let p = TreeParams::compute(&t, cfg)?;
    check.eq("(P, c)", (p.p, p.c), (5, 4));
    check.eq("MD", p.md, vec![1, 4, 5, 7, 9]);
    check.eq("π", pi_profile(&t, cfg)?, vec![12, 9, 8, 6, 4]);
    check.eq("L_T", l_stripe(&t, cfg)?.points(), vec![(4, 4)]);
    let set = inertia_forest(&t, cfg)?.set;
    both_cut_options(&t, reg, &set, check)
}

fn five_stars(reg: &BaseRegistry, cfg: SearchConfig, check: &mut Check) -> Result<()> {
    let t = Graph::star4_sum(5);
    let set = inertia_forest(&t, cfg)?.set;
    check.holds("(11,1) in I", set.contains(11, 1));
    check.holds("(5,5) in I", set.contains(5, 5));
    check.holds("(8,3) not in I", !set.contains(8, 3));
    let cut = inertia_cut_recursive(&t, reg, CutOptions::default())?.set;
    check.eq("cut recursion", &cut, &set);
    Ok(())
}

const CASES: [(&str, Case); 7] = [
    ("all-ones matrices and complete graphs", all_ones),
    ("paths", paths),
    ("star on four vertices", star),
    ("star with a pendant path", star_with_path),
    ("two stars glued at a leaf", two_stars),
    ("four stars glued at a leaf", four_stars),
    ("five stars: stripes are not convex between ranks", five_stars),
];

pub fn golden_suite(reg: &BaseRegistry, cfg: SearchConfig) -> Vec<GoldenOutcome> {
    CASES
        .iter()
        .map(|&(name, case)| {
            let mut failures = Vec::new();
            if let Err(e) = case(reg, cfg, &mut Check {
                failures: &mut failures,
            }) {
                failures.push(format!("error: {e}"));
            }
            GoldenOutcome { name, failures }
        })
        .collect()
}
