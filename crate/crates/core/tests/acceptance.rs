//! End-to-end acceptance checks. Runs without the libtest harness so that
//! every criterion prints its own PASS/FAIL line.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use inertia_core::elementary::{elementary_from_spans, elementary_set, SpanConfig};
use inertia_core::engine::{
    inertia_cut_recursive, inertia_forest, l_stripe, pi_profile, BaseRegistry, CutOptions,
    TreeInertia,
};
use inertia_core::graph::{nonisomorphic_forests, nonisomorphic_trees};
use inertia_core::matrix::{
    g12_suite, inertia_exact, m13, random_gram, sample_inertias, square_breaker, witness_for,
    SampleConfig, SymMatrix, EXCLUSION_NOTE,
};
use inertia_core::params::{
    md_profile, max_mult_bound, path_cover_by_search, path_cover_number, TreeParams,
};
use inertia_core::{Graph, LatticeSet, SearchConfig};

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn cfg() -> SearchConfig {
    SearchConfig::default()
}

fn full_formula() -> CutOptions {
    CutOptions {
        degree_two_shortcut: false,
        prefer_registry: false,
    }
}

fn forest_set(g: &Graph) -> LatticeSet {
    inertia_forest(g, cfg()).expect("forest").set
}

fn star_inertia_set() -> Outcome {
    let got = forest_set(&Graph::star(4));
    let mut want = vec![(3, 0), (4, 0), (0, 3), (0, 4)];
    for r in 1..=3 {
        for s in 1..=4 - r {
            want.push((r, s));
        }
    }
    want.sort_unstable();
    let mut members = got.members();
    members.sort_unstable();
    ensure!(members == want, "members {members:?}");
    Ok(())
}

fn star_with_path_tree() -> Outcome {
    let t = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]).unwrap();
    let p = TreeParams::compute(&t, cfg()).unwrap();
    ensure!((p.p, p.mr, p.c) == (2, 4, 1), "P, mr, c = {:?}", (p.p, p.mr, p.c));
    let forest = forest_set(&t);
    ensure!(
        forest.corners() == [(0, 5), (1, 3), (2, 2), (3, 1), (5, 0)],
        "corners {:?}",
        forest.corners()
    );
    let reg = BaseRegistry::builtin();
    for opts in [CutOptions::default(), full_formula()] {
        let cut = inertia_cut_recursive(&t, &reg, opts).unwrap().set;
        ensure!(cut == forest, "cut recursion {opts:?}: {cut}");
    }
    for spans in [SpanConfig::default(), SpanConfig::full()] {
        let e = elementary_from_spans(&t, spans).unwrap();
        ensure!(e == forest, "spans {spans:?}: {e}");
    }
    Ok(())
}

fn two_stars_at_a_leaf() -> Outcome {
    let t = Graph::star4_sum(2);
    let p = TreeParams::compute(&t, cfg()).unwrap();
    ensure!((p.mr, p.c) == (4, 2), "mr, c = {:?}", (p.mr, p.c));
    let set = forest_set(&t);
    ensure!(set.stripe(4).points() == [(2, 2)], "rank-4 slice {:?}", set.stripe(4));
    ensure!(l_stripe(&t, cfg()).unwrap().points() == [(2, 2)], "L_T");
    let reg = BaseRegistry::builtin();
    let short = inertia_cut_recursive(&t, &reg, CutOptions::default()).unwrap().set;
    let long = inertia_cut_recursive(&t, &reg, full_formula()).unwrap().set;
    ensure!(short == long && long == set, "shortcut {short} vs full {long}");
    Ok(())
}

fn four_stars() -> Outcome {
    let t = Graph::star4_sum(4);
    let md = md_profile(&t, 4, cfg()).unwrap().values;
    ensure!(md[1..] == [4, 5, 7, 9], "MD {md:?}");
    let pi = pi_profile(&t, cfg()).unwrap();
    ensure!(pi == [12, 9, 8, 6, 4], "π {pi:?}");
    ensure!(l_stripe(&t, cfg()).unwrap().points() == [(4, 4)], "L_T");
    let p = TreeParams::compute(&t, cfg()).unwrap();
    ensure!((p.p, p.c) == (5, 4), "P, c = {:?}", (p.p, p.c));
    Ok(())
}

fn five_stars() -> Outcome {
    let set = forest_set(&Graph::star4_sum(5));
    ensure!(set.contains(11, 1), "(11,1) missing");
    ensure!(set.contains(5, 5), "(5,5) missing");
    ensure!(!set.contains(8, 3), "(8,3) present");
    Ok(())
}

fn cut_pieces(t: &Graph, v: usize) -> (Vec<Graph>, Vec<Graph>) {
    t.split_at(v)
        .unwrap()
        .into_iter()
        .map(|p| {
            let minus = p.graph.delete_vertex(p.local(v).unwrap()).graph;
            (p.graph, minus)
        })
        .unzip()
}

fn small_tree_suite() -> Outcome {
    let reg = BaseRegistry::builtin();
    let counts = [1, 1, 1, 2, 3, 6, 11, 23, 47];
    for n in 1..=9 {
        let trees = nonisomorphic_trees(n);
        ensure!(trees.len() == counts[n - 1], "{} trees on {n} vertices", trees.len());
        for t in &trees {
            let p = path_cover_number(t).unwrap();
            ensure!(p == path_cover_by_search(t, cfg()).unwrap(), "(a) {t:?}");

            let i = forest_set(t);
            let e = elementary_set(t, cfg()).unwrap();
            let c = elementary_from_spans(t, SpanConfig::default()).unwrap();
            ensure!(i == e && e == c, "(b) {t:?}: {i} / {e} / {c}");

            ensure!(i.is_symmetric() && i.stripes_convex(), "(c) {t:?}");
            for (r, s) in i.members() {
                ensure!(
                    r + s == n || (i.contains(r + 1, s) && i.contains(r, s + 1)),
                    "(c) not closed at ({r},{s})"
                );
            }

            let info = TreeInertia::of(t, cfg()).unwrap();
            let md = md_profile(t, info.c, cfg()).unwrap().values;
            for (k, &pk) in info.pi_profile().iter().enumerate() {
                ensure!(pk == n - md[k], "(d) π_{k} {t:?}");
                ensure!(i.contains(pk, k) && (pk == 0 || !i.contains(pk - 1, k)), "(d) row {k}");
            }
            ensure!(info.pi_profile().windows(2).all(|w| w[0] > w[1]), "(d) not decreasing");

            for opts in [CutOptions::default(), full_formula()] {
                let cut = inertia_cut_recursive(t, &reg, opts).unwrap().set;
                ensure!(cut == i, "(e) {t:?} {opts:?}");
            }

            for v in 0..n {
                let rest = forest_set(&t.delete_vertex(v).graph);
                ensure!(i.truncate(n - 1).is_subset(&rest), "(f) upper {t:?} at {v}");
                if n >= 2 {
                    ensure!(
                        rest.truncate(n - 2).shift(1, 1).is_subset(&i),
                        "(f) lower {t:?} at {v}"
                    );
                }
            }

            for v in t.cut_vertices() {
                let (whole, minus) = cut_pieces(t, v);
                let ew: Vec<LatticeSet> = whole.iter().map(|g| elementary_set(g, cfg()).unwrap()).collect();
                let em: Vec<LatticeSet> = minus.iter().map(|g| elementary_set(g, cfg()).unwrap()).collect();
                let rhs = LatticeSet::sum_all(&ew)
                    .truncate(n)
                    .union(&LatticeSet::sum_all(&em).shift(1, 1).truncate(n));
                ensure!(rhs == e, "(g) {t:?} at {v}: {rhs} vs {e}");
            }
        }
    }
    Ok(())
}

fn forest_witnesses() -> Outcome {
    let mut checked = 0;
    for n in 1..=8 {
        for f in nonisomorphic_forests(n) {
            for &(r, s) in forest_set(&f).corners() {
                let w = witness_for(&f, r, s, cfg()).map_err(|e| format!("{f:?} ({r},{s}): {e}"))?;
                ensure!(inertia_exact(&w.matrix).pin() == (r, s), "{f:?} ({r},{s}) inertia");
                ensure!(w.matrix.has_pattern(&f), "{f:?} ({r},{s}) pattern");
                checked += 1;
            }
        }
    }
    println!("    {checked} corner witnesses verified");
    Ok(())
}

fn suns() -> Outcome {
    for m in [4usize, 6] {
        let h = Graph::sun(m);
        let md = md_profile(&h, m / 2, cfg()).unwrap().values;
        ensure!(md[0] == 1, "H{m} MD_0 = {}", md[0]);
        for k in 1..=m / 2 {
            ensure!(md[k] == 2 * k, "H{m} MD_{k} = {}", md[k]);
        }
        let bound = max_mult_bound(&h, 2 * m, cfg()).unwrap();
        ensure!(bound == m / 2, "H{m} bound {bound}");
        ensure!(2 * m - bound == 2 * m - m / 2, "H{m} minimum rank");
    }
    Ok(())
}

fn g12() -> Outcome {
    let report = g12_suite().unwrap();
    ensure!(report.m12_inertia.pin() == (3, 0) && report.m12_inertia.zero == 9, "M12");
    for (msg, ok) in report.checks() {
        ensure!(ok, "{msg}");
    }
    println!("    {EXCLUSION_NOTE}");
    Ok(())
}

fn square_breaking() -> Outcome {
    let rows: Vec<_> = m13().into_iter().map(|mut r| {
        r.truncate(12);
        r
    }).collect();
    let m12 = SymMatrix::gram(&rows, &vec![inertia_core::matrix::int(1); 3]).unwrap();
    let mut inputs = vec![m12];
    for seed in 0..20u64 {
        let k = 2 + (seed % 2) as usize;
        inputs.push(random_gram(k, 8, seed));
    }
    for (idx, m) in inputs.iter().enumerate() {
        let k = inertia_exact(m).pos;
        let b = square_breaker(m).map_err(|e| format!("input {idx}: {e}"))?;
        ensure!(b.pattern_matches(m), "input {idx}: pattern");
        let scale = b.matrix.abs().max().max(1.0);
        ensure!(b.consistency <= 1e-9 * scale, "input {idx}: consistency {}", b.consistency);
        ensure!(b.inertia.pos < k && b.inertia.neg < k, "input {idx}: {} for rank {k}", b.inertia);
    }
    Ok(())
}

fn sampling() -> Outcome {
    let sample = SampleConfig {
        trials: 10_000,
        seed: 0,
        ..SampleConfig::default()
    };
    for n in 1..=7 {
        for t in nonisomorphic_trees(n) {
            let seen = sample_inertias(&t, sample);
            let e = elementary_set(&t, cfg()).unwrap();
            ensure!(seen.is_subset(&e), "{t:?}: observed {seen} outside {e}");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("inertia set of the star on four vertices", star_inertia_set),
        ("star with a pendant path: parameters and three routes agree", star_with_path_tree),
        ("two stars at a leaf: minimum-rank slice and degree-2 shortcut", two_stars_at_a_leaf),
        ("four stars: MD, π, L_T, P and c", four_stars),
        ("five stars: membership of (11,1), (5,5), (8,3)", five_stars),
        ("exhaustive laws on trees up to 9 vertices", small_tree_suite),
        ("witness for every corner of every forest up to 8 vertices", forest_witnesses),
        ("suns H4 and H6: MD profile and multiplicity bound", suns),
        ("G12 and G13 certificates", g12),
        ("square breaker on M12ᵀM12 and 20 random Gram matrices", square_breaking),
        ("sampling stays inside E(T) for trees up to 7 vertices", sampling),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2} PASS ({secs:.1}s) {name}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL ({secs:.1}s) {name}: {msg}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
