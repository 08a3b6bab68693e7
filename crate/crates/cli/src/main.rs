//! `inertia`: command-line access to inertia sets, graph parameters and
//! matrix witnesses.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use inertia_core::elementary::{elementary_from_spans, elementary_set, SpanConfig};
use inertia_core::engine::{
    inertia_cut_recursive, inertia_forest, BaseRegistry, CutOptions, InertiaResult, Provenance,
};
use inertia_core::golden::golden_suite;
use inertia_core::graph::parse_graph;
use inertia_core::lattice::{render_ascii, render_svg};
use inertia_core::matrix::{
    g12_suite, inertia_exact, random_gram, sample_inertias, square_breaker, witness_for,
    SampleConfig, SymMatrix,
};
use inertia_core::params::{max_mult_bound, md_profile, TreeParams};
use inertia_core::{Error, Graph, LatticeSet, SearchConfig};

#[derive(Parser)]
#[command(name = "inertia", version, about = "Inertia sets of graphs")]
struct Cli {
    /// Largest graph the exhaustive searches will accept.
    #[arg(long, global = true, default_value_t = 24)]
    cap: usize,

    /// Seed for randomized commands.
    #[arg(long, global = true, env = "INERTIA_SEED", default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Forest,
    Cut,
    Elementary,
    Sample,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Ascii,
    Svg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Spans {
    /// Direct formula from the maximal-disconnection profile.
    None,
    Representative,
    Full,
}

/// A single edge-list file, or every file in a directory.
#[derive(clap::Args)]
struct Input {
    /// Edge-list file: a header line `n m` and then `m` lines `u v`.
    #[arg(required_unless_present = "batch")]
    graph: Option<PathBuf>,

    /// Process every file in this directory in parallel; output is a JSON
    /// object keyed by file name.
    #[arg(long, conflicts_with = "graph")]
    batch: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// The inertia set I(G).
    Inertia {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "forest")]
        method: Method,
        /// JSON file of extra blocks for the cut method.
        #[arg(long)]
        registry: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Trials for the sample method.
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
    },
    /// P, mr, c, MD_k, r_k and the inertial partition of a forest.
    Params {
        #[command(flatten)]
        input: Input,
    },
    /// The elementary set E(G).
    Elementary {
        #[command(flatten)]
        input: Input,
        /// Rebuild E(G) from color vectors of bicolored spans instead.
        #[arg(long, value_enum, default_value = "none")]
        spans: Spans,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Maximal disconnection MD_0..MD_kmax with optimal vertex sets.
    Md {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        kmax: Option<usize>,
    },
    /// A rational matrix in S(G) with partial inertia (r, s).
    Witness {
        graph: PathBuf,
        r: usize,
        s: usize,
        /// Write the matrix here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that a matrix has pattern G and partial inertia (r, s).
    Verify {
        graph: PathBuf,
        matrix: PathBuf,
        r: usize,
        s: usize,
    },
    /// Partial inertias observed on random matrices in S(G).
    Sample {
        graph: PathBuf,
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// The inertial partition and its conjugate.
    Partition {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "forest")]
        method: Method,
        #[arg(long)]
        registry: Option<PathBuf>,
    },
    /// Draw a lattice set given as `{"cap": n, "corners": [[r, s], ...]}`.
    Render {
        set: PathBuf,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// Checks on the 12- and 13-vertex cube-direction graphs.
    G12,
    /// Exploratory checks that report data without asserting an answer.
    #[command(subcommand)]
    Experiment(Experiment),
    /// Worked examples with known answers.
    #[command(name = "examples", alias = "paper-suite")]
    PaperSuite {
        #[arg(long)]
        registry: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Experiment {
    /// Compare the maximum nullity n - mr(G), read off I(G), with
    /// max_k (MD_k - k).
    Multiplicity {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "forest")]
        method: Method,
        #[arg(long)]
        registry: Option<PathBuf>,
    },
    /// Square off a positive semidefinite rank-4 matrix and report whether
    /// the result puts (3,2) in I(G). Without a matrix, random integer
    /// Gram matrices of rank 4 are used.
    FourZero {
        /// Graph and matrix files, given together.
        #[arg(num_args = 2, value_names = ["GRAPH", "MATRIX"])]
        files: Vec<PathBuf>,
        /// Vertices of the random Gram matrices.
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        trials: usize,
    },
}

/// Failure with its process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SearchTooLarge { .. } => 3,
            Error::Verification(_) => 4,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_error(message: String) -> Failure {
    Failure { code: 2, message }
}

fn verification_failure(message: String) -> Failure {
    Failure { code: 4, message }
}

type CliResult<T> = Result<T, Failure>;

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> CliResult<Graph> {
    parse_graph(&read(path)?)
        .map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn load_registry(path: Option<&Path>) -> CliResult<BaseRegistry> {
    match path {
        Some(p) => Ok(BaseRegistry::from_json_str(&read(p)?)?),
        None => Ok(BaseRegistry::builtin()),
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("plain data")
}

/// Runs `f` on one graph, or on every file of a directory in parallel.
fn each_graph(input: &Input, f: impl Fn(&Graph) -> CliResult<Value> + Sync) -> CliResult<Value> {
    let Some(dir) = &input.batch else {
        let path = input.graph.as_ref().expect("clap requires a graph");
        return f(&load_graph(path)?);
    };
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| input_error(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    files.sort();
    let results: Vec<(String, CliResult<Value>)> = files
        .par_iter()
        .map(|p| {
            let name = p.file_name().map_or_else(String::new, |s| s.to_string_lossy().into_owned());
            (name, load_graph(p).and_then(|g| f(&g)))
        })
        .collect();
    let mut out = BTreeMap::new();
    let mut worst = 0;
    for (name, r) in results {
        let value = match r {
            Ok(v) => v,
            Err(e) => {
                worst = worst.max(e.code);
                json!({ "error": e.message })
            }
        };
        out.insert(name, value);
    }
    let value = json!(out);
    if worst > 0 {
        println!("{}", pretty(&value));
        return Err(Failure {
            code: worst,
            message: "some files failed".into(),
        });
    }
    Ok(value)
}

fn compute_inertia(
    g: &Graph,
    method: Method,
    reg: &BaseRegistry,
    cfg: SearchConfig,
    sample: SampleConfig,
) -> CliResult<InertiaResult> {
    Ok(match method {
        Method::Forest => inertia_forest(g, cfg)?,
        Method::Cut => inertia_cut_recursive(g, reg, CutOptions::default())?,
        Method::Elementary => InertiaResult {
            set: elementary_set(g, cfg)?,
            provenance: Provenance::ElementarySet,
            unverified_blocks: Vec::new(),
        },
        Method::Sample => InertiaResult {
            set: sample_inertias(g, sample),
            provenance: Provenance::EmpiricalLowerBound,
            unverified_blocks: Vec::new(),
        },
    })
}

fn set_document(n: usize, method: &str, r: &InertiaResult) -> Value {
    json!({
        "n": n,
        "method": method,
        "provenance": r.provenance,
        "exact": r.provenance.is_exact(),
        "set": r.set.to_json(),
        "unverified_blocks": r.unverified_blocks,
    })
}

fn emit_set(r: &InertiaResult, doc: Value, format: Format) -> CliResult<String> {
    Ok(match format {
        Format::Json => pretty(&doc),
        Format::Ascii => {
            let mut text = render_ascii(&r.set)?;
            text.push_str(&format!("provenance: {}\n", r.provenance));
            if !r.unverified_blocks.is_empty() {
                text.push_str(&format!("unverified blocks: {}\n", r.unverified_blocks.join(", ")));
            }
            text
        }
        Format::Svg => render_svg(&r.set)?,
    })
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Forest => "forest",
        Method::Cut => "cut",
        Method::Elementary => "elementary",
        Method::Sample => "sample",
    }
}

fn params_document(g: &Graph, cfg: SearchConfig) -> CliResult<Value> {
    let p = TreeParams::compute(g, cfg)?;
    let set = inertia_forest(g, cfg)?.set;
    let mut doc = serde_json::to_value(&p).expect("plain data");
    let partition = set.to_partition()?;
    doc["partition"] = json!(partition.parts());
    Ok(doc)
}

fn md_document(g: &Graph, kmax: Option<usize>, cfg: SearchConfig) -> CliResult<Value> {
    let kmax = kmax.unwrap_or(g.n()).min(g.n());
    let prof = md_profile(g, kmax, cfg)?;
    let sets: Vec<Vec<usize>> = prof.witnesses.iter().map(|s| s.as_slice().to_vec()).collect();
    Ok(json!({
        "n": g.n(),
        "MD": prof.values,
        "sets": sets,
        "max_mult_bound": max_mult_bound(g, kmax, cfg)?,
    }))
}

fn multiplicity_document(
    g: &Graph,
    method: Method,
    reg: &BaseRegistry,
    cfg: SearchConfig,
) -> CliResult<Value> {
    let r = compute_inertia(g, method, reg, cfg, SampleConfig::default())?;
    let mr = r.set.corners().iter().map(|&(p, q)| p + q).min().unwrap_or(0);
    let nullity = g.n() - mr;
    let bound = max_mult_bound(g, g.n(), cfg)?;
    Ok(json!({
        "n": g.n(),
        "max_nullity": nullity,
        "max_md_minus_k": bound,
        "equal": nullity == bound,
        "provenance": r.provenance,
        "exact": r.provenance.is_exact(),
    }))
}

fn four_zero_document(m: &SymMatrix) -> CliResult<Value> {
    let before = inertia_exact(m);
    if before.pin() != (4, 0) {
        return Err(input_error(format!("need partial inertia (4, 0), got {before}")));
    }
    let b = square_breaker(m)?;
    let (p, q) = b.inertia.pin();
    // (3,2) lies northeast of the new pin or of its reflection
    let reaches = (p <= 3 && q <= 2) || (q <= 3 && p <= 2);
    Ok(json!({
        "n": m.n(),
        "squared_off": [b.inertia.pos, b.inertia.neg, b.inertia.zero],
        "theta": b.theta,
        "margin": b.margin,
        "reaches_3_2": reaches,
    }))
}

fn run(cli: Cli) -> CliResult<String> {
    let cfg = SearchConfig::with_cap(cli.cap);
    let seed = cli.seed;
    match cli.command {
        Command::Inertia {
            input,
            method,
            registry,
            format,
            trials,
        } => {
            let reg = load_registry(registry.as_deref())?;
            let sample = SampleConfig {
                trials,
                seed,
                ..SampleConfig::default()
            };
            if input.batch.is_some() {
                if format != Format::Json {
                    return Err(input_error("batch mode writes JSON only".into()));
                }
                let doc = each_graph(&input, |g| {
                    let r = compute_inertia(g, method, &reg, cfg, sample)?;
                    Ok(set_document(g.n(), method_name(method), &r))
                })?;
                return Ok(pretty(&doc));
            }
            let g = load_graph(input.graph.as_deref().expect("graph"))?;
            let r = compute_inertia(&g, method, &reg, cfg, sample)?;
            emit_set(&r, set_document(g.n(), method_name(method), &r), format)
        }
        Command::Params { input } => Ok(pretty(&each_graph(&input, |g| params_document(g, cfg))?)),
        Command::Md { input, kmax } => Ok(pretty(&each_graph(&input, |g| md_document(g, kmax, cfg))?)),
        Command::Elementary {
            input,
            spans,
            format,
        } => {
            let compute = |g: &Graph| -> CliResult<InertiaResult> {
                let set = match spans {
                    Spans::None => elementary_set(g, cfg)?,
                    Spans::Representative => elementary_from_spans(g, SpanConfig::default())?,
                    Spans::Full => elementary_from_spans(g, SpanConfig::full())?,
                };
                Ok(InertiaResult {
                    set,
                    provenance: Provenance::ElementarySet,
                    unverified_blocks: Vec::new(),
                })
            };
            if input.batch.is_some() {
                let doc = each_graph(&input, |g| Ok(set_document(g.n(), "elementary", &compute(g)?)))?;
                return Ok(pretty(&doc));
            }
            let g = load_graph(input.graph.as_deref().expect("graph"))?;
            let r = compute(&g)?;
            emit_set(&r, set_document(g.n(), "elementary", &r), format)
        }
        Command::Witness { graph, r, s, out } => {
            let g = load_graph(&graph)?;
            let w = witness_for(&g, r, s, cfg)?;
            let doc = w.matrix.to_json();
            let summary = format!("route: {}\ninertia: {}\npattern: matches\n", w.route, w.inertia);
            match out {
                Some(path) => {
                    fs::write(&path, pretty(&doc) + "\n")
                        .map_err(|e| input_error(format!("{}: {e}", path.display())))?;
                    Ok(format!("{summary}written: {}\n", path.display()))
                }
                None => {
                    eprint!("{summary}");
                    Ok(pretty(&doc))
                }
            }
        }
        Command::Verify {
            graph,
            matrix,
            r,
            s,
        } => {
            let g = load_graph(&graph)?;
            let m = SymMatrix::from_json_str(&read(&matrix)?)?;
            let inertia = inertia_exact(&m);
            let pattern = m.has_pattern(&g);
            let pass = pattern && inertia.pin() == (r, s);
            let doc = json!({
                "pattern_matches": pattern,
                "inertia": [inertia.pos, inertia.neg, inertia.zero],
                "target": [r, s],
                "pass": pass,
            });
            if pass {
                Ok(pretty(&doc))
            } else {
                println!("{}", pretty(&doc));
                Err(verification_failure(format!(
                    "expected pattern G and partial inertia ({r}, {s}); got inertia {inertia}, pattern {}",
                    if pattern { "matches" } else { "differs" }
                )))
            }
        }
        Command::Sample {
            graph,
            trials,
            format,
        } => {
            let g = load_graph(&graph)?;
            let sample = SampleConfig {
                trials,
                seed,
                ..SampleConfig::default()
            };
            let r = compute_inertia(&g, Method::Sample, &BaseRegistry::builtin(), cfg, sample)?;
            let mut doc = set_document(g.n(), "sample", &r);
            doc["trials"] = json!(trials);
            doc["seed"] = json!(seed);
            emit_set(&r, doc, format)
        }
        Command::Partition {
            graph,
            method,
            registry,
        } => {
            let g = load_graph(&graph)?;
            let reg = load_registry(registry.as_deref())?;
            let r = compute_inertia(&g, method, &reg, cfg, SampleConfig { seed, ..SampleConfig::default() })?;
            let p = r.set.to_partition()?;
            Ok(pretty(&json!({
                "partition": p.parts(),
                "conjugate": p.conjugate().parts(),
                "symmetric": p.is_symmetric(),
                "provenance": r.provenance,
            })))
        }
        Command::Render { set, format } => {
            let value: Value = serde_json::from_str(&read(&set)?).map_err(Error::from)?;
            let q = LatticeSet::from_json(value)?;
            Ok(match format {
                Format::Svg => render_svg(&q)?,
                Format::Ascii => render_ascii(&q)?,
                Format::Json => pretty(&q.to_json()),
            })
        }
        Command::G12 => {
            let report = g12_suite()?;
            if report.passed() {
                Ok(format!("{report}\n"))
            } else {
                println!("{report}");
                Err(verification_failure("G12 checks failed".into()))
            }
        }
        Command::Experiment(Experiment::Multiplicity {
            input,
            method,
            registry,
        }) => {
            let reg = load_registry(registry.as_deref())?;
            Ok(pretty(&each_graph(&input, |g| multiplicity_document(g, method, &reg, cfg))?))
        }
        Command::Experiment(Experiment::FourZero { files, n, trials }) => {
            if let [graph, matrix] = files.as_slice() {
                let g = load_graph(graph)?;
                let m = SymMatrix::from_json_str(&read(matrix)?)?;
                if !m.has_pattern(&g) {
                    return Err(input_error("matrix does not have the pattern of the graph".into()));
                }
                return Ok(pretty(&four_zero_document(&m)?));
            }
            if n < 4 {
                return Err(input_error("random Gram matrices of rank 4 need n >= 4".into()));
            }
            let runs: Vec<Value> = (0..trials as u64)
                .map(|t| {
                    let m = random_gram(4, n, seed.wrapping_add(t));
                    let mut doc = four_zero_document(&m)?;
                    doc["edges"] = json!(m.pattern().num_edges());
                    Ok(doc)
                })
                .collect::<CliResult<_>>()?;
            Ok(pretty(&json!({ "seed": seed, "runs": runs })))
        }
        Command::PaperSuite { registry } => {
            let reg = load_registry(registry.as_deref())?;
            let mut text = String::new();
            let mut failed = 0;
            for o in golden_suite(&reg, cfg) {
                let status = if o.passed() { "PASS" } else { "FAIL" };
                text.push_str(&format!("{status} {}\n", o.name));
                for f in &o.failures {
                    text.push_str(&format!("     {f}\n"));
                }
                failed += usize::from(!o.passed());
            }
            let g12 = g12_suite()?;
            text.push_str(&format!(
                "{} cube-direction graphs\n",
                if g12.passed() { "PASS" } else { "FAIL" }
            ));
            failed += usize::from(!g12.passed());
            if failed == 0 {
                Ok(text)
            } else {
                print!("{text}");
                Err(verification_failure(format!("{failed} example(s) failed")))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
