//! Command-line driver: every subcommand prints one JSON object on stdout.
//!
//! Exit codes: 0 success, 2 usage, 3 budget exhausted, 4 parse or I/O error.

mod config;
mod input;

pub use config::{ConfigError, RunConfig};

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use gallai::containers::{audit_params, codegree_function, spot_check, verify_cover, CoverConfig, RainbowHypergraph};
use gallai::containers::{DegreeStats, MAX_EXPLICIT_COLORS, MAX_EXPLICIT_ORDER};
use gallai::counting::{asymptotic_bounds, count_gallai_naive, count_gallai_with, lower_bound_two_color};
use gallai::extremal::{extremal_search, CountCache};
use gallai::graph::{graph6_encode, Graph};
use gallai::stability::{
    dichotomy_search, greedy_book_family, majority_color_check, peel, remove_low_degree, supersaturation_check,
    DichotomyResult, PeelKind,
};
use gallai::templates::{Template, TriangleMode};
use gallai::{Error, Result};
use num_bigint::BigUint;
use serde_json::{json, Map, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_PARSE: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "gallai",
    version,
    about = "Count and audit rainbow-triangle-free edge colorings"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalArgs {
    /// `key = value` configuration file; flags override it.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true)]
    leaf_budget: Option<u64>,
    #[arg(long, global = true)]
    node_budget: Option<u64>,
    #[arg(long, global = true)]
    fanout_depth: Option<usize>,
    /// JSONL count cache used by `extremal`.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    #[arg(long, global = true)]
    samples: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of Gallai r-colorings of a graph.
    Count {
        graph: String,
        #[arg(long)]
        r: usize,
        /// Use the exhaustive oracle instead of the pruned counter.
        #[arg(long)]
        naive: bool,
    },
    /// Counts for every graph of order n.
    Extremal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// Also write the table as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    #[command(subcommand)]
    Template(TemplateCommand),
    #[command(subcommand)]
    Hypergraph(HypergraphCommand),
    #[command(subcommand)]
    Stability(StabilityCommand),
    /// Checks a directory of template files as a container family.
    VerifyCover {
        dir: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        c: Option<f64>,
        #[arg(long, default_value_t = 0x6a11a1)]
        seed: u64,
    },
    /// Lower and upper bounds for colorings of K_n.
    Bounds {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u64,
    },
}

#[derive(Subcommand, Debug)]
enum TemplateCommand {
    /// Rainbow-triangle count of a template.
    Rt { file: PathBuf },
    /// Triangle classes of a template.
    Classify {
        file: PathBuf,
        #[arg(long, default_value = "complete")]
        mode: TriangleMode,
    },
    /// Gallai colorings of a graph inside a template (default graph: K_n).
    CountGa {
        file: PathBuf,
        #[arg(long)]
        graph: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum HypergraphCommand {
    /// Degree statistics of the rainbow-triangle hypergraph.
    Stats {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Container parameter audit.
    Audit {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        tau: Option<f64>,
    },
}

#[derive(Subcommand, Debug)]
enum StabilityCommand {
    /// Majority color of a nearly monochromatic coloring.
    Monoedge {
        graph: String,
        #[arg(long)]
        r: usize,
        /// Edge colors in lexicographic edge order, comma separated.
        #[arg(long)]
        coloring: String,
        #[arg(long)]
        eps: String,
    },
    /// Large book or large induced bipartite subgraph.
    Dichotomy {
        graph: String,
        #[arg(long)]
        alpha: String,
    },
    /// Greedy extraction of large books.
    Books {
        graph: String,
        #[arg(long)]
        threshold: usize,
    },
    /// Peels a graph against a template.
    Peel {
        graph: String,
        #[arg(long)]
        template: PathBuf,
        #[arg(long)]
        xi: String,
    },
    /// Removes low-degree vertices among the candidates (default: all).
    Lowdeg {
        graph: String,
        /// Comma-separated vertex list.
        #[arg(long)]
        candidates: Option<String>,
    },
    /// Triangle supersaturation for graphs far from k-partite.
    Supersat {
        graph: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
    },
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidParameter(_) => EXIT_USAGE,
        Error::ResourceLimit(_) => EXIT_BUDGET,
        Error::InvalidInput(_) | Error::Parse { .. } | Error::Io(_) => EXIT_PARSE,
    }
}

fn failure(code: i32, message: impl std::fmt::Display) -> Outcome {
    Outcome {
        code,
        stdout: String::new(),
        stderr: format!("error: {message}\n"),
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let cfg = match load_config(&cli.global) {
        Ok(cfg) => cfg,
        Err(outcome) => return outcome,
    };
    match dispatch(cli.command, &cfg) {
        Ok(value) => Outcome {
            code: EXIT_OK,
            stdout: serde_json::to_string_pretty(&value).expect("JSON values serialize") + "\n",
            stderr: String::new(),
        },
        Err(e) => failure(exit_code(&e), e),
    }
}

fn load_config(args: &GlobalArgs) -> std::result::Result<RunConfig, Outcome> {
    let mut cfg = match &args.config {
        Some(path) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| failure(EXIT_PARSE, format!("{}: {e}", path.display())))?;
            RunConfig::parse(&text).map_err(|e| failure(EXIT_USAGE, format!("{}: {e}", path.display())))?
        }
        None => RunConfig::default(),
    };
    let flags = [
        ("leaf_budget", args.leaf_budget.map(|v| v.to_string())),
        ("node_budget", args.node_budget.map(|v| v.to_string())),
        ("thread_fanout_depth", args.fanout_depth.map(|v| v.to_string())),
        ("cache_path", args.cache.as_ref().map(|p| p.display().to_string())),
        ("sample_size", args.samples.map(|v| v.to_string())),
    ];
    for (key, value) in flags {
        if let Some(value) = value {
            cfg.set(key, &value).map_err(|e| failure(EXIT_USAGE, e))?;
        }
    }
    Ok(cfg)
}

fn dispatch(command: Command, cfg: &RunConfig) -> Result<Value> {
    match command {
        Command::Count { graph, r, naive } => count(&graph, r, naive, cfg),
        Command::Extremal { n, r, csv } => extremal(n, r, csv.as_deref(), cfg),
        Command::Template(t) => template(t, cfg),
        Command::Hypergraph(h) => hypergraph(h, cfg),
        Command::Stability(s) => stability(s),
        Command::VerifyCover { dir, n, r, c, seed } => cover(&dir, n, r, c, seed, cfg),
        Command::Bounds { n, r } => bounds(n, r),
    }
}

fn graph_json(g: &Graph) -> Value {
    json!({ "g6": graph6_encode(g), "n": g.order(), "edges": g.edge_count() })
}

fn count(spec: &str, r: usize, naive: bool, cfg: &RunConfig) -> Result<Value> {
    let g = input::parse_graph(spec)?;
    let counting = cfg.count_config();
    let count = if naive {
        count_gallai_naive(&g, r, &counting)?
    } else {
        count_gallai_with(&g, r, &counting)?
    };
    Ok(json!({
        "graph": graph_json(&g),
        "r": r,
        "method": if naive { "naive" } else { "pruned" },
        "count": count.to_string(),
    }))
}

fn extremal(n: usize, r: usize, csv: Option<&Path>, cfg: &RunConfig) -> Result<Value> {
    let mut cache = cfg.cache_path.as_ref().map(CountCache::open).transpose()?;
    let table = extremal_search(n, r, &cfg.count_config(), cache.as_mut())?;
    if let Some(path) = csv {
        table.write_csv(std::fs::File::create(path)?)?;
    }
    let rows: Vec<Value> = table
        .rows
        .iter()
        .map(|row| json!({ "g6": row.form.as_str(), "edges": row.edges, "count": row.count.as_ref().map(|c| c.to_string()) }))
        .collect();
    let failures: Vec<Value> = table
        .failures
        .iter()
        .map(|(f, msg)| json!({ "g6": f.as_str(), "reason": msg }))
        .collect();
    Ok(json!({
        "n": n,
        "r": r,
        "authoritative": table.authoritative,
        "max_count": table.max_count().map(|c| c.to_string()),
        "argmax": table.argmax.iter().map(|f| f.as_str()).collect::<Vec<_>>(),
        "rows": rows,
        "failures": failures,
    }))
}

fn template(command: TemplateCommand, cfg: &RunConfig) -> Result<Value> {
    match command {
        TemplateCommand::Rt { file } => {
            let p = input::read_template(&file)?;
            Ok(json!({
                "n": p.order(),
                "r": p.colors(),
                "rt": p.rt_count().to_string(),
                "within_threshold": p.rt_within_threshold(),
            }))
        }
        TemplateCommand::Classify { file, mode } => {
            let p = input::read_template(&file)?;
            let tally = p.classify_triangles(mode)?;
            let classes: Map<String, Value> = tally
                .iter()
                .map(|(l, c)| (l.to_owned(), Value::from(c.to_string())))
                .collect();
            Ok(json!({ "mode": mode.to_string(), "classes": classes, "total": tally.total().to_string() }))
        }
        TemplateCommand::CountGa { file, graph } => {
            let p = input::read_template(&file)?;
            let g = match graph {
                Some(spec) => input::parse_graph(&spec)?,
                None => Graph::complete(p.order())?,
            };
            let count = p.count_ga(&g, &cfg.count_config())?;
            let bound = p.product_log_bound();
            Ok(json!({
                "graph": graph_json(&g),
                "r": p.colors(),
                "count": count.to_string(),
                "gallai_template": p.is_gallai_template(&g)?,
                "log2_weight_sum": bound.edge_sum,
            }))
        }
    }
}

fn stats_json(s: &DegreeStats) -> Value {
    let d = if s.d.is_integer() {
        Value::from(s.d.to_integer())
    } else {
        Value::from(s.d.to_string())
    };
    json!({ "v": s.v, "e": s.e, "d": d, "delta2": s.delta2, "delta3": s.delta3 })
}

fn hypergraph(command: HypergraphCommand, cfg: &RunConfig) -> Result<Value> {
    match command {
        HypergraphCommand::Stats { n, r } => {
            let explicit = n <= MAX_EXPLICIT_ORDER && r <= MAX_EXPLICIT_COLORS;
            let mut out = if explicit {
                stats_json(&RainbowHypergraph::build(n, r)?.degree_stats())
            } else {
                let mut v = stats_json(&DegreeStats::closed_form(n, r)?);
                let spot = spot_check(n, r, cfg.sample_size.min(1000), 0)?;
                v["spot_check"] = json!({
                    "samples": spot.samples,
                    "degrees_match": spot.degrees_match,
                    "max_codegree_seen": spot.max_codegree_seen,
                });
                v
            };
            out["n"] = json!(n);
            out["r"] = json!(r);
            out["explicit"] = json!(explicit);
            Ok(out)
        }
        HypergraphCommand::Audit { n, r, tau } => {
            let rep = audit_params(n, r)?;
            let mut out = json!({
                "n": n,
                "r": r,
                "tau": rep.tau,
                "epsilon": rep.epsilon,
                "codegree": rep.codegree,
                "tau_ok": rep.tau_ok,
                "delta_ok": rep.delta_ok,
                "min_n_estimate": rep.min_n_estimate.map(|m| m.to_string()),
            });
            if let Some(&n0) = cfg.n0_overrides.get("containers") {
                out["n0"] = json!(n0);
                out["n_at_least_n0"] = json!(n >= n0);
            }
            if let Some(tau) = tau {
                let n = usize::try_from(n).map_err(|_| Error::InvalidParameter("n too large".into()))?;
                out["codegree_at_tau"] = json!({ "tau": tau, "value": codegree_function(n, r, tau)? });
            }
            Ok(out)
        }
    }
}

fn stability(command: StabilityCommand) -> Result<Value> {
    match command {
        StabilityCommand::Monoedge {
            graph,
            r,
            coloring,
            eps,
        } => {
            let g = input::parse_graph(&graph)?;
            let c = input::parse_coloring(&g, r, &coloring)?;
            let rep = majority_color_check(&g, &c, input::parse_rational(&eps)?)?;
            Ok(json!({
                "mono_triangles": rep.mono_triangles,
                "eps_in_range": rep.eps_in_range,
                "hypothesis_ok": rep.hypothesis_ok,
                "color": rep.color,
                "deficit": rep.deficit,
                "conclusion_ok": rep.conclusion_ok,
            }))
        }
        StabilityCommand::Dichotomy { graph, alpha } => {
            let g = input::parse_graph(&graph)?;
            let cand = |c: &gallai::stability::BipartiteCandidate| json!({ "vertices": gallai::graph::mask_iter(c.vertices).collect::<Vec<_>>(), "min_degree": c.min_degree });
            Ok(match dichotomy_search(&g, input::parse_rational(&alpha)?)? {
                DichotomyResult::Book { base, size } => {
                    json!({ "outcome": "book", "base": [base.u, base.v], "size": size })
                }
                DichotomyResult::Bipartite(c) => json!({ "outcome": "bipartite", "subgraph": cand(&c) }),
                DichotomyResult::Neither {
                    best_book,
                    best_bipartite,
                } => json!({
                    "outcome": "neither",
                    "best_book": best_book.map(|(b, s)| json!({ "base": [b.u, b.v], "size": s })),
                    "best_bipartite": best_bipartite.as_ref().map(cand),
                }),
            })
        }
        StabilityCommand::Books { graph, threshold } => {
            let g = input::parse_graph(&graph)?;
            let fam = greedy_book_family(&g, threshold)?;
            let books: Vec<Value> = fam
                .books
                .iter()
                .map(|b| json!({ "base": [b.base.u, b.base.v], "pages": b.pages }))
                .collect();
            Ok(json!({ "books": books, "residual": graph_json(&fam.residual) }))
        }
        StabilityCommand::Peel { graph, template, xi } => {
            let g = input::parse_graph(&graph)?;
            let p = input::read_template(&template)?;
            let trace = peel(&g, &p, input::parse_rational(&xi)?)?;
            let steps: Vec<Value> = trace
                .removed
                .iter()
                .map(|s| {
                    json!({
                        "kind": match s.kind { PeelKind::Single => "single", PeelKind::Pair => "pair" },
                        "vertices": s.vertices,
                        "order": s.order,
                        "witness": s.witness,
                        "threshold": s.threshold.to_string(),
                        "rainbow_through": s.rainbow_through,
                    })
                })
                .collect();
            Ok(json!({
                "removed": steps,
                "residual": {
                    "vertices": gallai::graph::mask_iter(trace.alive).collect::<Vec<_>>(),
                    "edges": trace.stats.edges,
                    "r_edges": trace.stats.r_edges,
                    "typical_r_edges": trace.stats.typical_r_edges,
                },
            }))
        }
        StabilityCommand::Lowdeg { graph, candidates } => {
            let g = input::parse_graph(&graph)?;
            let mask = match candidates {
                None => gallai::graph::full_mask(g.order()),
                Some(list) => list
                    .split(',')
                    .filter(|s| !s.trim().is_empty())
                    .try_fold(0u64, |m, s| {
                        s.trim()
                            .parse::<u32>()
                            .ok()
                            .and_then(|v| 1u64.checked_shl(v))
                            .map(|b| m | b)
                            .ok_or_else(|| Error::InvalidInput(format!("`{s}` is not a vertex")))
                    })?,
            };
            let res = remove_low_degree(&g, mask)?;
            Ok(json!({
                "removed": res.removed_order,
                "residual": graph_json(&res.residual),
                "remaining": res.alive.count_ones(),
                "inequality_holds": res.inequality_holds,
            }))
        }
        StabilityCommand::Supersat { graph, k, t } => {
            let g = input::parse_graph(&graph)?;
            let rep = supersaturation_check(&g, k, t)?;
            Ok(json!({
                "t_far": rep.t_far,
                "bound": rep.bound,
                "cliques": rep.cliques.to_string(),
                "ok": rep.ok,
            }))
        }
    }
}

fn cover(dir: &Path, n: usize, r: usize, c: Option<f64>, seed: u64, cfg: &RunConfig) -> Result<Value> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)?
        .map(|entry| entry.map(|e| e.path()))
        .collect::<std::io::Result<_>>()?;
    paths.retain(|p| p.is_file());
    paths.sort();
    let family = paths
        .iter()
        .map(|p| input::read_template(p))
        .collect::<Result<Vec<Template>>>()?;
    let cover_cfg = CoverConfig {
        samples: cfg.sample_size,
        seed,
        c: c.unwrap_or(cfg.container_c),
        ..CoverConfig::default()
    };
    let cert = verify_cover(&family, n, r, &cover_cfg)?;
    let names: Vec<String> = paths
        .iter()
        .map(|p| p.file_name().unwrap_or_default().to_string_lossy().into_owned())
        .collect();
    let rt: Vec<Value> = names
        .iter()
        .zip(&cert.rt)
        .map(|(name, check)| {
            json!({
                "file": name,
                "rt": check.rt.to_string(),
                "lhs": check.lhs.to_string(),
                "rhs": check.rhs.to_string(),
                "pass": check.pass,
            })
        })
        .collect();
    Ok(json!({
        "n": n,
        "r": r,
        "members": names.len(),
        "coverage": {
            "pass": cert.coverage_ok(),
            "exhaustive": cert.coverage.exhaustive,
            "checked": cert.coverage.checked,
            "witness": cert.coverage.uncovered.as_ref().map(|c| c.colors().to_vec()),
        },
        "rt": rt,
        "size": { "log2_family": cert.size.log2_family, "bound": cert.size.bound, "pass": cert.size.pass },
        "pass": cert.all_ok(),
    }))
}

fn log2_big(x: &BigUint) -> f64 {
    let shift = x.bits().saturating_sub(64);
    let top = (x >> shift).to_u64_digits().first().copied().unwrap_or(0);
    (top as f64).log2() + shift as f64
}

fn bounds(n: u64, r: u64) -> Result<Value> {
    let two = lower_bound_two_color(n, r)?;
    let b = asymptotic_bounds(n, r)?;
    Ok(json!({
        "n": n,
        "r": r,
        "two_color_lower": two.to_string(),
        "log2_two_color_lower": log2_big(&two),
        "log2_trivial_lower": b.log2_trivial_lower,
        "log2_main_upper": b.log2_main_upper,
    }))
}
