//! `hyperturan`: command-line front end.
//!
//! Exit codes: 0 success, 1 invalid input or a failed verification,
//! 2 a search that was asked to be exact ran out of budget.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use hyperturan::battery::{acceptance_battery, formula_grid, CheckReport};
use hyperturan::constructions::{construction_registry, formula_registry, BuildContext};
use hyperturan::cover::{maximum_delta_system, minimum_one_cross_cut};
use hyperturan::embed::{contains, embed_tight_forest_traced, peel_shadow, EmbedRoute, Embedding};
use hyperturan::forest::{expand, forest_from_spec, sigma};
use hyperturan::io::{read_graph, read_growth, read_hypergraph};
use hyperturan::kernel::kernel_graph;
use hyperturan::search::{strategy_registry, turan_exact, verify_formula, CheckStatus, SearchConfig, Symmetry};
use hyperturan::{Error, Graph, Hypergraph, VertexSet};

#[derive(Parser, Serialize)]
#[command(name = "hyperturan", version, about = "Turán problems for expanded forests in k-uniform hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the output to a file instead of stdout.
    #[arg(short = 'o', long, global = true)]
    output: Option<PathBuf>,

    /// Worker threads for the search.
    #[arg(long, global = true, env = "HYPERTURAN_THREADS")]
    threads: Option<usize>,

    /// Largest number of candidate k-sets the search accepts.
    #[arg(long, global = true, default_value_t = 100)]
    ceiling: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Command {
    /// σ(T) of a forest given as a graph file or a spec like `sec4tree:2,1`.
    Sigma { forest: String },
    /// The k-expansion of a graph.
    Expand {
        graph: String,
        #[arg(short)]
        k: usize,
    },
    /// Minimum 1-cross-cut of a hypergraph.
    Tau1 {
        hypergraph: String,
        #[command(flatten)]
        size: Size,
    },
    /// Graph of pairs with kernel degree at least s.
    KernelGraph {
        hypergraph: String,
        #[arg(short)]
        s: usize,
        #[command(flatten)]
        size: Size,
    },
    /// Largest Δ-system with the given kernel.
    KernelDegree {
        hypergraph: String,
        /// Kernel vertices, comma separated.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        set: Vec<usize>,
        #[command(flatten)]
        size: Size,
    },
    /// Looks for a copy of the pattern in the host.
    Contains {
        host: String,
        pattern: String,
        #[command(flatten)]
        size: Size,
    },
    /// Deletes edges through (k-1)-sets of degree at most the threshold.
    Peel {
        hypergraph: String,
        #[arg(long)]
        threshold: usize,
        #[command(flatten)]
        size: Size,
    },
    /// Embeds a tight k-forest given as a growth file.
    EmbedForest {
        hypergraph: String,
        growth: PathBuf,
        #[command(flatten)]
        size: Size,
    },
    /// Builds a named family, e.g. `lowerbound -n 6 -k 3 --tree lpath-graph:3`.
    Construct {
        spec: String,
        #[command(flatten)]
        size: Size,
        #[arg(long)]
        tree: Option<String>,
    },
    /// Exact Turán number by search.
    Search(SearchArgs),
    /// Runs a check suite: `acceptance` (alias `paper-suite`), a check id or number,
    /// `formulas`, or `formula:<id>`.
    Verify { suite: String },
    /// Lists constructions, formulas, strategies and checks.
    List,
}

/// Sizes used when an input is a construction spec rather than a file.
#[derive(Args, Serialize, Default)]
struct Size {
    #[arg(short)]
    n: Option<usize>,
    #[arg(short)]
    k: Option<usize>,
}

#[derive(Args, Serialize)]
struct SearchArgs {
    #[arg(short)]
    n: usize,
    #[arg(short)]
    k: usize,
    /// Forbidden pattern: a file or a construction spec. Repeatable.
    #[arg(long, required = true)]
    forbid: Vec<String>,
    /// Strategy name; default picks the first applicable.
    #[arg(long)]
    strategy: Option<String>,
    #[arg(long, value_enum, default_value_t = SymmetryArg::DegreeOrder)]
    symmetry: SymmetryArg,
    #[arg(long, default_value_t = 8)]
    split_depth: usize,
    #[arg(long)]
    node_limit: Option<u64>,
    /// Seconds.
    #[arg(long)]
    time_limit: Option<f64>,
    /// Exit with status 2 unless the search is exhaustive.
    #[arg(long)]
    exact: bool,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum SymmetryArg {
    None,
    Anchor,
    DegreeOrder,
}

impl From<SymmetryArg> for Symmetry {
    fn from(s: SymmetryArg) -> Self {
        match s {
            SymmetryArg::None => Symmetry::None,
            SymmetryArg::Anchor => Symmetry::Anchor,
            SymmetryArg::DegreeOrder => Symmetry::DegreeOrder,
        }
    }
}

/// Rendered result: text lines and a JSON value, plus the exit status.
struct Report {
    text: String,
    json: Value,
    status: u8,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report { text, json, status: 0 }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(status) => ExitCode::from(status),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> hyperturan::Result<u8> {
    let report = dispatch(cli)?;
    let config = serde_json::to_value(cli).map_err(|e| Error::InvalidArgument(e.to_string()))?;
    let rendered = match cli.format {
        Format::Text => {
            let echo = serde_json::to_string(&config).unwrap_or_default();
            format!("# config {echo}\n{}", report.text)
        }
        Format::Json => {
            let doc = json!({ "config": config, "result": report.json });
            format!("{}\n", serde_json::to_string_pretty(&doc).unwrap_or_default())
        }
    };
    match &cli.output {
        Some(path) if !matches!(cli.command, Command::Search(_)) => {
            std::fs::write(path, rendered)?;
            println!("wrote {}", path.display());
        }
        _ => print!("{rendered}"),
    }
    Ok(report.status)
}

fn dispatch(cli: &Cli) -> hyperturan::Result<Report> {
    match &cli.command {
        Command::Sigma { forest } => {
            let g = load_graph(forest)?;
            let w = sigma(&g)?;
            let set = w.set.to_vec();
            Ok(Report::ok(format!("{}\nset {}\n", w.value, join(&set)), json!({ "sigma": w.value, "set": set })))
        }
        Command::Expand { graph, k } => {
            let e = expand(&load_graph(graph)?, *k)?;
            Ok(Report::ok(e.result.to_text(), hypergraph_json(&e.result)))
        }
        Command::Tau1 { hypergraph, size } => {
            let h = load_hypergraph(hypergraph, size)?;
            Ok(match minimum_one_cross_cut(&h) {
                Some(cut) => {
                    let set = cut.to_vec();
                    Report::ok(format!("{}\nset {}\n", set.len(), join(&set)), json!({ "tau1": set.len(), "set": set }))
                }
                None => Report::ok("none\n".into(), json!({ "tau1": null, "set": null })),
            })
        }
        Command::KernelGraph { hypergraph, s, size } => {
            let kg = kernel_graph(&load_hypergraph(hypergraph, size)?, *s)?;
            let edges: Vec<[usize; 2]> = kg.graph.edges().map(|(u, v)| [u, v]).collect();
            Ok(Report::ok(kg.to_text(), json!({ "s": s, "n": kg.graph.n(), "edges": edges })))
        }
        Command::KernelDegree { hypergraph, set, size } => {
            let h = load_hypergraph(hypergraph, size)?;
            let w: VertexSet = set.iter().collect();
            let d = maximum_delta_system(&h, w)?;
            let members: Vec<Vec<usize>> = d.members.iter().map(|m| m.to_vec()).collect();
            let mut text = format!("{}\n", d.len());
            for m in &members {
                text.push_str(&format!("member {}\n", join(m)));
            }
            Ok(Report::ok(text, json!({ "kernel": w.to_vec(), "degree": d.len(), "members": members })))
        }
        Command::Contains { host, pattern, size } => {
            let host = load_hypergraph(host, size)?;
            let pattern = load_hypergraph(pattern, &Size { n: None, k: size.k.or(Some(host.k())) })?;
            Ok(embedding_report(contains(&host, &pattern)?, None))
        }
        Command::Peel { hypergraph, threshold, size } => {
            let p = peel_shadow(&load_hypergraph(hypergraph, size)?, *threshold);
            let removed = p.removed_count();
            let text = format!("removed {removed} edges in {} steps\n{}", p.log.len(), p.residue.to_text());
            Ok(Report::ok(
                text,
                json!({ "removed": removed, "steps": p.log.len(), "residue": hypergraph_json(&p.residue) }),
            ))
        }
        Command::EmbedForest { hypergraph, growth, size } => {
            let h = load_hypergraph(hypergraph, size)?;
            let t = read_growth(growth)?;
            let (e, route) = embed_tight_forest_traced(&h, &t)?;
            Ok(embedding_report(e, Some(route)))
        }
        Command::Construct { spec, size, tree } => {
            let ctx = BuildContext { n: size.n, k: size.k, tree: tree.clone() };
            let h = construction_registry().build(spec, &ctx)?;
            Ok(Report::ok(h.to_text(), hypergraph_json(&h)))
        }
        Command::Search(args) => search(cli, args),
        Command::Verify { suite } => verify(suite, cli),
        Command::List => Ok(list()),
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn hypergraph_json(h: &Hypergraph) -> Value {
    let edges: Vec<Vec<usize>> = h.edges().iter().map(|e| e.to_vec()).collect();
    json!({ "k": h.k(), "n": h.n(), "edges": edges })
}

fn embedding_report(e: Option<Embedding>, route: Option<EmbedRoute>) -> Report {
    let route = route.map(|r| format!("{r:?}").to_lowercase());
    let route_line = route.as_ref().map_or(String::new(), |r| format!("# route {r}\n"));
    match e {
        Some(e) => Report::ok(
            format!("yes\n{route_line}{}", e.to_text()),
            json!({ "found": true, "route": route, "vertex_map": e.vertex_map, "edge_map": e.edge_map }),
        ),
        None => Report::ok(format!("no\n{route_line}"), json!({ "found": false, "route": route })),
    }
}

/// A graph file, or a forest spec such as `lpath-graph:3`.
fn load_graph(arg: &str) -> hyperturan::Result<Graph> {
    if Path::new(arg).exists() {
        return read_graph(arg);
    }
    forest_from_spec(arg).map(|f| f.into_graph()).map_err(|e| not_found(arg, e))
}

/// A hypergraph file, or a construction spec built with `-n`/`-k`.
fn load_hypergraph(arg: &str, size: &Size) -> hyperturan::Result<Hypergraph> {
    if Path::new(arg).exists() {
        return read_hypergraph(arg);
    }
    let ctx = BuildContext { n: size.n, k: size.k, tree: None };
    construction_registry().build(arg, &ctx).map_err(|e| not_found(arg, e))
}

fn not_found(arg: &str, e: Error) -> Error {
    let why = match e {
        Error::InvalidArgument(m) => m,
        other => other.to_string(),
    };
    Error::InvalidArgument(format!("`{arg}` is not a file, and not a usable spec: {why}"))
}

fn search(cli: &Cli, args: &SearchArgs) -> hyperturan::Result<Report> {
    let size = Size { n: None, k: Some(args.k) };
    let patterns = args.forbid.iter().map(|p| load_hypergraph(p, &size)).collect::<hyperturan::Result<Vec<_>>>()?;
    let cfg = SearchConfig {
        ceiling: cli.ceiling,
        threads: cli.threads,
        node_limit: args.node_limit,
        time_limit: args.time_limit.map(Duration::from_secs_f64),
        symmetry: args.symmetry.into(),
        split_depth: args.split_depth,
        strategy: args.strategy.clone(),
    };
    let mut cert = turan_exact(args.n, args.k, &patterns, &cfg)?;
    cert.pattern_labels = args.forbid.clone();
    let json = cert.to_json();
    if let Some(path) = &cli.output {
        let mut doc = json.clone();
        doc["config"] = serde_json::to_value(cli).map_err(|e| Error::InvalidArgument(e.to_string()))?;
        std::fs::write(path, format!("{}\n", serde_json::to_string_pretty(&doc).unwrap_or_default()))?;
    }
    let mut text = format!(
        "{}\n# exhaustive {}, {} nodes, strategy {}, {:.3}s\n",
        cert.size, cert.exhaustive, cert.stats.nodes, cert.strategy, cert.seconds
    );
    text.push_str(&cert.witness.to_text());
    let status = if args.exact && !cert.exhaustive { 2 } else { 0 };
    Ok(Report { text, json, status })
}

fn verify(suite: &str, cli: &Cli) -> hyperturan::Result<Report> {
    let battery = acceptance_battery();
    let formulas = formula_registry();
    let cfg = SearchConfig { ceiling: cli.ceiling, threads: cli.threads, ..SearchConfig::default() };
    let checks: Vec<CheckReport> = match suite {
        "paper-suite" | "acceptance" => battery.run_all(),
        "formulas" => return Ok(formula_report(formulas.iter().collect(), &cfg)),
        s if s.starts_with("formula:") => {
            let id = &s["formula:".len()..];
            let f = formulas.get(id).ok_or_else(|| Error::InvalidArgument(format!("unknown formula `{id}`")))?;
            return Ok(formula_report(vec![f], &cfg));
        }
        id => vec![battery.run(id).ok_or_else(|| Error::InvalidArgument(format!("unknown suite `{id}`")))?],
    };
    let failed = checks.iter().filter(|c| !c.passed).count();
    let mut text: String = checks.iter().map(|c| format!("{}\n", c.line())).collect();
    text.push_str(&format!("{} passed, {failed} failed\n", checks.len() - failed));
    let json = json!({
        "suite": suite,
        "checks": checks.iter().map(CheckReport::to_json).collect::<Vec<_>>(),
        "passed": checks.len() - failed,
        "failed": failed,
    });
    Ok(Report { text, json, status: u8::from(failed > 0) })
}

fn formula_report(formulas: Vec<&dyn hyperturan::constructions::Formula>, cfg: &SearchConfig) -> Report {
    let mut rows = Vec::new();
    for f in formulas {
        rows.extend(verify_formula(f, &formula_grid(f.id()), cfg));
    }
    let failed = rows.iter().filter(|r| r.status == CheckStatus::Fail).count();
    let text: String = rows
        .iter()
        .map(|r| {
            let show = |v: Option<String>| v.unwrap_or_else(|| "-".into());
            format!(
                "{:<12} {} {} [{}] formula {} search {}\n",
                r.status.label(),
                r.formula,
                r.params,
                r.relation,
                show(r.formula_value.map(|v| v.to_string())),
                show(r.search_value.map(|v| v.to_string())),
            )
        })
        .collect();
    let json = json!({ "rows": rows.iter().map(|r| r.to_json()).collect::<Vec<_>>(), "failed": failed });
    Report { text: format!("{text}{} rows, {failed} failed\n", rows.len()), json, status: u8::from(failed > 0) }
}

fn list() -> Report {
    let constructions: Vec<(&str, &str)> = construction_registry().iter().map(|c| (c.name(), c.usage())).collect();
    let formulas: Vec<(&str, &str)> = formula_registry().iter().map(|f| (f.id(), f.summary())).collect();
    let strategies = strategy_registry().names();
    let checks: Vec<(&str, &str)> = acceptance_battery().iter().map(|c| (c.id(), c.title())).collect();
    let mut text = String::from("constructions:\n");
    constructions.iter().for_each(|(_, u)| text.push_str(&format!("  {u}\n")));
    text.push_str("formulas:\n");
    formulas.iter().for_each(|(id, s)| text.push_str(&format!("  {id}: {s}\n")));
    text.push_str(&format!("strategies: {}\nchecks:\n", strategies.join(", ")));
    checks.iter().for_each(|(id, t)| text.push_str(&format!("  {id}: {t}\n")));
    let map =
        |v: &[(&str, &str)]| v.iter().map(|(a, b)| (a.to_string(), Value::from(*b))).collect::<serde_json::Map<_, _>>();
    Report::ok(
        text,
        json!({
            "constructions": map(&constructions),
            "formulas": map(&formulas),
            "strategies": strategies,
            "checks": map(&checks),
        }),
    )
}
