//! Exact Turán numbers of small instances, with checkable certificates.

mod bnb;
mod clique;
mod copies;
mod verify;

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use serde_json::{json, Value};

pub use bnb::BranchAndBound;
pub use clique::CliqueReduction;
pub use copies::CopyIndex;
pub use verify::{verify_formula, CheckStatus, FormulaCheck};

use crate::binomial::choose;
use crate::embed::contains;
use crate::error::{invalid, Error, Result};
use crate::hypergraph::Hypergraph;

/// Vertex relabelings used to cut symmetric branches.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Symmetry {
    None,
    /// The lexicographically least k-set is always included.
    Anchor,
    /// Vertex degrees are non-increasing in vertex order.
    #[default]
    DegreeOrder,
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Largest allowed number of candidate k-sets.
    pub ceiling: usize,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
    pub symmetry: Symmetry,
    /// Binary decisions fixed before work is handed to threads.
    pub split_depth: usize,
    /// Strategy by name; `None` picks the first applicable one.
    pub strategy: Option<String>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            ceiling: 100,
            threads: None,
            node_limit: None,
            time_limit: None,
            symmetry: Symmetry::default(),
            split_depth: 8,
            strategy: None,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub bound_prunes: u64,
    pub symmetry_prunes: u64,
}

impl SearchStats {
    fn add(&mut self, other: &SearchStats) {
        self.nodes += other.nodes;
        self.bound_prunes += other.bound_prunes;
        self.symmetry_prunes += other.symmetry_prunes;
    }
}

/// Shared node/time budget and the best size found by any worker.
pub struct Budget {
    nodes: AtomicU64,
    limit: Option<u64>,
    deadline: Option<Instant>,
    stop: AtomicBool,
    pub best: AtomicUsize,
}

impl Budget {
    pub fn new(cfg: &SearchConfig) -> Self {
        Budget {
            nodes: AtomicU64::new(0),
            limit: cfg.node_limit,
            deadline: cfg.time_limit.map(|d| Instant::now() + d),
            stop: AtomicBool::new(false),
            best: AtomicUsize::new(0),
        }
    }

    /// Records `n` more nodes; false once the budget is spent.
    pub fn charge(&self, n: u64) -> bool {
        let total = self.nodes.fetch_add(n, Ordering::Relaxed) + n;
        if self.limit.is_some_and(|l| total > l) || self.deadline.is_some_and(|d| Instant::now() > d) {
            self.stop.store(true, Ordering::Relaxed);
        }
        !self.stopped()
    }

    pub fn stopped(&self) -> bool {
        self.stop.load(Ordering::Relaxed)
    }
}

/// One solver call: the copy index for `n`, exact answers for smaller
/// vertex counts where known, and a starting family `(size, mask)`.
pub struct Instance<'a> {
    pub index: &'a CopyIndex,
    pub smaller: &'a [Option<usize>],
    pub initial: (usize, u128),
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub size: usize,
    pub mask: u128,
    pub exhaustive: bool,
    pub stats: SearchStats,
}

/// A way of computing the largest pattern-free family.
pub trait SearchStrategy: Send + Sync {
    fn name(&self) -> &'static str;
    fn applicable(&self, index: &CopyIndex) -> bool;
    /// Whether answers for smaller vertex counts sharpen this strategy's bounds.
    fn uses_smaller(&self) -> bool {
        false
    }
    fn solve(&self, inst: &Instance<'_>, cfg: &SearchConfig, budget: &Budget) -> Outcome;
}

/// Strategies in priority order; `auto` takes the first applicable one.
pub struct StrategyRegistry {
    items: Vec<Box<dyn SearchStrategy>>,
}

impl StrategyRegistry {
    pub fn empty() -> Self {
        StrategyRegistry { items: Vec::new() }
    }

    pub fn register(&mut self, s: Box<dyn SearchStrategy>) {
        self.items.retain(|x| x.name() != s.name());
        self.items.push(s);
    }

    pub fn get(&self, name: &str) -> Option<&dyn SearchStrategy> {
        self.items.iter().find(|s| s.name() == name).map(|s| s.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.items.iter().map(|s| s.name()).collect()
    }

    pub fn auto(&self, index: &CopyIndex) -> Option<&dyn SearchStrategy> {
        self.items.iter().find(|s| s.applicable(index)).map(|s| s.as_ref())
    }

    fn select(&self, name: Option<&str>, index: &CopyIndex) -> Result<&dyn SearchStrategy> {
        match name {
            None | Some("auto") => self.auto(index).ok_or_else(|| invalid("no applicable search strategy")),
            Some(name) => {
                let s = self
                    .get(name)
                    .ok_or_else(|| invalid(format!("unknown strategy `{name}`; known: {}", self.names().join(", "))))?;
                if !s.applicable(index) {
                    return Err(invalid(format!("strategy `{name}` does not apply to these patterns")));
                }
                Ok(s)
            }
        }
    }
}

pub fn strategy_registry() -> StrategyRegistry {
    let mut r = StrategyRegistry::empty();
    r.register(Box::new(CliqueReduction));
    r.register(Box::new(BranchAndBound));
    r
}

/// Result of [`turan_exact`]: the size, a witness family and how it was found.
#[derive(Clone, Debug)]
pub struct SearchCertificate {
    pub n: usize,
    pub k: usize,
    pub patterns: Vec<Hypergraph>,
    /// How the patterns are named in JSON output.
    pub pattern_labels: Vec<String>,
    pub size: usize,
    pub witness: Hypergraph,
    pub exhaustive: bool,
    pub stats: SearchStats,
    pub seconds: f64,
    pub strategy: String,
}

impl SearchCertificate {
    pub fn to_json(&self) -> Value {
        let witness: Vec<Vec<usize>> = self.witness.edges().iter().map(|e| e.to_vec()).collect();
        json!({
            "n": self.n,
            "k": self.k,
            "patterns": self.pattern_labels,
            "size": self.size,
            "witness": witness,
            "exhaustive": self.exhaustive,
            "nodes": self.stats.nodes,
            "prunes": { "bound": self.stats.bound_prunes, "symmetry": self.stats.symmetry_prunes },
            "seconds": self.seconds,
            "strategy": self.strategy,
        })
    }

    /// Re-checks the witness with the general containment search.
    pub fn verify(&self) -> Result<()> {
        if self.witness.len() != self.size {
            return Err(Error::Verification(format!(
                "witness has {} edges, size is {}",
                self.witness.len(),
                self.size
            )));
        }
        for (p, label) in self.patterns.iter().zip(&self.pattern_labels) {
            if contains(&self.witness, p)?.is_some() {
                return Err(Error::Verification(format!("witness contains forbidden pattern {label}")));
            }
        }
        Ok(())
    }
}

/// `ex_k(n, patterns)`: the largest k-graph on `[n]` containing none of the patterns.
pub fn turan_exact(n: usize, k: usize, patterns: &[Hypergraph], cfg: &SearchConfig) -> Result<SearchCertificate> {
    let start = Instant::now();
    if k == 0 {
        return Err(invalid("uniformity must be at least 1"));
    }
    if let Some(p) = patterns.iter().find(|p| p.k() != k) {
        return Err(invalid(format!("pattern has uniformity {}, expected {k}", p.k())));
    }
    let m = choose(n, k)?;
    if m > cfg.ceiling as u64 {
        return Err(Error::Limit(format!("C({n}, {k}) = {m} candidate edges exceeds the ceiling {}", cfg.ceiling)));
    }
    let run = || solve_up_to(n, k, patterns, cfg);
    let (outcome, index, name) = match cfg.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| invalid(format!("thread pool: {e}")))?
            .install(run)?,
        None => run()?,
    };
    let cert = SearchCertificate {
        n,
        k,
        patterns: patterns.to_vec(),
        pattern_labels: (0..patterns.len()).map(|i| format!("pattern-{i}")).collect(),
        size: outcome.size,
        witness: index.to_hypergraph(outcome.mask)?,
        exhaustive: outcome.exhaustive,
        stats: outcome.stats,
        seconds: start.elapsed().as_secs_f64(),
        strategy: name.to_string(),
    };
    cert.verify()?;
    Ok(cert)
}

/// Solves vertex counts `0..=n` in turn so that each can use the answers
/// below it as bounds and its predecessor's witness as a starting family.
fn solve_up_to(
    n: usize,
    k: usize,
    patterns: &[Hypergraph],
    cfg: &SearchConfig,
) -> Result<(Outcome, CopyIndex, &'static str)> {
    let registry = strategy_registry();
    let index = CopyIndex::new(n, k, patterns)?;
    let strategy = registry.select(cfg.strategy.as_deref(), &index)?;
    let mut smaller: Vec<Option<usize>> = Vec::with_capacity(n);
    let mut previous: Option<Hypergraph> = None;
    let first = if strategy.uses_smaller() { 0 } else { n };
    for j in first..=n {
        let idx = if j == n { index.clone() } else { CopyIndex::new(j, k, patterns)? };
        let initial = match &previous {
            Some(h) => {
                let padded = h.with_vertex_count(j)?;
                (padded.len(), idx.mask_of(&padded))
            }
            None => (0, 0),
        };
        let budget = Budget::new(cfg);
        let inst = Instance { index: &idx, smaller: &smaller, initial };
        let s = if strategy.applicable(&idx) { strategy } else { registry.select(None, &idx)? };
        let outcome = s.solve(&inst, cfg, &budget);
        if j == n {
            return Ok((outcome, index, strategy.name()));
        }
        smaller.push(outcome.exhaustive.then_some(outcome.size));
        previous = Some(idx.to_hypergraph(outcome.mask)?);
    }
    unreachable!("loop returns at j == n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::{linear_path, matching, star};
    use crate::graph::Graph;

    fn ex(n: usize, k: usize, patterns: &[Hypergraph], cfg: &SearchConfig) -> SearchCertificate {
        let c = turan_exact(n, k, patterns, cfg).unwrap();
        assert!(c.exhaustive);
        c
    }

    fn named(name: &str, symmetry: Symmetry) -> SearchConfig {
        SearchConfig { strategy: Some(name.into()), symmetry, ..SearchConfig::default() }
    }

    #[test]
    fn intersecting_families() {
        let c = ex(6, 3, &[matching(3, 2).unwrap()], &SearchConfig::default());
        assert_eq!(c.size, 10);
        assert_eq!(c.strategy, "clique");
        let c = ex(6, 3, &[matching(3, 2).unwrap()], &named("branch-and-bound", Symmetry::DegreeOrder));
        assert_eq!(c.size, 10);
    }

    #[test]
    fn two_edge_paths_in_triple_systems() {
        let p = [linear_path(3, 2).unwrap()];
        let sizes: Vec<usize> = (4..=8).map(|n| ex(n, 3, &p, &SearchConfig::default()).size).collect();
        assert_eq!(sizes, vec![4, 4, 4, 5, 8]);
    }

    #[test]
    fn graph_paths() {
        let p3 = [Graph::path(3).to_hypergraph()];
        assert_eq!(ex(5, 2, &p3, &SearchConfig::default()).size, 4);
        let sizes: Vec<usize> = (1..=8).map(|n| ex(n, 2, &p3, &SearchConfig::default()).size).collect();
        assert_eq!(sizes, vec![0, 1, 3, 3, 4, 6, 6, 7]);
    }

    #[test]
    fn strategies_and_symmetries_agree() {
        let cases: Vec<(usize, usize, Vec<Hypergraph>)> = vec![
            (6, 3, vec![linear_path(3, 2).unwrap()]),
            (7, 3, vec![linear_path(3, 2).unwrap()]),
            (6, 3, vec![star(3, 2).unwrap()]),
            (6, 3, vec![linear_path(3, 3).unwrap()]),
            (8, 2, vec![Graph::path(4).to_hypergraph()]),
            (7, 2, vec![Graph::star(3).to_hypergraph(), Graph::cycle(4).unwrap().to_hypergraph()]),
            (5, 3, vec![Hypergraph::complete(3, 4).unwrap()]),
        ];
        for (n, k, pats) in cases {
            let mut sizes = Vec::new();
            for sym in [Symmetry::None, Symmetry::Anchor, Symmetry::DegreeOrder] {
                sizes.push(ex(n, k, &pats, &named("branch-and-bound", sym)).size);
            }
            for threads in [1, 3] {
                let cfg = SearchConfig { threads: Some(threads), ..SearchConfig::default() };
                sizes.push(ex(n, k, &pats, &cfg).size);
            }
            assert!(sizes.windows(2).all(|w| w[0] == w[1]), "n={n} k={k}: {sizes:?}");
        }
    }

    #[test]
    fn single_edge_pattern() {
        let c = ex(5, 3, &[Hypergraph::complete(3, 3).unwrap()], &SearchConfig::default());
        assert_eq!(c.size, 0);
        let c = ex(5, 3, &[], &SearchConfig::default());
        assert_eq!(c.size, 10);
    }

    #[test]
    fn ceiling_and_budget() {
        let p = [matching(3, 2).unwrap()];
        assert!(matches!(turan_exact(10, 3, &p, &SearchConfig::default()), Err(Error::Limit(_))));
        let cfg = SearchConfig { ceiling: 128, node_limit: Some(10), ..named("branch-and-bound", Symmetry::None) };
        let c = turan_exact(9, 3, &[linear_path(3, 3).unwrap()], &cfg).unwrap();
        assert!(!c.exhaustive);
        c.verify().unwrap();
        assert!(turan_exact(6, 3, &p, &named("clique-free", Symmetry::None)).is_err());
        assert!(turan_exact(7, 3, &[linear_path(3, 3).unwrap()], &named("clique", Symmetry::None)).is_err());
    }

    #[test]
    fn certificate_json() {
        let c = ex(4, 3, &[linear_path(3, 2).unwrap()], &SearchConfig::default());
        let v = c.to_json();
        assert_eq!(v["size"], 4);
        assert_eq!(v["witness"].as_array().unwrap().len(), 4);
        assert_eq!(v["exhaustive"], true);
    }
}
