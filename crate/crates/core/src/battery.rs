//! The acceptance battery: exact small cases and seeded randomized suites,
//! each registered under an id and run with its own time limit.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::binomial::{binomial_sum_bound_holds, choose};
use crate::constructions::{lower_bound_family, triple_two_edge_path, Params};
use crate::cover::{one_cross_cut_number, transversal_number};
use crate::embed::{contains, embed_expansion_via_kernel, embed_tight_forest, peel_shadow};
use crate::error::Result;
use crate::forest::{example_caterpillar, expand, forest_from_spec, linear_path, matching, sigma, GrowthSequence};
use crate::graph::{non_isomorphic_forests, Graph};
use crate::hypergraph::Hypergraph;
use crate::kernel::{counterexample_f3, kernel_graph};
use crate::search::{turan_exact, SearchConfig};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub passed: bool,
    pub detail: String,
}

fn verdict(passed: bool, detail: impl Into<String>) -> Result<Verdict> {
    Ok(Verdict { passed, detail: detail.into() })
}

pub trait AcceptanceCheck: Send + Sync {
    /// Criterion number as printed in reports.
    fn criterion(&self) -> &'static str;
    fn id(&self) -> &'static str;
    fn title(&self) -> &'static str;
    fn limit(&self) -> Option<Duration>;
    fn run(&self) -> Result<Verdict>;
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub criterion: &'static str,
    pub id: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
    pub limit: Option<f64>,
}

impl CheckReport {
    /// `PASS 1 ekr-search (0.01s): ...`
    pub fn line(&self) -> String {
        let mark = if self.passed { "PASS" } else { "FAIL" };
        let limit = self.limit.map_or(String::new(), |l| format!(", limit {l}s"));
        format!("{mark} {} {} ({:.2}s{limit}): {}", self.criterion, self.id, self.seconds, self.detail)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "criterion": self.criterion,
            "id": self.id,
            "title": self.title,
            "passed": self.passed,
            "detail": self.detail,
            "seconds": self.seconds,
            "limit": self.limit,
        })
    }
}

pub struct Battery {
    checks: Vec<Box<dyn AcceptanceCheck>>,
}

impl Battery {
    pub fn empty() -> Self {
        Battery { checks: Vec::new() }
    }

    pub fn register(&mut self, check: Box<dyn AcceptanceCheck>) {
        self.checks.push(check);
    }

    pub fn get(&self, id: &str) -> Option<&dyn AcceptanceCheck> {
        self.checks.iter().find(|c| c.id() == id || c.criterion() == id).map(|c| c.as_ref())
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn AcceptanceCheck> {
        self.checks.iter().map(|c| c.as_ref())
    }

    pub fn ids(&self) -> Vec<&'static str> {
        self.checks.iter().map(|c| c.id()).collect()
    }

    pub fn run(&self, id: &str) -> Option<CheckReport> {
        self.get(id).map(run_check)
    }

    pub fn run_all(&self) -> Vec<CheckReport> {
        self.iter().map(run_check).collect()
    }
}

/// Runs one check. Errors and overruns count as failures.
pub fn run_check(check: &dyn AcceptanceCheck) -> CheckReport {
    let start = Instant::now();
    let result = check.run();
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = match result {
        Ok(v) => (v.passed, v.detail),
        Err(e) => (false, format!("error: {e}")),
    };
    if let Some(limit) = check.limit() {
        if elapsed > limit {
            passed = false;
            detail.push_str(&format!("; exceeded the {}s limit", limit.as_secs()));
        }
    }
    CheckReport {
        criterion: check.criterion(),
        id: check.id(),
        title: check.title(),
        passed,
        detail,
        seconds: elapsed.as_secs_f64(),
        limit: check.limit().map(|l| l.as_secs_f64()),
    }
}

macro_rules! check {
    ($name:ident, $criterion:literal, $id:literal, $title:literal, $limit:expr, $body:expr) => {
        struct $name;

        impl AcceptanceCheck for $name {
            fn criterion(&self) -> &'static str {
                $criterion
            }
            fn id(&self) -> &'static str {
                $id
            }
            fn title(&self) -> &'static str {
                $title
            }
            fn limit(&self) -> Option<Duration> {
                $limit.map(Duration::from_secs)
            }
            fn run(&self) -> Result<Verdict> {
                $body()
            }
        }
    };
}

const NO_LIMIT: Option<u64> = None;

check!(EkrSearch, "1", "ekr-search", "ex_3(6, M_2) = C(5,2) by exhaustive search", Some(10), || {
    let cert = turan_exact(6, 3, &[matching(3, 2)?], &SearchConfig::default())?;
    let want = choose(5, 2)?;
    verdict(
        cert.exhaustive && cert.size as u64 == want,
        format!("search {} (exhaustive {}), C(5,2) = {want}", cert.size, cert.exhaustive),
    )
});

check!(TwoEdgePathTriples, "2", "two-edge-path-triples", "ex_3(n, P_2) = n or n-1 for n = 4..7", Some(60), || {
    let mut found = Vec::new();
    let mut expected = Vec::new();
    let mut exhaustive = true;
    for n in 4..=7 {
        let cert = turan_exact(n, 3, &[linear_path(3, 2)?], &SearchConfig::default())?;
        exhaustive &= cert.exhaustive;
        found.push(cert.size as u64);
        expected.push(triple_two_edge_path(n)?);
    }
    verdict(exhaustive && found == expected, format!("search {found:?}, expected {expected:?}"))
});

check!(
    SigmaCrossCut,
    "3",
    "sigma-cross-cut",
    "sigma(T) = tau_1(T^(k)) for all forests on <= 8 vertices, k = 3,4,5",
    Some(300),
    || {
        let forests: Vec<_> = non_isomorphic_forests(8).into_iter().filter(|f| f.graph().edge_count() > 0).collect();
        let mut checked = 0;
        let mut bad = Vec::new();
        for f in &forests {
            let s = sigma(f.graph())?.value;
            for k in 3..=5 {
                let t1 = one_cross_cut_number(&expand(f.graph(), k)?.result);
                checked += 1;
                if t1 != Some(s) {
                    bad.push(format!("k={k} sigma={s} tau1={t1:?} on {:?}", f.graph().edges().collect::<Vec<_>>()));
                }
            }
        }
        let first = bad.first().map_or(String::new(), |b| format!("; first: {b}"));
        verdict(bad.is_empty(), format!("{} forests, {checked} pairs, {} mismatches{first}", forests.len(), bad.len()))
    }
);

check!(
    CrossCutLower,
    "4",
    "cross-cut-lower",
    "the lower-bound family has (sigma-1) C(n-sigma+1, k-1) edges and no T^(k)",
    NO_LIMIT,
    || {
        let mut checked = 0;
        let mut bad = Vec::new();
        for spec in ["lpath-graph:3", "lpath-graph:5", "sec4tree:2,1"] {
            let t = forest_from_spec(spec)?;
            let s = sigma(t.graph())?.value;
            for k in 3..=4 {
                let pattern = expand(t.graph(), k)?.result;
                for n in (s - 1 + k)..=14 {
                    let family = lower_bound_family(n, k, t.graph())?;
                    let want = (s as u64 - 1) * choose(n - s + 1, k - 1)?;
                    let free = contains(&family, &pattern)?.is_none();
                    checked += 1;
                    if family.len() as u64 != want || !free {
                        bad.push(format!("{spec} k={k} n={n}: {} edges vs {want}, free {free}", family.len()));
                    }
                }
            }
        }
        let first = bad.first().map_or(String::new(), |b| format!("; first: {b}"));
        verdict(bad.is_empty(), format!("{checked} points, {} failures{first}", bad.len()))
    }
);

/// A random tight k-tree on `v` vertices.
pub fn random_tight_tree(rng: &mut impl Rng, k: usize, v: usize) -> Result<GrowthSequence> {
    let mut g = GrowthSequence::single_edge(k);
    while g.vertex_count() < v {
        let host = g.edges()[rng.gen_range(0..g.len())];
        let drop = host.iter().nth(rng.gen_range(0..k)).unwrap_or(0);
        g.push_with_fresh(host.without(drop))?;
    }
    Ok(g)
}

fn random_k_graph(rng: &mut impl Rng, k: usize, n: usize, m: usize) -> Result<Hypergraph> {
    let all = VertexSet::range(n).subsets_of_size(k);
    let picked = rand::seq::index::sample(rng, all.len(), m);
    Hypergraph::new(k, n, picked.iter().map(|i| all[i]))
}

check!(
    TightForestEmbed,
    "5",
    "tight-forest-embed",
    "above (v-k) C(n,k-1) edges a tight k-tree on v vertices always embeds",
    NO_LIMIT,
    || {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut greedy = 0;
        let mut bad = Vec::new();
        let mut trials = 0;
        while trials < 100 {
            let k = rng.gen_range(3..=4);
            let v = rng.gen_range(k + 1..=7);
            let n = rng.gen_range(v..=12);
            let bound = (v as u64 - k as u64) * choose(n, k - 1)?;
            let total = choose(n, k)?;
            if total <= bound {
                continue;
            }
            trials += 1;
            let m = rng.gen_range(bound + 1..=total) as usize;
            let f = random_k_graph(&mut rng, k, n, m)?;
            let t = random_tight_tree(&mut rng, k, v)?;
            let peel = peel_shadow(&f, v - k);
            if !peel.residue.is_empty() {
                greedy += 1;
            }
            let embedded = match embed_tight_forest(&f, &t)? {
                Some(e) => e.validate(&f, &t.to_hypergraph()?).is_ok(),
                None => false,
            };
            if !embedded || peel.removed_count() as u64 > bound {
                bad.push(format!("k={k} v={v} n={n} m={m}: embedded {embedded}, removed {}", peel.removed_count()));
            }
        }
        let first = bad.first().map_or(String::new(), |b| format!("; first: {b}"));
        verdict(
            bad.is_empty(),
            format!("{trials} trials, {greedy} with nonempty residue, {} failures{first}", bad.len()),
        )
    }
);

check!(
    Caterpillar,
    "6",
    "caterpillar",
    "tau(T) = 4 and sigma(T) = 2c+3 for the example caterpillars",
    NO_LIMIT,
    || {
        let mut rows = Vec::new();
        let mut ok = true;
        for (d, c) in [(2, 1), (3, 1), (3, 2)] {
            let t = example_caterpillar(d, c)?;
            let tau = transversal_number(&t.graph().to_hypergraph());
            let s = sigma(t.graph())?.value;
            ok &= tau == 4 && s == 2 * c + 3;
            rows.push(format!("(d,c)=({d},{c}): tau {tau}, sigma {s}"));
        }
        verdict(ok, rows.join("; "))
    }
);

check!(
    F3Kernel,
    "7",
    "f3-kernel",
    "the kernel graph of F_3(t) is the t-edge matching for 2 <= s <= t",
    NO_LIMIT,
    || {
        let mut ok = true;
        let mut rows = Vec::new();
        for t in 2..=4 {
            let f = counterexample_f3(t)?;
            let shape = f.len() == t * t && f.n() == 3 * t;
            let expected = Graph::new(3 * t, (0..t).map(|i| (2 * i, 2 * i + 1)))?;
            let matches =
                (2..=t).map(|s| kernel_graph(&f, s).map(|g| g.graph == expected)).collect::<Result<Vec<_>>>()?;
            ok &= shape && matches.iter().all(|&m| m);
            rows.push(format!("t={t}: {} edges on {} vertices, matching at s=2..{t}: {matches:?}", f.len(), f.n()));
        }
        verdict(ok, rows.join("; "))
    }
);

/// `H^(k)` plus, for every edge `xy` of `H`, `k e(H)` more edges through
/// `{x, y}` with fresh petals and a few random edges, randomly relabelled.
fn padded_host(rng: &mut impl Rng, h: &Graph, k: usize, noise: usize) -> Result<Hypergraph> {
    let expansion = expand(h, k)?;
    let s = k * h.edge_count();
    let mut edges: Vec<VertexSet> = expansion.result.edges().to_vec();
    let mut next = expansion.result.n();
    for (x, y) in h.edges() {
        for _ in 0..s {
            let petal = VertexSet::range(next + k - 2) - VertexSet::range(next);
            next += k - 2;
            edges.push(petal.with(x).with(y));
        }
    }
    let all = VertexSet::range(next);
    for _ in 0..noise {
        let picked = rand::seq::index::sample(rng, next, k);
        edges.push(picked.iter().collect());
    }
    let mut perm: Vec<usize> = all.iter().collect();
    perm.shuffle(rng);
    let mut relabelled: Vec<VertexSet> = edges.iter().map(|e| e.iter().map(|v| perm[v]).collect()).collect();
    relabelled.sort();
    relabelled.dedup();
    Hypergraph::new(k, next, relabelled)
}

check!(KernelEmbed, "8", "kernel-embed", "expansions embed through the kernel graph in padded hosts", NO_LIMIT, || {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let shapes: Vec<_> = non_isomorphic_forests(5).into_iter().filter(|f| f.graph().edge_count() > 0).collect();
    let mut bad = Vec::new();
    for _ in 0..50 {
        let k = rng.gen_range(3..=4);
        let max_edges = if k == 3 { 4 } else { 3 };
        let candidates: Vec<_> = shapes.iter().filter(|f| f.graph().edge_count() <= max_edges).collect();
        let h = candidates[rng.gen_range(0..candidates.len())].graph();
        let noise = rng.gen_range(0..=30);
        let host = padded_host(&mut rng, h, k, noise)?;
        let pattern = expand(h, k)?.result;
        let run = embed_expansion_via_kernel(&host, h)?;
        let valid = run.embedding().is_some_and(|e| e.validate(&host, &pattern).is_ok());
        if !valid {
            bad.push(format!("k={k} H={:?}: {:?}", h.edges().collect::<Vec<_>>(), run.outcome));
        }
    }
    let first = bad.first().map_or(String::new(), |b| format!("; first: {b}"));
    verdict(bad.is_empty(), format!("50 hosts, {} failures{first}", bad.len()))
});

check!(
    BinomialSum,
    "9",
    "binomial-sum",
    "sum C(z_i,t) <= (sum z_i / z_1) C(z_1,t) on random sequences",
    NO_LIMIT,
    || {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let mut bad = Vec::new();
        for _ in 0..1000 {
            let t = rng.gen_range(1..=8u64);
            let len = rng.gen_range(1..=12);
            let mut z: Vec<u64> = (0..len).map(|_| rng.gen_range(0..=60)).collect();
            z[0] = rng.gen_range(t..=60);
            z.sort_unstable_by(|a, b| b.cmp(a));
            if !binomial_sum_bound_holds(&z, t)? {
                bad.push(format!("t={t} z={z:?}"));
            }
        }
        let first = bad.first().map_or(String::new(), |b| format!("; first: {b}"));
        verdict(bad.is_empty(), format!("1000 sequences, {} violations{first}", bad.len()))
    }
);

fn path_free_graph_ex(n: usize, l: usize) -> Result<(usize, bool)> {
    let cert = turan_exact(n, 2, &[Graph::path(l).to_hypergraph()], &SearchConfig::default())?;
    Ok((cert.size, cert.exhaustive))
}

check!(ErdosGallai, "10", "erdos-gallai", "ex(n, P_l) <= (l-1)n/2, equal when l+1 divides n", Some(120), || {
    let mut bad = Vec::new();
    let mut checked = 0;
    for l in 2..=4 {
        for n in 2..=10 {
            let (ex, exhaustive) = path_free_graph_ex(n, l)?;
            checked += 1;
            let bound = (l - 1) * n;
            if !exhaustive || 2 * ex > bound || (n % (l + 1) == 0 && 2 * ex != bound) {
                bad.push(format!("l={l} n={n}: ex {ex}, (l-1)n/2 = {}", bound as f64 / 2.0));
            }
        }
    }
    verdict(bad.is_empty(), format!("{checked} points, {} failures {bad:?}", bad.len()))
});

check!(
    ErdosGallaiCliques,
    "10b",
    "erdos-gallai-cliques",
    "ex(n, P_l) = (l-1)n/2 with a disjoint K_l witness when l divides n",
    Some(120),
    || {
        let mut bad = Vec::new();
        let mut checked = 0;
        for l in 2..=4 {
            for n in (l..=10).filter(|n| n % l == 0) {
                let cliques = Graph::new(
                    n,
                    (0..n).flat_map(|u| (u + 1..n).filter(move |&v| u / l == v / l).map(move |v| (u, v))),
                )?;
                let witness = cliques.to_hypergraph();
                let free = contains(&witness, &Graph::path(l).to_hypergraph())?.is_none();
                let (ex, exhaustive) = path_free_graph_ex(n, l)?;
                checked += 1;
                if !free || !exhaustive || 2 * ex != (l - 1) * n || ex != witness.len() {
                    bad.push(format!("l={l} n={n}: ex {ex}, cliques {} (free {free})", witness.len()));
                }
            }
        }
        verdict(bad.is_empty(), format!("{checked} points, {} failures {bad:?}", bad.len()))
    }
);

/// Tries every injection of the pattern's vertices into the host's.
pub fn naive_contains(host: &Hypergraph, pattern: &Hypergraph) -> bool {
    fn go(i: usize, map: &mut Vec<usize>, used: &mut [bool], host: &HashSet<VertexSet>, pattern: &Hypergraph) -> bool {
        if i == pattern.n() {
            return pattern.edges().iter().all(|e| host.contains(&e.iter().map(|v| map[v]).collect()));
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                map.push(x);
                let hit = go(i + 1, map, used, host, pattern);
                map.pop();
                used[x] = false;
                if hit {
                    return true;
                }
            }
        }
        false
    }
    if host.k() != pattern.k() || pattern.n() > host.n() {
        return false;
    }
    let edges: HashSet<VertexSet> = host.edges().iter().copied().collect();
    go(0, &mut Vec::new(), &mut vec![false; host.n()], &edges, pattern)
}

/// One seeded containment instance: a host on at most 9 vertices and a
/// pattern with at most 4 edges, about a third of them cut out of the host.
pub fn oracle_instance(rng: &mut impl Rng) -> Result<(Hypergraph, Hypergraph)> {
    let k = rng.gen_range(2..=3);
    let n = rng.gen_range(k + 1..=9);
    let all = VertexSet::range(n).subsets_of_size(k);
    let density = rng.gen_range(0.05..0.35);
    let host_edges: Vec<VertexSet> = all.iter().copied().filter(|_| rng.gen_bool(density)).collect();
    let host = Hypergraph::new(k, n, host_edges)?;
    let q = rng.gen_range(1..=4);
    let mut pattern_edges: Vec<VertexSet> = if rng.gen_bool(0.35) && !host.is_empty() {
        host.edges().choose_multiple(rng, q).copied().collect()
    } else {
        let p = rng.gen_range(k..=n.min(7));
        let pool = VertexSet::range(p).subsets_of_size(k);
        pool.choose_multiple(rng, q).copied().collect()
    };
    if rng.gen_bool(0.3) {
        pattern_edges.push(all[rng.gen_range(0..all.len())]);
    }
    pattern_edges.sort();
    pattern_edges.dedup();
    pattern_edges.truncate(4);
    let support: Vec<usize> = pattern_edges.iter().fold(VertexSet::default(), |a, &e| a | e).iter().collect();
    let isolated = if rng.gen_bool(0.2) { 1 } else { 0 };
    let relabel = |e: &VertexSet| e.iter().map(|v| support.iter().position(|&s| s == v).unwrap_or(0)).collect();
    let pattern = Hypergraph::new(k, support.len() + isolated, pattern_edges.iter().map(relabel))?;
    Ok((host, pattern))
}

check!(
    ContainsOracle,
    "11",
    "contains-oracle",
    "contains() agrees with the all-injections oracle on 200 instances",
    NO_LIMIT,
    || {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut positives = 0;
        let mut bad = Vec::new();
        for i in 0..200 {
            let (host, pattern) = oracle_instance(&mut rng)?;
            let fast = contains(&host, &pattern)?;
            let valid = fast.as_ref().is_none_or(|e| e.validate(&host, &pattern).is_ok());
            let naive = naive_contains(&host, &pattern);
            positives += usize::from(naive);
            if naive != fast.is_some() || !valid {
                bad.push(format!("instance {i}: oracle {naive}, contains {}", fast.is_some()));
            }
        }
        let first = bad.first().map_or(String::new(), |b| format!("; first: {b}"));
        verdict(bad.is_empty(), format!("200 instances, {positives} positive, {} disagreements{first}", bad.len()))
    }
);

/// Criteria 1 to 11 in order, with the corrected Erdős–Gallai equality case
/// registered next to the literal one.
pub fn acceptance_battery() -> Battery {
    let mut b = Battery::empty();
    b.register(Box::new(EkrSearch));
    b.register(Box::new(TwoEdgePathTriples));
    b.register(Box::new(SigmaCrossCut));
    b.register(Box::new(CrossCutLower));
    b.register(Box::new(TightForestEmbed));
    b.register(Box::new(Caterpillar));
    b.register(Box::new(F3Kernel));
    b.register(Box::new(KernelEmbed));
    b.register(Box::new(BinomialSum));
    b.register(Box::new(ErdosGallai));
    b.register(Box::new(ErdosGallaiCliques));
    b.register(Box::new(ContainsOracle));
    b
}

/// A small grid on which the exact search finishes quickly, for each
/// registered formula.
pub fn formula_grid(id: &str) -> Vec<Params> {
    let nk = |ns: std::ops::RangeInclusive<u64>, k: u64| ns.map(move |n| Params::new().with("n", n).with("k", k));
    match id {
        "ekr" => nk(4..=8, 2).chain(nk(6..=7, 3)).collect(),
        "erdos-matching" => nk(6..=8, 3).map(|p| p.with("nu", 2)).collect(),
        "matching-leading" => [0, 1]
            .into_iter()
            .map(|s| Params::new().with("n", 9).with("k", 3).with("nu", 2).with("shifted", s))
            .collect(),
        "two-edge-path" => nk(6..=8, 4).collect(),
        "triple-two-edge-path" => (4..=9).map(|n| Params::new().with("n", n)).collect(),
        "linear-path" => nk(7..=9, 3).map(|p| p.with("l", 3)).collect(),
        "star-leading" => nk(5..=8, 3).map(|p| p.with("l", 2)).collect(),
        "graph-star" => (2..=4).flat_map(|l| (l..=10).map(move |n| Params::new().with("n", n).with("l", l))).collect(),
        "forest-upper" => nk(5..=9, 3)
            .flat_map(|p| [p.clone().with("v", 4), p.with("v", 5)])
            .chain(nk(6..=8, 4).map(|p| p.with("v", 5)))
            .collect(),
        "forest-graph-upper" => {
            (3..=5).flat_map(|v| (3..=10).map(move |n| Params::new().with("n", n).with("v", v))).collect()
        }
        "erdos-gallai" => {
            (2..=4).flat_map(|l| (2..=10).map(move |n| Params::new().with("n", n).with("l", l))).collect()
        }
        "cross-cut-lower" => nk(6..=9, 3)
            .map(|p| p.with_tree("lpath-graph:3"))
            .chain(nk(5..=8, 3).map(|p| p.with_tree("star-graph:3")))
            .collect(),
        "expansion-leading" => nk(5..=8, 3).map(|p| p.with_tree("lpath-graph:2")).collect(),
        _ => Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup_by_id_and_number() {
        let b = acceptance_battery();
        assert_eq!(b.ids().len(), 12);
        assert_eq!(b.get("7").unwrap().id(), "f3-kernel");
        assert_eq!(b.get("caterpillar").unwrap().criterion(), "6");
        assert!(b.get("nope").is_none());
    }

    #[test]
    fn failures_and_overruns_are_reported() {
        struct Slow;
        impl AcceptanceCheck for Slow {
            fn criterion(&self) -> &'static str {
                "x"
            }
            fn id(&self) -> &'static str {
                "slow"
            }
            fn title(&self) -> &'static str {
                "sleeps"
            }
            fn limit(&self) -> Option<Duration> {
                Some(Duration::ZERO)
            }
            fn run(&self) -> Result<Verdict> {
                std::thread::sleep(Duration::from_millis(2));
                verdict(true, "done")
            }
        }
        let r = run_check(&Slow);
        assert!(!r.passed);
        assert!(r.line().starts_with("FAIL x slow"));
    }

    #[test]
    fn naive_oracle_basics() {
        let host = linear_path(3, 3).unwrap();
        assert!(naive_contains(&host, &linear_path(3, 2).unwrap()));
        assert!(naive_contains(&host, &matching(3, 2).unwrap()));
        assert!(!naive_contains(&linear_path(3, 2).unwrap(), &matching(3, 2).unwrap()));
    }

    #[test]
    fn random_tight_trees_are_tight() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for k in 2..=4 {
            for v in k..=9 {
                let t = random_tight_tree(&mut rng, k, v).unwrap();
                assert_eq!(t.vertex_count(), v);
                assert!(t.is_tight().unwrap());
            }
        }
    }

    #[test]
    fn every_formula_has_a_grid() {
        for f in crate::constructions::formula_registry().iter() {
            assert!(!formula_grid(f.id()).is_empty(), "{}", f.id());
        }
    }
}
