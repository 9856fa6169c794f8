//! Extremal and lower-bound constructions, plus closed-form evaluators.

mod formulas;
mod registry;

pub use formulas::{
    formula_registry, matching_leading, triple_two_edge_path, Formula, FormulaRegistry, FormulaReport,
    MatchingConvention, Params, Relation,
};
pub use registry::{construction_registry, BuildContext, Construction, ConstructionRegistry};

use crate::binomial::choose;
use crate::error::{invalid, Error, Result};
use crate::forest::sigma;
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// `{A ∪ B : A ∈ a, B ∈ b}` for families with disjoint supports.
pub fn join(a: &Hypergraph, b: &Hypergraph) -> Result<Hypergraph> {
    if !a.support().is_disjoint(b.support()) {
        return Err(invalid("joined families must live on disjoint vertex sets"));
    }
    let edges = a.edges().iter().flat_map(|&x| b.edges().iter().map(move |&y| x | y));
    Hypergraph::new(a.k() + b.k(), a.n().max(b.n()), edges)
}

fn k_sets(n: usize, k: usize, keep: impl Fn(VertexSet) -> bool) -> Result<Hypergraph> {
    if k == 0 {
        return Err(invalid("uniformity must be at least 1"));
    }
    let all = VertexSet::range(n).subsets_of_size(k);
    Hypergraph::new(k, n, all.into_iter().filter(|&e| keep(e)))
}

/// All k-sets of `[n]` meeting `[σ - 1]` in exactly one vertex, where
/// `σ = σ(t)`. Free of the k-expansion of `t`.
pub fn lower_bound_family(n: usize, k: usize, t: &Graph) -> Result<Hypergraph> {
    let s = sigma(t)?.value;
    if n + 1 < s + k {
        return Err(invalid(format!("need n >= sigma - 1 + k = {}, got {n}", s - 1 + k)));
    }
    let y = VertexSet::range(s - 1);
    k_sets(n, k, |e| (e & y).len() == 1)
}

/// `(σ - 1) C(n - σ + 1, k - 1)`.
pub fn lower_bound_value(n: usize, k: usize, sigma: usize) -> Result<u64> {
    if sigma == 0 || k == 0 {
        return Err(invalid("sigma and k must be positive"));
    }
    mul(sigma as u64 - 1, choose((n + 1).saturating_sub(sigma), k - 1)?)
}

fn mul(a: u64, b: u64) -> Result<u64> {
    a.checked_mul(b).ok_or_else(|| Error::Overflow(format!("{a} * {b}")))
}

/// All k-sets of `[n]` meeting `[s]`.
pub fn matching_extremal_family(n: usize, k: usize, s: usize) -> Result<Hypergraph> {
    if n < k + s {
        return Err(invalid(format!("need n >= k + s = {}, got {n}", k + s)));
    }
    let fixed = VertexSet::range(s);
    k_sets(n, k, |e| !e.is_disjoint(fixed))
}

/// `C(n, k) - C(n - ν, k)`: the largest family with no `ν + 1` pairwise
/// disjoint members, for large `n`.
pub fn erdos_matching_bound(n: usize, k: usize, nu: usize) -> Result<u64> {
    Ok(choose(n, k)? - choose(n.saturating_sub(nu), k)?)
}

fn path_t(l: usize) -> Result<usize> {
    if l < 1 {
        return Err(invalid("path length must be at least 1"));
    }
    Ok((l - 1) / 2)
}

/// The family avoiding the linear path with `l` edges: all k-sets meeting
/// `S = [t]`, `t = ⌊(l-1)/2⌋`, and for even `l` also the k-sets missing `S`
/// that contain `{t, t+1}`.
pub fn path_extremal_family(n: usize, k: usize, l: usize) -> Result<Hypergraph> {
    let t = path_t(l)?;
    if k < 2 || n < t + k {
        return Err(invalid(format!("need k >= 2 and n >= t + k = {}, got k={k}, n={n}", t + k)));
    }
    let s = VertexSet::range(t);
    let pair = VertexSet::from([t, t + 1]);
    let even = l.is_multiple_of(2);
    k_sets(n, k, |e| !e.is_disjoint(s) || (even && pair.is_subset(e)))
}

/// `C(n-1, k-1) + ... + C(n-t, k-1)`, plus `C(n-t-2, k-2)` for even `l`.
pub fn path_extremal_value(n: usize, k: usize, l: usize) -> Result<u64> {
    let t = path_t(l)?;
    if k < 2 {
        return Err(invalid("k must be at least 2"));
    }
    let mut total: u64 = 0;
    for i in 1..=t {
        total += choose(n.saturating_sub(i), k - 1)?;
    }
    if l.is_multiple_of(2) {
        total += choose(n.saturating_sub(t + 2), k - 2)?;
    }
    Ok(total)
}

/// `φ(l) = l² - l` for odd `l` and `l² - 3l/2` for even `l`.
pub fn star_phi(l: u64) -> Result<u64> {
    if l < 2 {
        return Err(invalid("star size must be at least 2"));
    }
    Ok(if l % 2 == 1 { l * l - l } else { l * l - 3 * l / 2 })
}

/// `(v - k) C(n, k - 1)`.
pub fn forest_turan_bound(v: usize, k: usize, n: usize) -> Result<u64> {
    if v < k || k == 0 {
        return Err(invalid(format!("need v >= k >= 1, got v={v}, k={k}")));
    }
    mul((v - k) as u64, choose(n, k - 1)?)
}

/// Greedy packing of `(v-1)`-subsets of `[n]` with pairwise intersections
/// below `k - 1`, scanned in lexicographic order; returns the blocks.
pub fn greedy_packing(n: usize, k: usize, v: usize) -> Result<Vec<VertexSet>> {
    if k < 2 || v <= k || n + 1 < v {
        return Err(invalid(format!("need n >= v - 1 > k - 1 >= 1, got n={n}, k={k}, v={v}")));
    }
    let mut blocks: Vec<VertexSet> = Vec::new();
    for b in VertexSet::range(n).subsets_of_size(v - 1) {
        if blocks.iter().all(|&c| (b & c).len() < k - 1) {
            blocks.push(b);
        }
    }
    Ok(blocks)
}

/// Every block of [`greedy_packing`] replaced by all of its k-subsets. No
/// tight k-tree on `v` vertices fits, since one would lie inside a block.
pub fn kalai_packing_family(n: usize, k: usize, v: usize) -> Result<Hypergraph> {
    let blocks = greedy_packing(n, k, v)?;
    Hypergraph::new(k, n, blocks.iter().flat_map(|b| b.subsets_of_size(k)))
}
