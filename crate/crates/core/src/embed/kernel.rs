use super::{contains, edge_map_for, Embedding};
use crate::cover::maximum_delta_system;
use crate::error::{invalid, Result};
use crate::forest::expand;
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::kernel::{kernel_graph, KernelGraph};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KernelEmbedOutcome {
    /// A copy of the expansion, valid against `expand(H, k).result`.
    Embedded(Embedding),
    /// `H` is not a subgraph of the kernel graph. This says nothing about
    /// whether the expansion occurs in the host.
    NotInKernelGraph,
    /// `H` sits in the kernel graph but petals ran out or the host is too
    /// small; only possible below the safe threshold.
    Stuck(String),
}

#[derive(Clone, Debug)]
pub struct KernelEmbedding {
    pub s: usize,
    pub kernel: KernelGraph,
    pub outcome: KernelEmbedOutcome,
}

impl KernelEmbedding {
    pub fn embedding(&self) -> Option<&Embedding> {
        match &self.outcome {
            KernelEmbedOutcome::Embedded(e) => Some(e),
            _ => None,
        }
    }
}

/// Looks for `H` in the kernel graph with threshold `k e(H)` and, if found,
/// realizes `H^(k)` in `f` one edge at a time from disjoint petals.
pub fn embed_expansion_via_kernel(f: &Hypergraph, h: &Graph) -> Result<KernelEmbedding> {
    embed_expansion_with_threshold(f, h, (f.k() * h.edge_count()).max(1))
}

/// [`embed_expansion_via_kernel`] with an explicit threshold `s`.
pub fn embed_expansion_with_threshold(f: &Hypergraph, h: &Graph, s: usize) -> Result<KernelEmbedding> {
    let k = f.k();
    let expansion = expand(h, k)?;
    let kernel = kernel_graph(f, s)?;
    let outcome = realize(f, h, &kernel, &expansion.result, &expansion.base_edges, &expansion.edge_sets)?;
    Ok(KernelEmbedding { s, kernel, outcome })
}

fn realize(
    f: &Hypergraph,
    h: &Graph,
    kernel: &KernelGraph,
    pattern: &Hypergraph,
    base_edges: &[(usize, usize)],
    edge_sets: &[VertexSet],
) -> Result<KernelEmbedOutcome> {
    if pattern.n() > f.n() {
        return Ok(KernelEmbedOutcome::Stuck(format!("host has {} vertices, expansion needs {}", f.n(), pattern.n())));
    }
    // Search only the non-isolated part of H in the kernel graph.
    let active: Vec<usize> = (0..h.n()).filter(|&v| h.degree(v) > 0).collect();
    let mut compact = vec![usize::MAX; h.n()];
    for (i, &v) in active.iter().enumerate() {
        compact[v] = i;
    }
    let core = Graph::new(active.len(), base_edges.iter().map(|&(u, v)| (compact[u], compact[v])))?;
    let Some(found) = contains(&kernel.graph.to_hypergraph(), &core.to_hypergraph())? else {
        return Ok(KernelEmbedOutcome::NotInKernelGraph);
    };

    let mut map = vec![usize::MAX; pattern.n()];
    let mut used = VertexSet::EMPTY;
    for &v in &active {
        map[v] = found.vertex_map[compact[v]];
        used.insert(map[v]);
    }
    for (j, &(x, y)) in base_edges.iter().enumerate() {
        let pair = VertexSet::from([map[x], map[y]]);
        let sunflower = maximum_delta_system(f, pair)?;
        let Some(petal) = sunflower.petals().find(|p| p.is_disjoint(used)) else {
            return Ok(KernelEmbedOutcome::Stuck(format!("no free petal on kernel {{{pair}}}")));
        };
        let fresh = edge_sets[j].without(x).without(y);
        for (p, q) in fresh.iter().zip(petal.iter()) {
            map[p] = q;
        }
        used = used | petal;
    }
    let mut free = VertexSet::range(f.n()) - used;
    for x in map.iter_mut().filter(|x| **x == usize::MAX) {
        let v = free.min().expect("host is large enough");
        free.remove(v);
        *x = v;
    }
    let edge_map = edge_map_for(f, pattern, &map).ok_or_else(|| invalid("assembled map misses a host edge"))?;
    Ok(KernelEmbedOutcome::Embedded(Embedding { vertex_map: map, edge_map }))
}

/// Edges split by whether the kernel graph restricted to the edge contains a
/// spanning star.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CenterPartition {
    /// Edges without a center.
    pub uncentered: Vec<VertexSet>,
    /// Edges with their smallest center `x`: `xy` is a kernel edge for every other `y` in the edge.
    pub centered: Vec<(VertexSet, usize)>,
}

pub fn classify_centers(f: &Hypergraph, g2: &Graph) -> Result<CenterPartition> {
    if g2.n() != f.n() {
        return Err(invalid(format!("graph has {} vertices, hypergraph {}", g2.n(), f.n())));
    }
    let mut out = CenterPartition::default();
    for &e in f.edges() {
        match e.iter().find(|&x| (e.without(x)).is_subset(g2.neighbors(x))) {
            Some(x) => out.centered.push((e, x)),
            None => out.uncentered.push(e),
        }
    }
    Ok(out)
}
