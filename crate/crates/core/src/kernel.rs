//! Kernel graphs: pairs of vertices that are kernels of large Δ-systems.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::cover::{maximum_delta_system, DeltaSystem};
use crate::error::{invalid, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// `G_{2,s}(F)`: `xy` is an edge iff `deg*({x, y}) >= s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelGraph {
    pub base: Hypergraph,
    pub s: usize,
    pub graph: Graph,
    witnesses: BTreeMap<(usize, usize), DeltaSystem>,
}

impl KernelGraph {
    /// A maximum Δ-system (at least `s` members) with kernel `{x, y}`, if `xy` is an edge.
    pub fn witness(&self, x: usize, y: usize) -> Option<&DeltaSystem> {
        self.witnesses.get(&(x.min(y), x.max(y)))
    }

    /// The graph text format preceded by a comment recording `s`.
    pub fn to_text(&self) -> String {
        format!("# kernel graph, s = {}\n{}", self.s, self.graph.to_text())
    }
}

/// Builds the kernel graph with threshold `s`. Pairs whose plain degree is
/// below `s` are skipped without solving the link matching problem.
pub fn kernel_graph(f: &Hypergraph, s: usize) -> Result<KernelGraph> {
    if f.k() < 3 {
        return Err(invalid(format!("kernel graphs need k >= 3, got {}", f.k())));
    }
    if s < 1 {
        return Err(invalid("threshold s must be at least 1"));
    }
    let n = f.n();
    let mut pair_degree: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for &e in f.edges() {
        let vs = e.to_vec();
        for (i, &x) in vs.iter().enumerate() {
            for &y in &vs[i + 1..] {
                *pair_degree.entry((x, y)).or_default() += 1;
            }
        }
    }
    let candidates: Vec<(usize, usize)> = pair_degree.into_iter().filter(|&(_, d)| d >= s).map(|(p, _)| p).collect();
    let found: Vec<((usize, usize), DeltaSystem)> = candidates
        .into_par_iter()
        .map(|(x, y)| ((x, y), maximum_delta_system(f, VertexSet::from([x, y])).expect("pair is smaller than k")))
        .filter(|(_, d)| d.len() >= s)
        .collect();
    let graph = Graph::new(n, found.iter().map(|&(p, _)| p))?;
    Ok(KernelGraph { base: f.clone(), s, graph, witnesses: found.into_iter().collect() })
}

/// The 3-graph joining a matching of `t` pairs `{2i, 2i+1}` with the `t`
/// singletons `2t + j`: every pair plus every singleton is an edge.
pub fn counterexample_f3(t: usize) -> Result<Hypergraph> {
    if t < 1 {
        return Err(invalid("t must be at least 1"));
    }
    let edges = (0..t).flat_map(|i| (0..t).map(move |j| VertexSet::from([2 * i, 2 * i + 1, 2 * t + j])));
    Hypergraph::new(3, 3 * t, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::star;
    use rand::{Rng, SeedableRng};

    #[test]
    fn empty_and_star() {
        let g = kernel_graph(&Hypergraph::empty(3, 5).unwrap(), 1).unwrap();
        assert_eq!(g.graph.edge_count(), 0);
        let g = kernel_graph(&star(3, 3).unwrap(), 2).unwrap();
        assert_eq!(g.graph.edge_count(), 0);
        let g = kernel_graph(&star(3, 3).unwrap(), 1).unwrap();
        assert_eq!(g.graph.edge_count(), 9);
    }

    #[test]
    fn argument_checks() {
        assert!(kernel_graph(&Hypergraph::complete(2, 4).unwrap(), 1).is_err());
        assert!(kernel_graph(&Hypergraph::complete(3, 4).unwrap(), 0).is_err());
        assert!(counterexample_f3(0).is_err());
    }

    #[test]
    fn f3_matching() {
        for t in 1..=5 {
            let f = counterexample_f3(t).unwrap();
            assert_eq!((f.n(), f.len()), (3 * t, t * t));
            for s in 2..=t {
                let g = kernel_graph(&f, s).unwrap();
                let expected: Vec<(usize, usize)> = (0..t).map(|i| (2 * i, 2 * i + 1)).collect();
                assert_eq!(g.graph.edges().collect::<Vec<_>>(), expected);
            }
        }
        assert_eq!(counterexample_f3(1).unwrap().edges(), &[VertexSet::from([0, 1, 2])]);
    }

    #[test]
    fn monotone_and_witnessed() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let f = Hypergraph::complete(3, 9).unwrap().filter_edges(|_, _| rng.gen_bool(0.6));
            let mut prev: Option<Graph> = None;
            for s in (1..=5).rev() {
                let g = kernel_graph(&f, s).unwrap();
                for (x, y) in g.graph.edges() {
                    let w = g.witness(x, y).unwrap();
                    assert!(w.is_valid() && w.len() >= s);
                    assert_eq!(w.kernel, VertexSet::from([x, y]));
                }
                if let Some(p) = &prev {
                    assert!(p.edges().all(|(x, y)| g.graph.has_edge(x, y)));
                }
                prev = Some(g.graph);
            }
        }
    }

    #[test]
    fn text_has_header() {
        let g = kernel_graph(&counterexample_f3(2).unwrap(), 2).unwrap();
        assert_eq!(g.to_text(), "# kernel graph, s = 2\ngraph 6 2\n0 1\n2 3\n");
    }
}
