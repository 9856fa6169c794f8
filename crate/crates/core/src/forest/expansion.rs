use crate::error::{invalid, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// The k-expansion of a graph together with the map back to the base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpandedForest {
    pub base: Graph,
    pub k: usize,
    pub result: Hypergraph,
    /// Base edges in lexicographic order; `edge_sets[j]` is the k-set replacing `base_edges[j]`.
    pub base_edges: Vec<(usize, usize)>,
    pub edge_sets: Vec<VertexSet>,
}

impl ExpandedForest {
    /// Vertices `0..p` that come from the base graph.
    pub fn original_vertices(&self) -> VertexSet {
        VertexSet::range(self.base.n())
    }

    /// The `k - 2` private vertices added to base edge `j`.
    pub fn fresh_vertices(&self, j: usize) -> VertexSet {
        let (u, v) = self.base_edges[j];
        self.edge_sets[j].without(u).without(v)
    }

    pub fn is_original(&self, x: usize) -> bool {
        x < self.base.n()
    }
}

/// Replaces every edge `xy` of `g` by `{x, y}` plus `k - 2` new vertices.
///
/// Base vertices keep their ids `0..p`; the `j`-th edge in lexicographic
/// order receives ids `p + j(k-2) .. p + (j+1)(k-2)`.
pub fn expand(g: &Graph, k: usize) -> Result<ExpandedForest> {
    if k < 2 {
        return Err(invalid(format!("expansion needs k >= 2, got {k}")));
    }
    let p = g.n();
    let base_edges: Vec<(usize, usize)> = g.edges().collect();
    let n = p + base_edges.len() * (k - 2);
    if n > MAX_VERTICES {
        return Err(invalid(format!("expansion would have {n} vertices, more than {MAX_VERTICES}")));
    }
    let edge_sets: Vec<VertexSet> = base_edges
        .iter()
        .enumerate()
        .map(|(j, &(u, v))| {
            let lo = p + j * (k - 2);
            let fresh = VertexSet::range(lo + k - 2) - VertexSet::range(lo);
            fresh.with(u).with(v)
        })
        .collect();
    let result = Hypergraph::new(k, n, edge_sets.iter().copied())?;
    Ok(ExpandedForest { base: g.clone(), k, result, base_edges, edge_sets })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::arb_graph;
    use proptest::prelude::*;

    #[test]
    fn path_expansion() {
        let x = expand(&Graph::path(2), 3).unwrap();
        assert_eq!(x.result.n(), 5);
        assert_eq!(x.result.len(), 2);
        assert_eq!(x.edge_sets, vec![VertexSet::from([0, 1, 3]), VertexSet::from([1, 2, 4])]);
        assert_eq!(x.fresh_vertices(1), VertexSet::from([4]));
    }

    #[test]
    fn edgeless_and_k2() {
        let x = expand(&Graph::empty(4).unwrap(), 5).unwrap();
        assert!(x.result.is_empty());
        let g = Graph::cycle(5).unwrap();
        assert_eq!(expand(&g, 2).unwrap().result, g.to_hypergraph());
        assert!(expand(&g, 1).is_err());
    }

    #[test]
    fn triangle_k4() {
        let x = expand(&Graph::complete(3).unwrap(), 4).unwrap();
        assert_eq!(x.result.n(), 9);
        assert_eq!(x.result.len(), 3);
        assert!(x.result.is_linear());
        for (i, a) in x.result.edges().iter().enumerate() {
            for b in &x.result.edges()[i + 1..] {
                assert_eq!((*a & *b).len(), 1);
            }
        }
    }

    proptest! {
        #[test]
        fn expansion_shape(g in arb_graph(7), k in 2usize..6) {
            let x = expand(&g, k).unwrap();
            prop_assert_eq!(x.result.n(), g.n() + g.edge_count() * (k - 2));
            prop_assert_eq!(x.result.len(), g.edge_count());
            prop_assert!(x.result.is_linear());
            for j in 0..x.edge_sets.len() {
                for i in 0..j {
                    prop_assert!(x.fresh_vertices(i).is_disjoint(x.fresh_vertices(j)));
                }
            }
        }
    }
}
