//! Simple graphs and forests: the 2-uniform layer.

mod enumerate;
mod peel;

use std::fmt;

pub use enumerate::{free_trees, non_isomorphic_forests};
pub use peel::{embed_tree_greedy, forest_turan_upper, min_degree_peel, min_degree_peel_by, MinDegreeCore};

use crate::error::{invalid, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A loopless simple graph on `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if u == v {
                return Err(invalid(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(invalid(format!("edge {u} {v} leaves 0..{n}")));
            }
            if g.adj[u].contains(v) {
                return Err(invalid(format!("duplicate edge {u} {v}")));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(invalid(format!("at most {MAX_VERTICES} vertices are supported, got {n}")));
        }
        Ok(Graph { n, adj: vec![VertexSet::EMPTY; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    /// Path with `edges` edges on `edges + 1` vertices.
    pub fn path(edges: usize) -> Self {
        Graph::new(edges + 1, (0..edges).map(|i| (i, i + 1))).expect("valid path")
    }

    /// Star `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Self {
        Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("valid star")
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(invalid("a cycle needs at least 3 vertices"));
        }
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn from_hypergraph(h: &Hypergraph) -> Result<Self> {
        if h.k() != 2 {
            return Err(invalid(format!("expected a 2-uniform hypergraph, got k = {}", h.k())));
        }
        Graph::new(
            h.n(),
            h.edges().iter().map(|e| {
                let mut it = e.iter();
                (it.next().unwrap(), it.next().unwrap())
            }),
        )
    }

    pub fn to_hypergraph(&self) -> Hypergraph {
        Hypergraph::new(2, self.n, self.edges().map(|(u, v)| VertexSet::from([u, v]))).expect("graph edges are 2-sets")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Vertices with at least one neighbour.
    pub fn support(&self) -> VertexSet {
        (0..self.n).filter(|&v| !self.adj[v].is_empty()).collect()
    }

    /// Keeps only the edges inside `keep`; the vertex universe is unchanged.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let adj = (0..self.n).map(|v| if keep.contains(v) { self.adj[v] & keep } else { VertexSet::EMPTY }).collect();
        Graph { n: self.n, adj }
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    /// Number of edges with no endpoint in `s`.
    pub fn edges_avoiding(&self, s: VertexSet) -> usize {
        self.edges().filter(|&(u, v)| !s.contains(u) && !s.contains(v)).count()
    }

    /// Connected components, each as a vertex set, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let next = frontier.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.adj[v]) - comp;
                comp = comp | next;
                frontier = next;
            }
            seen = seen | comp;
            out.push(comp);
        }
        out
    }

    /// All independent sets, including the empty set, in increasing order of
    /// their bitset value.
    pub fn independent_sets(&self) -> IndependentSets<'_> {
        IndependentSets { graph: self, next: Some(0) }
    }

    /// Text serialization: `graph <n> <m>` then `u v` lines with `u < v`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "graph {} {}", self.n, self.edge_count())?;
        for (u, v) in self.edges() {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, ", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// True iff `g` has no cycle.
pub fn is_forest(g: &Graph) -> bool {
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (u, v) in g.edges() {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru == rv {
            return false;
        }
        parent[ru] = rv;
    }
    true
}

/// A graph certified to be acyclic.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Forest(Graph);

impl Forest {
    pub fn new(g: Graph) -> Result<Self> {
        if !is_forest(&g) {
            return Err(invalid("graph contains a cycle"));
        }
        Ok(Forest(g))
    }

    pub fn graph(&self) -> &Graph {
        &self.0
    }

    pub fn into_graph(self) -> Graph {
        self.0
    }

    pub fn component_count(&self) -> usize {
        self.0.n() - self.0.edge_count()
    }

    pub fn is_tree(&self) -> bool {
        self.0.n() > 0 && self.component_count() == 1
    }
}

impl std::ops::Deref for Forest {
    type Target = Graph;
    fn deref(&self) -> &Graph {
        &self.0
    }
}

impl TryFrom<Graph> for Forest {
    type Error = crate::error::Error;
    fn try_from(g: Graph) -> Result<Self> {
        Forest::new(g)
    }
}

/// Iterator returned by [`Graph::independent_sets`].
pub struct IndependentSets<'a> {
    graph: &'a Graph,
    next: Option<u128>,
}

impl Iterator for IndependentSets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let n = self.graph.n();
        let mut mask = self.next?;
        loop {
            if n < 128 && mask >> n != 0 {
                self.next = None;
                return None;
            }
            let set = VertexSet::from_bits(mask);
            // Largest vertex u that has a neighbour above it inside the set.
            let conflict = set.iter().filter(|&u| !(self.graph.adj[u] & set).is_empty()).last();
            match conflict {
                None => {
                    self.next = mask.checked_add(1);
                    return Some(set);
                }
                Some(w) => {
                    // The conflicting pair (u, w) persists until the bits at or above
                    // the smaller endpoint change; jump straight past that block.
                    let u = (self.graph.adj[w] & set).min().unwrap().min(w);
                    let low = if u == 0 { 0 } else { (1u128 << u) - 1 };
                    match (mask | low).checked_add(1) {
                        Some(m) => mask = m,
                        None => {
                            self.next = None;
                            return None;
                        }
                    }
                }
            }
        }
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let len = pairs.len();
            proptest::sample::subsequence(pairs, 0..=len).prop_map(move |es| Graph::new(n, es).unwrap())
        })
    }

    #[test]
    fn forest_detection() {
        assert!(is_forest(&Graph::path(3)));
        assert!(!is_forest(&Graph::cycle(3).unwrap()));
        assert!(is_forest(&Graph::empty(0).unwrap()));
        assert!(is_forest(&Graph::empty(5).unwrap()));
        assert!(Forest::new(Graph::cycle(4).unwrap()).is_err());
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::new(3, [(1, 1)]).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn independent_set_examples() {
        let single = Graph::path(1);
        let sets: Vec<_> = single.independent_sets().map(VertexSet::to_vec).collect();
        assert_eq!(sets, vec![vec![], vec![0], vec![1]]);

        let p3 = Graph::path(2);
        let sets: Vec<_> = p3.independent_sets().map(VertexSet::to_vec).collect();
        assert_eq!(sets, vec![vec![], vec![0], vec![1], vec![2], vec![0, 2]]);

        let empty = Graph::empty(2).unwrap();
        assert_eq!(empty.independent_sets().count(), 4);
    }

    #[test]
    fn components_and_counts() {
        let g = Graph::new(5, [(0, 1), (3, 4)]).unwrap();
        let f = Forest::new(g.clone()).unwrap();
        assert_eq!(f.component_count(), 3);
        assert_eq!(g.components(), vec![VertexSet::from([0, 1]), VertexSet::from([2]), VertexSet::from([3, 4])]);
    }

    proptest! {
        #[test]
        fn independent_sets_match_subset_filter(g in arb_graph(10)) {
            let fast: Vec<VertexSet> = g.independent_sets().collect();
            let slow: Vec<VertexSet> = (0u128..1 << g.n()).map(VertexSet::from_bits).filter(|s| g.is_independent(*s)).collect();
            prop_assert_eq!(fast, slow);
        }

        #[test]
        fn forest_edge_bound(g in arb_graph(9)) {
            if let Ok(f) = Forest::new(g) {
                prop_assert!(f.edge_count() + f.components().len() <= f.n());
                prop_assert_eq!(f.component_count(), f.components().len());
            }
        }

        #[test]
        fn hypergraph_round_trip(g in arb_graph(8)) {
            prop_assert_eq!(Graph::from_hypergraph(&g.to_hypergraph()).unwrap(), g);
        }
    }
}
