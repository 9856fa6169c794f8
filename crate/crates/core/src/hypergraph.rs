//! The k-uniform hypergraph type and its degree and link operations.

use std::fmt;

use crate::error::{invalid, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A k-uniform hypergraph on the vertex set `0..n`.
///
/// Edges are kept sorted in lexicographic order and deduplicated on
/// construction, so two hypergraphs built from the same edges in any order
/// compare equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    k: usize,
    n: usize,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    /// Builds a hypergraph, rejecting edges of the wrong size, out-of-range
    /// vertices and duplicate edges.
    pub fn new(k: usize, n: usize, edges: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        if k == 0 {
            return Err(invalid("uniformity must be at least 1"));
        }
        if n > MAX_VERTICES {
            return Err(invalid(format!("at most {MAX_VERTICES} vertices are supported, got {n}")));
        }
        let mut edges: Vec<VertexSet> = edges.into_iter().collect();
        for e in &edges {
            if e.len() != k {
                return Err(invalid(format!("edge {{{e}}} has {} vertices, expected {k}", e.len())));
            }
            if (*e).max().is_some_and(|m| m >= n) {
                return Err(invalid(format!("edge {{{e}}} uses a vertex outside 0..{n}")));
            }
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(invalid(format!("duplicate edge {{{}}}", w[0])));
        }
        Ok(Hypergraph { k, n, edges })
    }

    /// Builds from vertex lists; a repeated vertex inside one list is an error.
    pub fn from_lists<E: AsRef<[usize]>>(k: usize, n: usize, lists: impl IntoIterator<Item = E>) -> Result<Self> {
        let mut edges = Vec::new();
        for list in lists {
            let list = list.as_ref();
            if let Some(&v) = list.iter().find(|&&v| v >= MAX_VERTICES) {
                return Err(invalid(format!("vertex {v} out of range")));
            }
            let e: VertexSet = list.iter().collect();
            if e.len() != list.len() {
                return Err(invalid(format!("edge {list:?} repeats a vertex")));
            }
            edges.push(e);
        }
        Self::new(k, n, edges)
    }

    pub fn empty(k: usize, n: usize) -> Result<Self> {
        Self::new(k, n, [])
    }

    /// All k-subsets of `0..n`.
    pub fn complete(k: usize, n: usize) -> Result<Self> {
        Self::new(k, n, VertexSet::range(n.min(MAX_VERTICES)).subsets_of_size(k))
    }

    /// Same edges on a larger vertex universe.
    pub fn with_vertex_count(&self, n: usize) -> Result<Self> {
        Self::new(self.k, n, self.edges.iter().copied())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edge_index(&self, e: VertexSet) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    pub fn contains_edge(&self, e: VertexSet) -> bool {
        self.edge_index(e).is_some()
    }

    /// Vertices covered by at least one edge.
    pub fn support(&self) -> VertexSet {
        self.edges.iter().fold(VertexSet::EMPTY, |acc, &e| acc | e)
    }

    pub fn vertex_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            for v in e.iter() {
                deg[v] += 1;
            }
        }
        deg
    }

    /// For every vertex, the indices of the edges containing it (ascending).
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for v in e.iter() {
                inc[v].push(i);
            }
        }
        inc
    }

    /// Number of edges containing `w`. The empty set has degree `|F|`.
    pub fn degree(&self, w: VertexSet) -> usize {
        self.edges.iter().filter(|e| w.is_subset(**e)).count()
    }

    /// The edges containing `w`.
    pub fn star_of(&self, w: VertexSet) -> impl Iterator<Item = VertexSet> + '_ {
        self.edges.iter().copied().filter(move |e| w.is_subset(*e))
    }

    /// The `(k - |w|)`-uniform family `{E \ w : w ⊂ E}` on the same vertex universe.
    pub fn link(&self, w: VertexSet) -> Result<Hypergraph> {
        if w.len() >= self.k {
            return Err(invalid(format!("link needs |W| < k, got |W| = {} with k = {}", w.len(), self.k)));
        }
        Hypergraph::new(self.k - w.len(), self.n, self.star_of(w).map(|e| e - w))
    }

    /// Subfamily of the edges whose index satisfies `keep`.
    pub fn filter_edges(&self, mut keep: impl FnMut(usize, VertexSet) -> bool) -> Hypergraph {
        let edges = self.edges.iter().enumerate().filter(|(i, e)| keep(*i, **e)).map(|(_, e)| *e).collect();
        Hypergraph { k: self.k, n: self.n, edges }
    }

    /// True iff every pair of edges shares at most one vertex.
    pub fn is_linear(&self) -> bool {
        self.edges.iter().enumerate().all(|(i, a)| self.edges[i + 1..].iter().all(|b| (*a & *b).len() <= 1))
    }

    /// Text serialization: `hg <k> <n> <m>` followed by one edge per line.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "hg {} {} {}", self.k, self.n, self.edges.len())?;
        for e in &self.edges {
            writeln!(f, "{e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph(k={}, n={}, ", self.k, self.n)?;
        f.debug_list().entries(self.edges.iter()).finish()?;
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(k: usize, n: usize, lists: &[&[usize]]) -> Hypergraph {
        Hypergraph::from_lists(k, n, lists.iter().copied()).unwrap()
    }

    #[test]
    fn rejects_malformed_edges() {
        assert!(Hypergraph::from_lists(3, 4, [[0, 1]].iter()).is_err());
        assert!(Hypergraph::from_lists(2, 3, [[0, 3]].iter()).is_err());
        assert!(Hypergraph::from_lists(2, 3, [[0, 1], [1, 0]].iter()).is_err());
        assert!(Hypergraph::from_lists(3, 4, [[0, 0, 1]].iter()).is_err());
        assert!(Hypergraph::empty(0, 3).is_err());
    }

    #[test]
    fn edge_order_is_canonical() {
        let a = hg(2, 4, &[&[2, 3], &[0, 1], &[1, 2]]);
        let b = hg(2, 4, &[&[1, 2], &[2, 3], &[0, 1]]);
        assert_eq!(a, b);
        assert_eq!(a.edges()[0], VertexSet::from([0, 1]));
    }

    #[test]
    fn degree_examples() {
        let k4 = Hypergraph::complete(3, 4).unwrap();
        assert_eq!(k4.len(), 4);
        assert_eq!(k4.degree(VertexSet::from([0, 1])), 2);
        assert_eq!(k4.degree(VertexSet::EMPTY), 4);
        let single = hg(3, 4, &[&[0, 1, 2]]);
        assert_eq!(single.degree(VertexSet::from([3])), 0);
        // larger than k: no edge can contain it
        assert_eq!(k4.degree(VertexSet::from([0, 1, 2, 3])), 0);
    }

    #[test]
    fn link_examples() {
        let f = hg(3, 4, &[&[0, 1, 2], &[0, 1, 3]]);
        assert_eq!(f.link(VertexSet::from([0, 1])).unwrap(), hg(1, 4, &[&[2], &[3]]));

        let single = hg(3, 6, &[&[0, 1, 2]]);
        assert!(single.link(VertexSet::from([5])).unwrap().is_empty());

        let k5 = Hypergraph::complete(3, 5).unwrap();
        let link = k5.link(VertexSet::from([0])).unwrap();
        let expected = Hypergraph::new(2, 5, VertexSet::from([1, 2, 3, 4]).subsets_of_size(2)).unwrap();
        assert_eq!(link, expected);

        assert!(k5.link(VertexSet::from([0, 1, 2])).is_err());
    }

    #[test]
    fn text_form() {
        let f = hg(3, 5, &[&[2, 3, 4], &[0, 1, 2]]);
        assert_eq!(f.to_text(), "hg 3 5 2\n0 1 2\n2 3 4\n");
    }
}
