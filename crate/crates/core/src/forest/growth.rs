use std::fmt;

use crate::error::{invalid, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// An ordered edge sequence `E_1, ..., E_q` meant to grow a generalized
/// k-forest.
///
/// The defining set of `E_i` is `A_i = E_i ∩ (E_1 ∪ ... ∪ E_{i-1})`: the new
/// part `E_i \ A_i` is fresh by definition, so the sets are determined by the
/// order. Validity (each `A_i` lies inside a single earlier edge and is not
/// all of `E_i`) is checked by [`GrowthSequence::is_valid`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GrowthSequence {
    k: usize,
    edges: Vec<VertexSet>,
}

impl GrowthSequence {
    pub fn new(k: usize, edges: Vec<VertexSet>) -> Result<Self> {
        if k == 0 {
            return Err(invalid("uniformity must be at least 1"));
        }
        if let Some(e) = edges.iter().find(|e| e.len() != k) {
            return Err(invalid(format!("edge {{{e}}} does not have {k} vertices")));
        }
        Ok(GrowthSequence { k, edges })
    }

    pub fn from_lists<E: AsRef<[usize]>>(k: usize, lists: impl IntoIterator<Item = E>) -> Result<Self> {
        let edges = lists.into_iter().map(|l| l.as_ref().iter().collect()).collect();
        Self::new(k, edges)
    }

    /// A single edge on `0..k`.
    pub fn single_edge(k: usize) -> Self {
        GrowthSequence { k, edges: vec![VertexSet::range(k)] }
    }

    /// Appends `defining ∪ B` where `B` takes the next unused vertex ids.
    pub fn push_with_fresh(&mut self, defining: VertexSet) -> Result<()> {
        if defining.len() >= self.k {
            return Err(invalid("defining set must have fewer than k vertices"));
        }
        if !defining.is_subset(self.vertices()) && !self.edges.is_empty() {
            return Err(invalid("defining set must use existing vertices"));
        }
        let next = self.vertices().max().map_or(0, |m| m + 1);
        let fresh = VertexSet::range(next + self.k - defining.len()) - VertexSet::range(next);
        self.edges.push(defining | fresh);
        Ok(())
    }

    /// The tight k-path with `q` edges: `E_i = {i, ..., i + k - 1}`.
    pub fn tight_path(k: usize, q: usize) -> Self {
        let edges = (0..q).map(|i| VertexSet::range(i + k) - VertexSet::range(i)).collect();
        GrowthSequence { k, edges }
    }

    pub fn k(&self) -> usize {
        self.k
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

    pub fn vertices(&self) -> VertexSet {
        self.edges.iter().fold(VertexSet::EMPTY, |acc, &e| acc | e)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices().len()
    }

    /// `A_i` for `i >= 1` (0-based); `None` for the first edge.
    pub fn defining_set(&self, i: usize) -> Option<VertexSet> {
        if i == 0 || i >= self.edges.len() {
            return None;
        }
        let before = self.edges[..i].iter().fold(VertexSet::EMPTY, |acc, &e| acc | e);
        Some(self.edges[i] & before)
    }

    /// Defining sets of edges `1..q` (0-based).
    pub fn defining_sets(&self) -> Vec<VertexSet> {
        let mut before = self.edges.first().copied().unwrap_or_default();
        let mut out = Vec::with_capacity(self.edges.len().saturating_sub(1));
        for &e in self.edges.iter().skip(1) {
            out.push(e & before);
            before = before | e;
        }
        out
    }

    /// Index of the first earlier edge containing the defining set of edge `i`.
    pub fn parent(&self, i: usize) -> Option<usize> {
        let a = self.defining_set(i)?;
        self.edges[..i].iter().position(|e| a.is_subset(*e))
    }

    /// Whether every step obeys the inductive k-forest rule.
    pub fn is_valid(&self) -> bool {
        if self.edges.is_empty() || self.edges.iter().any(|e| e.len() != self.k) {
            return false;
        }
        (1..self.edges.len()).all(|i| {
            let a = self.defining_set(i).unwrap();
            a.len() < self.k && self.parent(i).is_some()
        })
    }

    fn require_valid(&self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(invalid("edge sequence is not a valid k-forest growth"))
        }
    }

    /// Every defining set is empty or a singleton.
    pub fn is_linear(&self) -> Result<bool> {
        self.require_valid()?;
        Ok(self.defining_sets().iter().all(|a| a.len() <= 1))
    }

    /// Every defining set is empty or has `k - 1` vertices.
    pub fn is_tight(&self) -> Result<bool> {
        self.require_valid()?;
        Ok(self.defining_sets().iter().all(|a| a.is_empty() || a.len() == self.k - 1))
    }

    /// Tight and connected: every defining set has exactly `k - 1` vertices.
    pub fn is_tight_tree(&self) -> Result<bool> {
        self.require_valid()?;
        Ok(self.defining_sets().iter().all(|a| a.len() == self.k - 1))
    }

    /// A tight k-tree on the same vertex set that contains every edge of `self`.
    ///
    /// Whenever some `A_{u+1}` is smaller than `k - 1`, with `A_{u+1} ⊂ E_i`,
    /// the set `E = (E_i \ {x}) ∪ {y}` is inserted just before `E_{u+1}`, where
    /// `x` is the smallest vertex of `E_i \ A_{u+1}` and `y` the smallest of
    /// `E_{u+1} \ A_{u+1}`. This grows the defining set of `E_{u+1}` by `y`, and
    /// `E` itself has defining set `E_i \ {x}` of size `k - 1`.
    pub fn tight_completion(&self) -> Result<GrowthSequence> {
        self.require_valid()?;
        let mut edges = self.edges.clone();
        let mut i = 1;
        while i < edges.len() {
            let before = edges[..i].iter().fold(VertexSet::EMPTY, |acc, &e| acc | e);
            let a = edges[i] & before;
            if a.len() == self.k - 1 {
                i += 1;
                continue;
            }
            let host = edges[..i].iter().copied().find(|e| a.is_subset(*e)).expect("valid growth has a parent");
            let x = (host - a).min().expect("host is larger than the defining set");
            let y = (edges[i] - a).min().expect("edge is larger than its defining set");
            edges.insert(i, host.without(x).with(y));
            // Re-examine the same edge, now at position i + 1.
            i += 1;
        }
        let out = GrowthSequence { k: self.k, edges };
        debug_assert!(out.is_valid());
        Ok(out)
    }

    /// The edges as a hypergraph on `0..=max vertex`.
    pub fn to_hypergraph(&self) -> Result<Hypergraph> {
        let n = self.vertices().max().map_or(0, |m| m + 1);
        Hypergraph::new(self.k, n, self.edges.iter().copied())
    }

    /// Text form: `growth <k> <n> <q>` then the edges in growth order.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for GrowthSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.vertices().max().map_or(0, |m| m + 1);
        writeln!(f, "growth {} {} {}", self.k, n, self.edges.len())?;
        for e in &self.edges {
            writeln!(f, "{e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GrowthSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GrowthSequence(k={}, ", self.k)?;
        f.debug_list().entries(self.edges.iter()).finish()?;
        write!(f, ")")
    }
}
