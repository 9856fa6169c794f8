//! Subhypergraph containment and the constructive embedding procedures.

mod contains;
mod kernel;
mod peel;

use std::fmt;

pub use contains::{contains, host_twin_classes};
pub use kernel::{
    classify_centers, embed_expansion_via_kernel, embed_expansion_with_threshold, CenterPartition, KernelEmbedOutcome,
    KernelEmbedding,
};
pub use peel::{embed_tight_forest, embed_tight_forest_traced, peel_shadow, EmbedRoute, PeelStep, ShadowPeel};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// An injective vertex map from a pattern into a host, with the host edge
/// hit by each pattern edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Embedding {
    /// `vertex_map[i]` is the image of pattern vertex `i`.
    pub vertex_map: Vec<usize>,
    /// `edge_map[j]` is the index in `host.edges()` of the image of pattern edge `j`.
    pub edge_map: Vec<usize>,
}

impl Embedding {
    pub fn image(&self, set: VertexSet) -> VertexSet {
        set.iter().map(|v| self.vertex_map[v]).collect()
    }

    /// Checks injectivity and that every pattern edge lands on its host edge.
    pub fn validate(&self, host: &Hypergraph, pattern: &Hypergraph) -> Result<()> {
        let fail = |msg: String| Err(Error::Verification(msg));
        if host.k() != pattern.k() {
            return fail(format!("uniformity {} vs {}", host.k(), pattern.k()));
        }
        if self.vertex_map.len() != pattern.n() {
            return fail(format!("{} vertex images for {} pattern vertices", self.vertex_map.len(), pattern.n()));
        }
        let mut seen = VertexSet::EMPTY;
        for (i, &x) in self.vertex_map.iter().enumerate() {
            if x >= host.n() {
                return fail(format!("vertex {i} maps to {x}, outside the host"));
            }
            if seen.contains(x) {
                return fail(format!("vertex image {x} used twice"));
            }
            seen.insert(x);
        }
        if self.edge_map.len() != pattern.len() {
            return fail(format!("{} edge images for {} pattern edges", self.edge_map.len(), pattern.len()));
        }
        let mut hit = vec![false; host.len()];
        for (j, (&e, &f)) in pattern.edges().iter().zip(&self.edge_map).enumerate() {
            if f >= host.len() {
                return fail(format!("edge {j} maps to missing host edge {f}"));
            }
            if std::mem::replace(&mut hit[f], true) {
                return fail(format!("host edge {f} used twice"));
            }
            if self.image(e) != host.edges()[f] {
                return fail(format!(
                    "edge {{{e}}} maps to {{{}}}, not to host edge {{{}}}",
                    self.image(e),
                    host.edges()[f]
                ));
            }
        }
        Ok(())
    }

    /// Text form: `embedding <p> <q>`, then `p` lines `vertex image` and `q`
    /// lines `pattern-edge host-edge`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "embedding {} {}", self.vertex_map.len(), self.edge_map.len())?;
        for (i, x) in self.vertex_map.iter().enumerate() {
            writeln!(f, "{i} {x}")?;
        }
        for (j, e) in self.edge_map.iter().enumerate() {
            writeln!(f, "{j} {e}")?;
        }
        Ok(())
    }
}

/// Builds the edge map for a complete vertex map, or `None` if some pattern
/// edge has no image in the host.
pub(crate) fn edge_map_for(host: &Hypergraph, pattern: &Hypergraph, vertex_map: &[usize]) -> Option<Vec<usize>> {
    pattern.edges().iter().map(|&e| host.edge_index(e.iter().map(|v| vertex_map[v]).collect())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validate_rejects_bad_maps() {
        let host = Hypergraph::from_lists(2, 4, [[0, 1], [1, 2], [2, 3]]).unwrap();
        let pattern = Hypergraph::from_lists(2, 3, [[0, 1], [1, 2]]).unwrap();
        let good = Embedding { vertex_map: vec![3, 2, 1], edge_map: vec![2, 1] };
        good.validate(&host, &pattern).unwrap();
        let clash = Embedding { vertex_map: vec![3, 2, 3], edge_map: vec![2, 2] };
        assert!(clash.validate(&host, &pattern).is_err());
        let wrong_edge = Embedding { vertex_map: vec![3, 2, 1], edge_map: vec![1, 2] };
        assert!(wrong_edge.validate(&host, &pattern).is_err());
        let missing = Embedding { vertex_map: vec![0, 2, 1], edge_map: vec![0, 1] };
        assert!(missing.validate(&host, &pattern).is_err());
    }

    #[test]
    fn text_form() {
        let e = Embedding { vertex_map: vec![3, 2, 1], edge_map: vec![2, 1] };
        assert_eq!(e.to_text(), "embedding 3 2\n0 3\n1 2\n2 1\n0 2\n1 1\n");
    }
}
