use crate::error::{invalid, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// The minimizer behind `σ(T) = min |X| + e(T - X)` over independent `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaWitness {
    pub value: usize,
    pub set: VertexSet,
}

/// Exact `σ(T)`: the minimum of `|X|` plus the number of edges missing `X`,
/// over independent sets `X` (the empty set included).
///
/// Works for any graph, not only forests. Edgeless graphs are rejected.
pub fn sigma(g: &Graph) -> Result<SigmaWitness> {
    if g.edge_count() == 0 {
        return Err(invalid("sigma needs at least one edge"));
    }
    let mut order: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut search = Search { g, order, best: SigmaWitness { value: g.edge_count(), set: VertexSet::EMPTY } };
    search.run(0, VertexSet::EMPTY, VertexSet::EMPTY, 0);
    Ok(search.best)
}

struct Search<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    best: SigmaWitness,
}

impl Search<'_> {
    /// `chosen` is X so far, `skipped` the vertices decided outside X, and
    /// `cost` counts `|X|` plus edges with both ends skipped.
    fn run(&mut self, depth: usize, chosen: VertexSet, skipped: VertexSet, cost: usize) {
        if cost + self.lower_bound(depth, chosen) >= self.best.value {
            return;
        }
        let Some(&v) = self.order.get(depth) else {
            self.best = SigmaWitness { value: cost, set: chosen };
            return;
        };
        let nb = self.g.neighbors(v);
        if nb.is_disjoint(chosen) {
            self.run(depth + 1, chosen.with(v), skipped, cost + 1);
        }
        let newly_dead = (nb & skipped).len();
        self.run(depth + 1, chosen, skipped.with(v), cost + newly_dead);
    }

    /// Edges with an undecided endpoint and no endpoint in X each cost at
    /// least one; a family of them with distinct undecided endpoints costs at
    /// least its size.
    fn lower_bound(&self, depth: usize, chosen: VertexSet) -> usize {
        let undecided: VertexSet = self.order[depth..].iter().copied().collect();
        let mut used = VertexSet::EMPTY;
        let mut count = 0;
        for u in undecided {
            if used.contains(u) || !self.g.neighbors(u).is_disjoint(chosen) {
                continue;
            }
            // Prefer a partner that is already decided, leaving undecided vertices free.
            let nb = self.g.neighbors(u) - chosen;
            let decided = nb - undecided;
            if !decided.is_empty() {
                used.insert(u);
                count += 1;
            } else if let Some(w) = (nb - used).iter().find(|&w| w != u) {
                used.insert(u);
                used.insert(w);
                count += 1;
            }
        }
        count
    }
}
