//! Matchings, delta-systems, transversals and 1-cross-cuts.
//!
//! All three optimisation problems are solved exactly by branch and bound.
//! Witnesses are deterministic: the first optimum met in the canonical
//! branching order (edges and vertices ascending).

use crate::error::{invalid, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// A family of pairwise disjoint edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<VertexSet>,
}

impl Matching {
    pub fn new(mut edges: Vec<VertexSet>) -> Result<Self> {
        edges.sort_unstable();
        let mut seen = VertexSet::EMPTY;
        for e in &edges {
            if !seen.is_disjoint(*e) {
                return Err(invalid(format!("edge {{{e}}} meets an earlier matching edge")));
            }
            seen = seen | *e;
        }
        Ok(Matching { edges })
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
}

/// Maximum set of pairwise disjoint edges.
pub fn maximum_matching(f: &Hypergraph) -> Matching {
    let mut search = MatchingSearch { edges: f.edges(), k: f.k(), current: Vec::new(), best: Vec::new() };
    search.run(VertexSet::EMPTY);
    Matching { edges: search.best }
}

/// `ν(F)`, the maximum number of pairwise disjoint edges.
pub fn matching_number(f: &Hypergraph) -> usize {
    maximum_matching(f).len()
}

struct MatchingSearch<'a> {
    edges: &'a [VertexSet],
    k: usize,
    current: Vec<VertexSet>,
    best: Vec<VertexSet>,
}

impl MatchingSearch<'_> {
    /// `blocked` holds vertices that are matched or deliberately left unmatched.
    fn run(&mut self, blocked: VertexSet) {
        let available: Vec<VertexSet> = self.edges.iter().copied().filter(|e| e.is_disjoint(blocked)).collect();
        if available.is_empty() {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return;
        }
        let span = available.iter().fold(VertexSet::EMPTY, |acc, &e| acc | e);
        let bound = available.len().min(span.len() / self.k);
        if self.current.len() + bound <= self.best.len() {
            return;
        }
        let pivot = span.min().expect("nonempty span");
        for &e in available.iter().filter(|e| e.contains(pivot)) {
            self.current.push(e);
            self.run(blocked | e);
            self.current.pop();
        }
        self.run(blocked.with(pivot));
    }
}

/// A Δ-system: members pairwise intersecting exactly in `kernel`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaSystem {
    pub kernel: VertexSet,
    pub members: Vec<VertexSet>,
}

impl DeltaSystem {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// The petals `member \ kernel`, in member order.
    pub fn petals(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.members.iter().map(move |m| *m - self.kernel)
    }

    /// Checks that every member strictly contains the kernel and that any two
    /// members meet exactly in it.
    pub fn is_valid(&self) -> bool {
        self.members.iter().all(|m| self.kernel.is_subset(*m) && *m != self.kernel)
            && self
                .members
                .iter()
                .enumerate()
                .all(|(i, a)| self.members[i + 1..].iter().all(|b| (*a & *b) == self.kernel))
    }
}

/// Largest Δ-system of `f` with kernel `w`, found as a maximum matching of
/// the link of `w`. Requires `|w| < k`.
pub fn maximum_delta_system(f: &Hypergraph, w: VertexSet) -> Result<DeltaSystem> {
    let link = f.link(w)?;
    let matching = maximum_matching(&link);
    Ok(DeltaSystem { kernel: w, members: matching.edges().iter().map(|p| *p | w).collect() })
}

/// `deg*(W)`: the size of the largest Δ-system with kernel `w`.
pub fn kernel_degree(f: &Hypergraph, w: VertexSet) -> Result<usize> {
    Ok(maximum_delta_system(f, w)?.len())
}

/// Minimum vertex set meeting every edge.
pub fn minimum_transversal(f: &Hypergraph) -> VertexSet {
    let mut best = f.support();
    // A transversal never needs more than one vertex per edge.
    if f.len() < best.len() {
        best = f.edges().iter().map(|&e| e.min().expect("edges are nonempty")).collect();
    }
    transversal_search(f.edges(), VertexSet::EMPTY, &mut best);
    best
}

/// `τ(F)`.
pub fn transversal_number(f: &Hypergraph) -> usize {
    minimum_transversal(f).len()
}

fn transversal_search(edges: &[VertexSet], chosen: VertexSet, best: &mut VertexSet) {
    let mut uncovered = edges.iter().copied().filter(|e| e.is_disjoint(chosen));
    let Some(pivot) = uncovered.next() else {
        if chosen.len() < best.len() {
            *best = chosen;
        }
        return;
    };
    // Pairwise disjoint uncovered edges each need their own vertex.
    let mut packed = pivot;
    let mut lower = 1;
    for e in uncovered {
        if e.is_disjoint(packed) {
            packed = packed | e;
            lower += 1;
        }
    }
    if chosen.len() + lower >= best.len() {
        return;
    }
    for v in pivot.iter() {
        transversal_search(edges, chosen.with(v), best);
    }
}

/// Minimum 1-cross-cut: a vertex set meeting every edge in exactly one
/// vertex. `None` when no such set exists.
pub fn minimum_one_cross_cut(f: &Hypergraph) -> Option<VertexSet> {
    let mut search = CrossCutSearch { edges: f.edges(), incidence: f.incidence(), best: None };
    search.run(VertexSet::EMPTY, VertexSet::EMPTY);
    search.best
}

/// `τ₁(F)`, or `None` for "no 1-cross-cut exists".
pub fn one_cross_cut_number(f: &Hypergraph) -> Option<usize> {
    minimum_one_cross_cut(f).map(VertexSet::len)
}

struct CrossCutSearch<'a> {
    edges: &'a [VertexSet],
    incidence: Vec<Vec<usize>>,
    best: Option<VertexSet>,
}

impl CrossCutSearch<'_> {
    /// `chosen` is the partial cut; `banned` are vertices that may not join it
    /// because an edge through them is already hit.
    fn run(&mut self, chosen: VertexSet, banned: VertexSet) {
        let mut pivot: Option<(VertexSet, usize)> = None;
        let mut packed = VertexSet::EMPTY;
        let mut lower = 0;
        for &e in self.edges {
            if !e.is_disjoint(chosen) {
                continue;
            }
            let options = (e - banned).len();
            if options == 0 {
                return;
            }
            if pivot.is_none_or(|(_, o)| options < o) {
                pivot = Some((e, options));
            }
            if e.is_disjoint(packed) {
                packed = packed | e;
                lower += 1;
            }
        }
        let Some((edge, _)) = pivot else {
            if self.best.is_none_or(|b| chosen.len() < b.len()) {
                self.best = Some(chosen);
            }
            return;
        };
        if self.best.is_some_and(|b| chosen.len() + lower >= b.len()) {
            return;
        }
        for x in (edge - banned).iter() {
            let mut next_banned = banned;
            for &i in &self.incidence[x] {
                next_banned = next_banned | self.edges[i].without(x);
            }
            let next_chosen = chosen.with(x);
            if !next_banned.is_disjoint(next_chosen) {
                continue;
            }
            self.run(next_chosen, next_banned);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Hypergraph;
    use proptest::prelude::*;

    fn hg(k: usize, n: usize, lists: &[&[usize]]) -> Hypergraph {
        Hypergraph::from_lists(k, n, lists.iter().copied()).unwrap()
    }

    fn all_subsets(n: usize) -> impl Iterator<Item = VertexSet> {
        (0u128..1 << n).map(VertexSet::from_bits)
    }

    fn brute_matching(f: &Hypergraph) -> usize {
        let m = f.len();
        (0u32..1 << m)
            .filter(|mask| {
                let chosen: Vec<VertexSet> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| f.edges()[i]).collect();
                chosen.iter().enumerate().all(|(i, a)| chosen[i + 1..].iter().all(|b| a.is_disjoint(*b)))
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    fn brute_transversal(f: &Hypergraph) -> usize {
        all_subsets(f.n()).filter(|s| f.edges().iter().all(|e| !e.is_disjoint(*s))).map(VertexSet::len).min().unwrap()
    }

    fn brute_cross_cut(f: &Hypergraph) -> Option<usize> {
        all_subsets(f.n()).filter(|s| f.edges().iter().all(|e| (*e & *s).len() == 1)).map(VertexSet::len).min()
    }

    fn arb_hypergraph() -> impl Strategy<Value = Hypergraph> {
        (1usize..=3, 3usize..=7).prop_flat_map(|(k, n)| {
            let all = VertexSet::range(n).subsets_of_size(k);
            let len = all.len();
            proptest::sample::subsequence(all, 0..=len.min(10))
                .prop_map(move |edges| Hypergraph::new(k, n, edges).unwrap())
        })
    }

    #[test]
    fn matching_examples() {
        let m2 = hg(3, 6, &[&[0, 1, 2], &[3, 4, 5]]);
        assert_eq!(matching_number(&m2), 2);
        assert_eq!(matching_number(&Hypergraph::complete(3, 7).unwrap()), 2);
        assert_eq!(matching_number(&Hypergraph::empty(3, 7).unwrap()), 0);
        let witness = maximum_matching(&Hypergraph::complete(3, 7).unwrap());
        assert!(Matching::new(witness.edges().to_vec()).is_ok());
    }

    #[test]
    fn matching_rejects_overlap() {
        assert!(Matching::new(vec![VertexSet::from([0, 1]), VertexSet::from([1, 2])]).is_err());
    }

    #[test]
    fn kernel_degree_examples() {
        let sunflower = hg(3, 5, &[&[0, 1, 2], &[0, 1, 3], &[0, 1, 4]]);
        assert_eq!(kernel_degree(&sunflower, VertexSet::from([0, 1])).unwrap(), 3);

        let k7 = Hypergraph::complete(3, 7).unwrap();
        assert_eq!(kernel_degree(&k7, VertexSet::EMPTY).unwrap(), matching_number(&k7));

        let through_zero = Hypergraph::complete(3, 6).unwrap().filter_edges(|_, e| e.contains(0));
        assert_eq!(kernel_degree(&through_zero, VertexSet::from([0])).unwrap(), 2);

        assert!(kernel_degree(&sunflower, VertexSet::from([0, 1, 2])).is_err());
    }

    #[test]
    fn delta_system_witness_validates() {
        let f = Hypergraph::complete(3, 7).unwrap();
        let ds = maximum_delta_system(&f, VertexSet::from([0])).unwrap();
        assert_eq!(ds.len(), 3);
        assert!(ds.is_valid());
        assert!(ds.members.iter().all(|m| f.contains_edge(*m)));
    }

    #[test]
    fn transversal_examples() {
        let m2 = hg(3, 6, &[&[0, 1, 2], &[3, 4, 5]]);
        assert_eq!(transversal_number(&m2), 2);
        assert_eq!(transversal_number(&Hypergraph::empty(3, 3).unwrap()), 0);
        let t = minimum_transversal(&Hypergraph::complete(2, 5).unwrap());
        assert_eq!(t.len(), 4);
    }

    #[test]
    fn cross_cut_examples() {
        let star = hg(3, 5, &[&[0, 1, 2], &[0, 3, 4]]);
        assert_eq!(one_cross_cut_number(&star), Some(1));
        assert_eq!(minimum_one_cross_cut(&star), Some(VertexSet::from([0])));
        let m2 = hg(4, 8, &[&[0, 1, 2, 3], &[4, 5, 6, 7]]);
        assert_eq!(one_cross_cut_number(&m2), Some(2));
        // {0} meets both edges exactly once.
        let book = hg(3, 4, &[&[0, 1, 2], &[0, 1, 3]]);
        assert_eq!(one_cross_cut_number(&book), Some(1));
        // The triangle has no 1-cross-cut: any vertex hits two edges, and
        // picking two vertices double-hits the edge between them.
        let triangle = hg(2, 3, &[&[0, 1], &[1, 2], &[0, 2]]);
        assert_eq!(one_cross_cut_number(&triangle), None);
        assert_eq!(brute_cross_cut(&triangle), None);
        assert_eq!(one_cross_cut_number(&Hypergraph::empty(3, 3).unwrap()), Some(0));
    }

    proptest! {
        #[test]
        fn agrees_with_brute_force(f in arb_hypergraph()) {
            prop_assert_eq!(matching_number(&f), brute_matching(&f));
            prop_assert_eq!(transversal_number(&f), brute_transversal(&f));
            prop_assert_eq!(one_cross_cut_number(&f), brute_cross_cut(&f));
        }

        #[test]
        fn covering_inequalities(f in arb_hypergraph()) {
            let nu = matching_number(&f);
            let tau = transversal_number(&f);
            prop_assert!(nu <= tau && tau <= f.k() * nu);
            if let Some(t1) = one_cross_cut_number(&f) {
                prop_assert!(tau <= t1);
            }
            prop_assert_eq!(kernel_degree(&f, VertexSet::EMPTY).unwrap(), nu);
        }

        #[test]
        fn kernel_degree_at_most_degree(f in arb_hypergraph(), w in proptest::collection::btree_set(0usize..7, 0..3)) {
            let w: VertexSet = w.iter().collect();
            if w.len() < f.k() {
                let ds = maximum_delta_system(&f, w).unwrap();
                prop_assert!(ds.is_valid());
                prop_assert!(ds.len() <= f.degree(w));
                prop_assert_eq!(!ds.is_empty(), f.degree(w) >= 1);
            }
        }

        #[test]
        fn edge_order_independent(f in arb_hypergraph(), seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut edges = f.edges().to_vec();
            edges.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            let g = Hypergraph::new(f.k(), f.n(), edges).unwrap();
            prop_assert_eq!(&g, &f);
            prop_assert_eq!(maximum_matching(&g), maximum_matching(&f));
            prop_assert_eq!(minimum_transversal(&g), minimum_transversal(&f));
            prop_assert_eq!(minimum_one_cross_cut(&g), minimum_one_cross_cut(&f));
        }
    }
}
