use std::collections::BTreeMap;

use super::{contains, edge_map_for, Embedding};
use crate::error::{invalid, Result};
use crate::forest::GrowthSequence;
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// One removal: every edge through `set` was deleted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeelStep {
    pub set: VertexSet,
    pub removed: Vec<VertexSet>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShadowPeel {
    pub residue: Hypergraph,
    pub log: Vec<PeelStep>,
}

impl ShadowPeel {
    pub fn removed_count(&self) -> usize {
        self.log.iter().map(|s| s.removed.len()).sum()
    }
}

/// Repeatedly deletes all edges through a `(k-1)`-set whose degree is between
/// 1 and `threshold`, scanning sets in lexicographic order from the start
/// after every deletion. In the residue every `(k-1)`-subset of an edge has
/// degree above `threshold`.
pub fn peel_shadow(f: &Hypergraph, threshold: usize) -> ShadowPeel {
    let k = f.k();
    let mut through: BTreeMap<VertexSet, Vec<usize>> = BTreeMap::new();
    for (i, &e) in f.edges().iter().enumerate() {
        for x in e.subsets_of_size(k - 1) {
            through.entry(x).or_default().push(i);
        }
    }
    let mut degree: BTreeMap<VertexSet, usize> = through.iter().map(|(&x, l)| (x, l.len())).collect();
    let mut alive = vec![true; f.len()];
    let mut log = Vec::new();
    while let Some(x) = degree.iter().find(|&(_, &d)| d >= 1 && d <= threshold).map(|(&x, _)| x) {
        let mut removed = Vec::new();
        for &i in &through[&x] {
            if !std::mem::replace(&mut alive[i], false) {
                continue;
            }
            let e = f.edges()[i];
            removed.push(e);
            for y in e.subsets_of_size(k - 1) {
                *degree.get_mut(&y).expect("shadow set") -= 1;
            }
        }
        log.push(PeelStep { set: x, removed });
    }
    let residue = f.filter_edges(|i, _| alive[i]);
    ShadowPeel { residue, log }
}

/// How an embedding answer was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EmbedRoute {
    /// Grown edge by edge inside the peeled residue.
    Greedy,
    /// The residue was empty; decided by exhaustive search.
    Exhaustive,
}

/// Embeds a tight k-forest into `f`, following the peeling argument: peel
/// with threshold `v - k`, then grow the forest inside the residue.
pub fn embed_tight_forest(f: &Hypergraph, t: &GrowthSequence) -> Result<Option<Embedding>> {
    embed_tight_forest_traced(f, t).map(|(emb, _)| emb)
}

/// [`embed_tight_forest`] that also reports which route produced the answer.
pub fn embed_tight_forest_traced(f: &Hypergraph, t: &GrowthSequence) -> Result<(Option<Embedding>, EmbedRoute)> {
    if t.k() != f.k() {
        return Err(invalid(format!("uniformity mismatch: host {} vs forest {}", f.k(), t.k())));
    }
    if !t.is_tight()? {
        return Err(invalid("forest is not tight; apply tight_completion first"));
    }
    let pattern = t.to_hypergraph()?;
    let tree = t.tight_completion()?;
    let v = t.vertex_count();
    let peel = peel_shadow(f, v - t.k());
    if peel.residue.is_empty() || pattern.n() > f.n() {
        return Ok((contains(f, &pattern)?, EmbedRoute::Exhaustive));
    }
    let map = grow(&peel.residue, &tree, pattern.n());
    let edge_map = edge_map_for(f, &pattern, &map).expect("residue edges belong to the host");
    Ok((Some(Embedding { vertex_map: map, edge_map }), EmbedRoute::Greedy))
}

/// Grows a tight tree inside `residue`, where every `(k-1)`-subset of an
/// edge has degree at least `v - k + 1`. Unused pattern ids below
/// `pattern_n` go to the smallest free host vertices.
fn grow(residue: &Hypergraph, tree: &GrowthSequence, pattern_n: usize) -> Vec<usize> {
    const UNSET: usize = usize::MAX;
    let mut map = vec![UNSET; pattern_n];
    let mut used = VertexSet::EMPTY;
    let first = tree.edges()[0];
    for (p, h) in first.iter().zip(residue.edges()[0].iter()) {
        map[p] = h;
        used.insert(h);
    }
    for (i, a) in tree.defining_sets().into_iter().enumerate() {
        let e = tree.edges()[i + 1];
        let b = (e - a).min().expect("tight step adds one vertex");
        let image: VertexSet = a.iter().map(|x| map[x]).collect();
        let y = residue
            .star_of(image)
            .map(|h| (h - image).min().unwrap())
            .filter(|&y| !used.contains(y))
            .min()
            .expect("residue degree exceeds the number of used vertices");
        map[b] = y;
        used.insert(y);
    }
    let mut free = VertexSet::range(residue.n()) - used;
    for x in map.iter_mut().filter(|x| **x == UNSET) {
        let v = free.min().expect("host is large enough");
        free.remove(v);
        *x = v;
    }
    map
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial::choose;
    use crate::forest::{matching, GrowthSequence};
    use rand::{Rng, SeedableRng};

    #[test]
    fn single_edge_peels_away() {
        let f = Hypergraph::complete(3, 3).unwrap();
        let p = peel_shadow(&f, 1);
        assert!(p.residue.is_empty());
        assert_eq!(p.log.len(), 1);
        assert_eq!(p.log[0].set, VertexSet::from([0, 1]));
    }

    #[test]
    fn dense_family_survives() {
        let f = Hypergraph::complete(3, 6).unwrap();
        let p = peel_shadow(&f, 1);
        assert_eq!(p.residue, f);
        assert!(p.log.is_empty());
        assert!(peel_shadow(&f, 4).residue.is_empty());
    }

    #[test]
    fn removal_accounting() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..30 {
            let n = rng.gen_range(5..10);
            let all = Hypergraph::complete(3, n).unwrap();
            let f = all.filter_edges(|_, _| rng.gen_bool(0.5));
            let t = rng.gen_range(0..4);
            let p = peel_shadow(&f, t);
            assert_eq!(p.removed_count() + p.residue.len(), f.len());
            assert!(p.removed_count() <= t * choose(n, 2).unwrap() as usize);
            let sets: std::collections::BTreeSet<_> = p.log.iter().map(|s| s.set).collect();
            assert_eq!(sets.len(), p.log.len());
            for step in &p.log {
                assert!(!step.removed.is_empty() && step.removed.len() <= t);
            }
            for &e in p.residue.edges() {
                for x in e.subsets_of_size(2) {
                    assert!(p.residue.degree(x) > t);
                }
            }
        }
    }

    #[test]
    fn tight_tree_in_complete_host() {
        let f = Hypergraph::complete(4, 8).unwrap();
        let t = GrowthSequence::tight_path(4, 3);
        let (emb, route) = embed_tight_forest_traced(&f, &t).unwrap();
        assert_eq!(route, EmbedRoute::Greedy);
        emb.unwrap().validate(&f, &t.to_hypergraph().unwrap()).unwrap();
    }

    #[test]
    fn matching_host_has_no_path() {
        let f = matching(3, 5).unwrap();
        let t = GrowthSequence::tight_path(3, 2);
        let (emb, route) = embed_tight_forest_traced(&f, &t).unwrap();
        assert!(emb.is_none());
        assert_eq!(route, EmbedRoute::Exhaustive);
    }

    #[test]
    fn tight_forest_with_two_components() {
        let t = GrowthSequence::from_lists(3, [[0, 1, 2], [0, 1, 3], [4, 5, 6]]).unwrap();
        let f = Hypergraph::complete(3, 9).unwrap();
        let emb = embed_tight_forest(&f, &t).unwrap().unwrap();
        emb.validate(&f, &t.to_hypergraph().unwrap()).unwrap();
    }

    #[test]
    fn rejects_non_tight() {
        let t = GrowthSequence::from_lists(4, [[0, 1, 2, 3], [3, 4, 5, 6]]).unwrap();
        assert!(embed_tight_forest(&Hypergraph::complete(4, 8).unwrap(), &t).is_err());
    }
}
