use crate::embed::contains;
use crate::error::{invalid, Result};
use crate::graph::{Forest, Graph};
use crate::vertex_set::VertexSet;

/// Upper bound `(v - 2) n` on the edge count of an `n`-vertex graph avoiding
/// a given `v`-vertex forest.
pub fn forest_turan_upper(v: u64, n: u64) -> Result<u64> {
    if v < 2 {
        return Err(invalid(format!("forest must have at least 2 vertices, got {v}")));
    }
    (v - 2).checked_mul(n).ok_or_else(|| crate::error::Error::Overflow(format!("({v} - 2) * {n}")))
}

/// The subgraph left after repeatedly deleting vertices of degree below `delta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinDegreeCore {
    pub vertices: VertexSet,
    /// Induced on `vertices`; same vertex universe as the input.
    pub graph: Graph,
}

/// Deletes low-degree vertices, lowest id first, until every survivor has
/// degree at least `delta`. Returns `None` if nothing survives.
pub fn min_degree_peel(g: &Graph, delta: usize) -> Option<MinDegreeCore> {
    min_degree_peel_by(g, delta, |candidates| candidates.min().expect("nonempty"))
}

/// Same as [`min_degree_peel`] with the deletion order chosen by `pick` among
/// the currently deletable vertices. The result does not depend on `pick`.
pub fn min_degree_peel_by(g: &Graph, delta: usize, mut pick: impl FnMut(VertexSet) -> usize) -> Option<MinDegreeCore> {
    let mut alive = VertexSet::range(g.n());
    loop {
        let low: VertexSet = alive.iter().filter(|&v| (g.neighbors(v) & alive).len() < delta).collect();
        if low.is_empty() {
            break;
        }
        let v = pick(low);
        debug_assert!(low.contains(v));
        alive.remove(v);
    }
    (!alive.is_empty()).then(|| MinDegreeCore { vertices: alive, graph: g.induced(alive) })
}

/// Embeds the forest `t` into `g`, returning the image of every vertex of `t`.
///
/// When the min-degree core with threshold `v - 1` exists, every component is
/// grown greedily inside it (a fresh neighbour always exists since core
/// degrees exceed the number of placed vertices). Otherwise an exhaustive
/// search decides.
pub fn embed_tree_greedy(g: &Graph, t: &Forest) -> Option<Vec<usize>> {
    let v = t.n();
    if v > g.n() {
        return None;
    }
    if v <= 1 {
        return Some((0..v).collect());
    }
    if let Some(core) = min_degree_peel(g, v - 1) {
        if let Some(map) = grow_in_core(&core, t) {
            return Some(map);
        }
    }
    contains(&g.to_hypergraph(), &t.to_hypergraph()).expect("both sides are 2-uniform").map(|emb| emb.vertex_map)
}

fn grow_in_core(core: &MinDegreeCore, t: &Forest) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; t.n()];
    let mut used = VertexSet::EMPTY;
    for comp in t.components() {
        let root = comp.min().unwrap();
        let image = (core.vertices - used).min()?;
        map[root] = image;
        used.insert(image);
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for y in t.neighbors(x).iter() {
                if map[y] != usize::MAX {
                    continue;
                }
                let image = (core.graph.neighbors(map[x]) - used).min()?;
                map[y] = image;
                used.insert(image);
                queue.push_back(y);
            }
        }
    }
    Some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::arb_graph;
    use crate::graph::{free_trees, non_isomorphic_forests};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn is_embedding(g: &Graph, t: &Graph, map: &[usize]) -> bool {
        let image: VertexSet = map.iter().collect();
        map.len() == t.n() && image.len() == t.n() && t.edges().all(|(a, b)| g.has_edge(map[a], map[b]))
    }

    #[test]
    fn turan_upper_examples() {
        assert_eq!(forest_turan_upper(4, 10).unwrap(), 20);
        assert_eq!(forest_turan_upper(2, 7).unwrap(), 0);
        assert_eq!(forest_turan_upper(6, 100).unwrap(), 400);
        assert!(forest_turan_upper(1, 5).is_err());
    }

    #[test]
    fn peel_examples() {
        let k4 = Graph::complete(4).unwrap();
        let core = min_degree_peel(&k4, 3).unwrap();
        assert_eq!(core.graph, k4);
        assert!(min_degree_peel(&Graph::star(5), 2).is_none());
    }

    #[test]
    fn peel_nonempty_above_threshold() {
        // K6 has 15 edges, more than (3 - 1) * 6.
        let g = Graph::complete(6).unwrap();
        assert!(min_degree_peel(&g, 3).is_some());
    }

    #[test]
    fn greedy_embedding_examples() {
        let k5 = Graph::complete(5).unwrap();
        let p4 = Forest::new(Graph::path(3)).unwrap();
        let map = embed_tree_greedy(&k5, &p4).unwrap();
        assert!(is_embedding(&k5, &p4, &map));

        let c4 = Graph::cycle(4).unwrap();
        let claw = Forest::new(Graph::star(3)).unwrap();
        assert!(embed_tree_greedy(&c4, &claw).is_none());
    }

    #[test]
    fn dense_graphs_contain_every_tree() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for v in 2..=6usize {
            let trees = free_trees(v);
            for _ in 0..20 {
                let n = rng.gen_range(v..=12);
                let bound = (v - 2) * n;
                let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
                if bound + 1 > pairs.len() {
                    continue;
                }
                let m = rng.gen_range(bound + 1..=pairs.len());
                let chosen = rand::seq::index::sample(&mut rng, pairs.len(), m);
                let g = Graph::new(n, chosen.iter().map(|i| pairs[i])).unwrap();
                for t in &trees {
                    let map = embed_tree_greedy(&g, t).expect("dense graph contains the tree");
                    assert!(is_embedding(&g, t, &map));
                }
            }
        }
    }

    #[test]
    fn forests_embed_componentwise() {
        let g = Graph::complete(9).unwrap();
        for f in non_isomorphic_forests(6) {
            let map = embed_tree_greedy(&g, &f).unwrap();
            assert!(is_embedding(&g, &f, &map));
        }
    }

    proptest! {
        #[test]
        fn peel_is_confluent(g in arb_graph(10), delta in 1usize..4, seed in any::<u64>()) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let a = min_degree_peel(&g, delta);
            let b = min_degree_peel_by(&g, delta, |c| {
                let vs = c.to_vec();
                vs[rng.gen_range(0..vs.len())]
            });
            prop_assert_eq!(a, b);
        }

        #[test]
        fn greedy_agrees_with_exhaustive(g in arb_graph(7), which in 0usize..6) {
            let trees = free_trees(4);
            let t = &trees[which % trees.len()];
            let greedy = embed_tree_greedy(&g, t);
            let exhaustive = contains(&g.to_hypergraph(), &t.to_hypergraph()).unwrap();
            prop_assert_eq!(greedy.is_some(), exhaustive.is_some());
            if let Some(map) = greedy {
                prop_assert!(is_embedding(&g, t, &map));
            }
        }
    }
}
