use super::Embedding;
use crate::error::{invalid, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

const UNMAPPED: usize = usize::MAX;

/// Finds a copy of `pattern` in `host`, or proves there is none.
///
/// Pattern edges are placed most-constrained first. Vertices with identical
/// edge neighbourhoods (twins) in the pattern receive increasing images, and
/// twins in the host are used in increasing order, which removes symmetric
/// duplicates without losing any copy up to automorphism. Isolated pattern
/// vertices go last, to the smallest unused host vertices.
pub fn contains(host: &Hypergraph, pattern: &Hypergraph) -> Result<Option<Embedding>> {
    if host.k() != pattern.k() {
        return Err(invalid(format!("uniformity mismatch: host {} vs pattern {}", host.k(), pattern.k())));
    }
    if pattern.n() > host.n() || pattern.len() > host.len() {
        return Ok(None);
    }
    let mut search = Search::new(host, pattern);
    if !search.run(0) {
        return Ok(None);
    }
    let mut vertex_map = search.map;
    let mut free = VertexSet::range(host.n()) - search.used;
    for x in vertex_map.iter_mut().filter(|x| **x == UNMAPPED) {
        let v = free.min().expect("host has at least as many vertices as the pattern");
        free.remove(v);
        *x = v;
    }
    let edge_map = search.edge_image;
    Ok(Some(Embedding { vertex_map, edge_map }))
}

/// Partition of the host vertices into classes of pairwise twins, where `a`
/// and `b` are twins if swapping them maps the edge set onto itself. Returns
/// the class id of every vertex.
pub fn host_twin_classes(h: &Hypergraph) -> Vec<usize> {
    let n = h.n();
    let mut class = vec![UNMAPPED; n];
    let mut next = 0;
    for a in 0..n {
        if class[a] != UNMAPPED {
            continue;
        }
        class[a] = next;
        for (b, slot) in class.iter_mut().enumerate().skip(a + 1) {
            if *slot == UNMAPPED && swap_is_automorphism(h, a, b) {
                *slot = next;
            }
        }
        next += 1;
    }
    class
}

fn swap_is_automorphism(h: &Hypergraph, a: usize, b: usize) -> bool {
    h.edges().iter().all(|&e| match (e.contains(a), e.contains(b)) {
        (true, false) => h.contains_edge(e.without(a).with(b)),
        (false, true) => h.contains_edge(e.without(b).with(a)),
        _ => true,
    })
}

/// Pattern twin classes: vertices lying in exactly the same edges. Isolated
/// vertices are left out.
fn pattern_twin_classes(p: &Hypergraph) -> Vec<usize> {
    let incidence = p.incidence();
    let mut class = vec![UNMAPPED; p.n()];
    let mut next = 0;
    for a in 0..p.n() {
        if class[a] != UNMAPPED || incidence[a].is_empty() {
            continue;
        }
        class[a] = next;
        for b in a + 1..p.n() {
            if incidence[b] == incidence[a] {
                class[b] = next;
            }
        }
        next += 1;
    }
    class
}

/// Greedy most-constrained-first order: start from an edge with the highest
/// total degree, then always take the edge meeting the placed vertices most.
fn edge_order(p: &Hypergraph) -> Vec<usize> {
    let deg = p.vertex_degrees();
    let weight = |e: VertexSet| e.iter().map(|v| deg[v]).sum::<usize>();
    let mut placed = VertexSet::EMPTY;
    let mut left: Vec<usize> = (0..p.len()).collect();
    let mut order = Vec::with_capacity(p.len());
    while !left.is_empty() {
        let (pos, _) = left
            .iter()
            .enumerate()
            .max_by_key(|&(pos, &j)| {
                let e = p.edges()[j];
                ((e & placed).len(), weight(e), std::cmp::Reverse(pos))
            })
            .unwrap();
        let j = left.remove(pos);
        placed = placed | p.edges()[j];
        order.push(j);
    }
    order
}

struct Search<'a> {
    host: &'a Hypergraph,
    pattern: &'a Hypergraph,
    order: Vec<usize>,
    incidence: Vec<Vec<usize>>,
    host_class: Vec<usize>,
    class_members: Vec<VertexSet>,
    pattern_class: Vec<usize>,
    map: Vec<usize>,
    mapped: VertexSet,
    used: VertexSet,
    edge_used: Vec<bool>,
    edge_image: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(host: &'a Hypergraph, pattern: &'a Hypergraph) -> Self {
        let mut incidence = host.incidence();
        let deg = host.vertex_degrees();
        // Fail-first: edges through high-degree vertices are tried first.
        for list in &mut incidence {
            list.sort_by_key(|&f| std::cmp::Reverse(host.edges()[f].iter().map(|v| deg[v]).sum::<usize>()));
        }
        let host_class = host_twin_classes(host);
        let classes = host_class.iter().max().map_or(0, |m| m + 1);
        let mut class_members = vec![VertexSet::EMPTY; classes];
        for (v, &c) in host_class.iter().enumerate() {
            class_members[c].insert(v);
        }
        Search {
            host,
            pattern,
            order: edge_order(pattern),
            incidence,
            host_class,
            class_members,
            pattern_class: pattern_twin_classes(pattern),
            map: vec![UNMAPPED; pattern.n()],
            mapped: VertexSet::EMPTY,
            used: VertexSet::EMPTY,
            edge_used: vec![false; host.len()],
            edge_image: vec![UNMAPPED; pattern.len()],
        }
    }

    fn run(&mut self, depth: usize) -> bool {
        let Some(&j) = self.order.get(depth) else {
            return true;
        };
        let e = self.pattern.edges()[j];
        let old = e & self.mapped;
        let new: Vec<usize> = (e - self.mapped).to_vec();
        let anchor: VertexSet = old.iter().map(|v| self.map[v]).collect();
        let candidates: Vec<usize> = match anchor.iter().min_by_key(|&x| self.incidence[x].len()) {
            Some(x) => self.incidence[x].clone(),
            None => (0..self.host.len()).collect(),
        };
        for f_idx in candidates {
            if self.edge_used[f_idx] {
                continue;
            }
            let f = self.host.edges()[f_idx];
            if !anchor.is_subset(f) {
                continue;
            }
            let fresh = f - anchor;
            if !fresh.is_disjoint(self.used) || !self.canonical_in_host(fresh) {
                continue;
            }
            self.edge_used[f_idx] = true;
            self.edge_image[j] = f_idx;
            if self.assign(depth, &new, 0, fresh) {
                return true;
            }
            self.edge_used[f_idx] = false;
        }
        self.edge_image[j] = UNMAPPED;
        false
    }

    /// Fresh images taken from a host twin class must be its smallest unused members.
    fn canonical_in_host(&self, fresh: VertexSet) -> bool {
        let mut seen = VertexSet::EMPTY;
        for x in fresh {
            let c = self.host_class[x];
            if seen.contains(c) {
                continue;
            }
            seen.insert(c);
            let unused = self.class_members[c] - self.used;
            let take = (fresh & self.class_members[c]).len();
            let smallest: VertexSet = unused.iter().take(take).collect();
            if smallest != fresh & self.class_members[c] {
                return false;
            }
        }
        true
    }

    /// Maps `new[i..]` bijectively onto `left`, then continues the search.
    fn assign(&mut self, depth: usize, new: &[usize], i: usize, left: VertexSet) -> bool {
        let Some(&u) = new.get(i) else {
            return self.run(depth + 1);
        };
        // The previous pattern twin in this step must get a smaller image.
        let floor =
            new[..i].iter().rev().find(|&&w| self.pattern_class[w] == self.pattern_class[u]).map(|&w| self.map[w]);
        for x in left {
            if floor.is_some_and(|f| x < f) {
                continue;
            }
            self.map[u] = x;
            self.mapped.insert(u);
            self.used.insert(x);
            if self.assign(depth, new, i + 1, left.without(x)) {
                return true;
            }
            self.used.remove(x);
            self.mapped.remove(u);
            self.map[u] = UNMAPPED;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::{linear_path, matching, star};

    fn check(host: &Hypergraph, pattern: &Hypergraph) -> bool {
        match contains(host, pattern).unwrap() {
            Some(emb) => {
                emb.validate(host, pattern).unwrap();
                true
            }
            None => false,
        }
    }

    #[test]
    fn self_containment() {
        let p = linear_path(3, 3).unwrap();
        let emb = contains(&p, &p).unwrap().unwrap();
        emb.validate(&p, &p).unwrap();
    }

    #[test]
    fn complete_host() {
        let k5 = Hypergraph::complete(3, 5).unwrap();
        let emb = contains(&k5, &linear_path(3, 2).unwrap()).unwrap().unwrap();
        assert_eq!(emb.vertex_map, vec![0, 1, 2, 3, 4]);
        assert!(check(&k5, &star(3, 2).unwrap()));
        assert!(!check(&k5, &matching(3, 2).unwrap()));
        assert!(check(&Hypergraph::complete(3, 6).unwrap(), &matching(3, 2).unwrap()));
    }

    #[test]
    fn absent_copies() {
        let host = matching(3, 5).unwrap();
        assert!(!check(&host, &linear_path(3, 2).unwrap()));
        assert!(check(&host, &matching(3, 5).unwrap()));
        let book = Hypergraph::from_lists(3, 5, [[0, 1, 2], [0, 1, 3], [0, 1, 4]]).unwrap();
        assert!(!check(&book, &linear_path(3, 2).unwrap()));
        assert!(check(&book, &Hypergraph::from_lists(3, 4, [[0, 1, 2], [0, 1, 3]]).unwrap()));
    }

    #[test]
    fn isolated_pattern_vertices() {
        let host = Hypergraph::from_lists(2, 4, [[1, 2]]).unwrap();
        let pattern = Hypergraph::from_lists(2, 4, [[2, 3]]).unwrap();
        let emb = contains(&host, &pattern).unwrap().unwrap();
        emb.validate(&host, &pattern).unwrap();
        let too_big = Hypergraph::from_lists(2, 5, [[2, 3]]).unwrap();
        assert!(contains(&host, &too_big).unwrap().is_none());
    }

    #[test]
    fn twin_classes() {
        let k4 = Hypergraph::complete(3, 4).unwrap();
        assert_eq!(host_twin_classes(&k4), vec![0, 0, 0, 0]);
        let p = linear_path(3, 2).unwrap();
        assert_eq!(host_twin_classes(&p), vec![0, 0, 1, 2, 2]);
    }

    #[test]
    fn mismatch_is_error() {
        assert!(contains(&Hypergraph::complete(3, 4).unwrap(), &Hypergraph::complete(2, 3).unwrap()).is_err());
    }
}
