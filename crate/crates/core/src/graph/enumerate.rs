//! Unlabelled trees and forests, one representative per isomorphism class.

use std::collections::BTreeMap;

use crate::graph::{Forest, Graph};

/// One tree per isomorphism class on exactly `m` vertices, `m >= 1`.
pub fn free_trees(m: usize) -> Vec<Forest> {
    let mut level: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new()]];
    for _ in 1..m {
        let mut next: BTreeMap<String, Vec<Vec<usize>>> = BTreeMap::new();
        for tree in &level {
            for attach in 0..tree.len() {
                let mut grown = tree.clone();
                let leaf = grown.len();
                grown.push(vec![attach]);
                grown[attach].push(leaf);
                next.entry(canonical_code(&grown)).or_insert(grown);
            }
        }
        level = next.into_values().collect();
    }
    if m == 0 {
        return Vec::new();
    }
    level.into_iter().map(|adj| to_forest(&adj)).collect()
}

/// One forest per isomorphism class for every vertex count in `1..=max_vertices`,
/// grouped by vertex count. Edgeless forests are included.
pub fn non_isomorphic_forests(max_vertices: usize) -> Vec<Forest> {
    let trees: Vec<Forest> = (1..=max_vertices).flat_map(free_trees).collect();
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        let mut chosen = Vec::new();
        multisets(&trees, n, 0, &mut chosen, &mut out);
    }
    out
}

fn multisets(trees: &[Forest], remaining: usize, from: usize, chosen: &mut Vec<usize>, out: &mut Vec<Forest>) {
    if remaining == 0 {
        out.push(disjoint_union(chosen.iter().map(|&i| &trees[i])));
        return;
    }
    for i in from..trees.len() {
        if trees[i].n() <= remaining {
            chosen.push(i);
            multisets(trees, remaining - trees[i].n(), i, chosen, out);
            chosen.pop();
        }
    }
}

fn disjoint_union<'a>(parts: impl Iterator<Item = &'a Forest>) -> Forest {
    let mut edges = Vec::new();
    let mut offset = 0;
    for t in parts {
        edges.extend(t.edges().map(|(u, v)| (u + offset, v + offset)));
        offset += t.n();
    }
    Forest::new(Graph::new(offset, edges).expect("disjoint union is simple")).expect("disjoint union of trees")
}

fn to_forest(adj: &[Vec<usize>]) -> Forest {
    let edges = adj.iter().enumerate().flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)));
    Forest::new(Graph::new(adj.len(), edges).expect("valid tree")).expect("acyclic")
}

/// Rooted encoding at each centre; the smaller one identifies the free tree.
fn canonical_code(adj: &[Vec<usize>]) -> String {
    centers(adj).into_iter().map(|c| encode(adj, c, usize::MAX)).min().expect("a tree has a centre")
}

fn encode(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut children: Vec<String> = adj[v].iter().filter(|&&u| u != parent).map(|&u| encode(adj, u, v)).collect();
    children.sort();
    format!("({})", children.concat())
}

fn centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            degree[leaf] = 0;
            for &u in &adj[leaf] {
                if degree[u] > 0 {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    layer
}
