use crate::error::{invalid, Result};
use crate::graph::{Forest, Graph};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

fn check(k: usize, size: usize) -> Result<()> {
    if k < 2 {
        return Err(invalid(format!("uniformity must be at least 2, got {k}")));
    }
    if size < 1 {
        return Err(invalid("size parameter must be at least 1"));
    }
    Ok(())
}

/// `ν` pairwise disjoint k-sets: edge `i` is `{ik, ..., ik + k - 1}`.
pub fn matching(k: usize, nu: usize) -> Result<Hypergraph> {
    check(k, nu)?;
    let edges = (0..nu).map(|i| VertexSet::range((i + 1) * k) - VertexSet::range(i * k));
    Hypergraph::new(k, nu * k, edges)
}

/// Linear path with `l` edges; edge `i` starts at `i(k-1)`, so consecutive
/// edges share exactly one vertex.
pub fn linear_path(k: usize, l: usize) -> Result<Hypergraph> {
    check(k, l)?;
    let edges = (0..l).map(|i| VertexSet::range(i * (k - 1) + k) - VertexSet::range(i * (k - 1)));
    Hypergraph::new(k, l * (k - 1) + 1, edges)
}

/// Linear star with `l` edges through center 0.
pub fn star(k: usize, l: usize) -> Result<Hypergraph> {
    check(k, l)?;
    let edges = (0..l).map(|i| {
        let lo = 1 + i * (k - 1);
        (VertexSet::range(lo + k - 1) - VertexSet::range(lo)).with(0)
    });
    Hypergraph::new(k, l * (k - 1) + 1, edges)
}

/// The caterpillar on the path `a1 b1 b2 a2` (ids 0, 1, 2, 3) where each `a`
/// carries `d` pendant leaves and each `b` carries `c`.
///
/// Leaves are numbered from 4 on, in the order `a1, b1, b2, a2`.
pub fn example_caterpillar(d: usize, c: usize) -> Result<Forest> {
    if c < 1 || d <= c {
        return Err(invalid(format!("need d > c >= 1, got d={d}, c={c}")));
    }
    let mut edges = vec![(0, 1), (1, 2), (2, 3)];
    let mut next = 4;
    for (hub, count) in [(0, d), (1, c), (2, c), (3, d)] {
        for _ in 0..count {
            edges.push((hub, next));
            next += 1;
        }
    }
    Forest::new(Graph::new(next, edges)?)
}

pub(crate) fn parse_args(spec: &str, args: &str, expected: usize) -> Result<Vec<usize>> {
    let values: Vec<usize> = args
        .split(',')
        .map(|a| a.trim().parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| invalid(format!("bad parameters in `{spec}`")))?;
    if values.len() != expected {
        return Err(invalid(format!("`{spec}` takes {expected} parameter(s)")));
    }
    Ok(values)
}

/// Builds a graph forest from a name such as `lpath-graph:3`, `path:3`,
/// `star-graph:4`, `matching-graph:2` or `sec4tree:2,1`.
pub fn forest_from_spec(spec: &str) -> Result<Forest> {
    let (name, args) = spec.split_once(':').unwrap_or((spec, ""));
    let one = || parse_args(spec, args, 1).map(|v| v[0]);
    match name {
        "lpath-graph" | "path" => Forest::new(Graph::path(one()?)),
        "star-graph" | "star" => Forest::new(Graph::star(one()?)),
        "matching-graph" | "matching" => {
            let nu = one()?;
            Forest::new(Graph::new(2 * nu, (0..nu).map(|i| (2 * i, 2 * i + 1)))?)
        }
        "sec4tree" => {
            let v = parse_args(spec, args, 2)?;
            example_caterpillar(v[0], v[1])
        }
        _ => Err(invalid(format!("unknown forest `{spec}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::transversal_number;

    #[test]
    fn canonical_labels() {
        assert_eq!(matching(3, 2).unwrap(), Hypergraph::from_lists(3, 6, [[0, 1, 2], [3, 4, 5]]).unwrap());
        assert_eq!(linear_path(3, 2).unwrap(), Hypergraph::from_lists(3, 5, [[0, 1, 2], [2, 3, 4]]).unwrap());
        assert_eq!(star(3, 2).unwrap(), Hypergraph::from_lists(3, 5, [[0, 1, 2], [0, 3, 4]]).unwrap());
        assert!(linear_path(4, 5).unwrap().is_linear());
        assert!(matching(1, 2).is_err());
        assert!(star(3, 0).is_err());
    }

    #[test]
    fn caterpillar_shape() {
        let t = example_caterpillar(2, 1).unwrap();
        assert_eq!((t.n(), t.edge_count()), (10, 9));
        assert!(t.is_tree());
        let t = example_caterpillar(3, 2).unwrap();
        assert_eq!(t.n(), 14);
        assert_eq!(transversal_number(&t.to_hypergraph()), 4);
        assert!(example_caterpillar(2, 2).is_err());
        assert!(example_caterpillar(3, 0).is_err());
    }

    #[test]
    fn specs() {
        assert_eq!(forest_from_spec("lpath-graph:3").unwrap().edge_count(), 3);
        assert_eq!(forest_from_spec("star-graph:4").unwrap().n(), 5);
        assert_eq!(forest_from_spec("sec4tree:3,1").unwrap().n(), 12);
        assert!(forest_from_spec("sec4tree:3").is_err());
        assert!(forest_from_spec("tree:3").is_err());
        assert!(forest_from_spec("path:x").is_err());
    }
}
