//! Plain-text formats for hypergraphs, graphs, growth sequences and embeddings.
//!
//! Every format is a header line followed by one record per line. Blank lines
//! and anything after `#` are ignored.
//!
//! ```text
//! hg <k> <n> <m>          graph <n> <m>        growth <k> <n> <q>      embedding <p> <q>
//! <v_1> ... <v_k>         <u> <v>              <v_1> ... <v_k>         <vertex> <image>   (p lines)
//!                                                                      <edge> <host-edge> (q lines)
//! ```

use std::collections::HashSet;
use std::path::Path;

use crate::embed::Embedding;
use crate::error::{Error, Result};
use crate::forest::GrowthSequence;
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Any of the supported file kinds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Hypergraph(Hypergraph),
    Graph(Graph),
    Growth(GrowthSequence),
    Embedding(Embedding),
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Non-empty lines with comments stripped, numbered from 1.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("");
        let words: Vec<&str> = body.split_whitespace().collect();
        (!words.is_empty()).then_some((i + 1, words))
    })
}

fn numbers(line: usize, words: &[&str]) -> Result<Vec<usize>> {
    words
        .iter()
        .map(|w| w.parse::<usize>().map_err(|_| err(line, format!("`{w}` is not a non-negative integer"))))
        .collect()
}

struct Body<'a> {
    header_line: usize,
    kind: &'a str,
    header: Vec<usize>,
    rows: Vec<(usize, Vec<usize>)>,
}

fn split(text: &str) -> Result<Body<'_>> {
    let mut it = records(text);
    let (header_line, words) = it.next().ok_or_else(|| err(1, "empty input"))?;
    let header = numbers(header_line, &words[1..])?;
    let mut rows = Vec::new();
    for (line, words) in it {
        rows.push((line, numbers(line, &words)?));
    }
    Ok(Body { header_line, kind: words[0], header, rows })
}

impl Body<'_> {
    fn expect_header(&self, len: usize, shape: &str) -> Result<()> {
        if self.header.len() != len {
            return Err(err(self.header_line, format!("header must be `{shape}`")));
        }
        Ok(())
    }

    fn expect_rows(&self, count: usize) -> Result<()> {
        if self.rows.len() != count {
            let line = self.rows.last().map_or(self.header_line, |r| r.0);
            return Err(err(line, format!("expected {count} records, found {}", self.rows.len())));
        }
        Ok(())
    }

    /// Rows as k-sets on `0..n`, checked for size, range and repeats.
    fn sets(&self, k: usize, n: usize) -> Result<Vec<VertexSet>> {
        let mut seen = HashSet::new();
        let mut out = Vec::with_capacity(self.rows.len());
        for (line, row) in &self.rows {
            if row.len() != k {
                return Err(err(*line, format!("expected {k} vertices, found {}", row.len())));
            }
            if let Some(v) = row.iter().find(|&&v| v >= n) {
                return Err(err(*line, format!("vertex {v} outside 0..{n}")));
            }
            let set: VertexSet = row.iter().collect();
            if set.len() != k {
                return Err(err(*line, "repeated vertex"));
            }
            if !seen.insert(set) {
                return Err(err(*line, "duplicate edge"));
            }
            out.push(set);
        }
        Ok(out)
    }
}

fn check_n(line: usize, n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(err(line, format!("at most {MAX_VERTICES} vertices are supported")));
    }
    Ok(())
}

fn hypergraph_body(b: &Body<'_>) -> Result<Hypergraph> {
    b.expect_header(3, "hg <k> <n> <m>")?;
    let (k, n, m) = (b.header[0], b.header[1], b.header[2]);
    if k == 0 {
        return Err(err(b.header_line, "uniformity must be at least 1"));
    }
    check_n(b.header_line, n)?;
    b.expect_rows(m)?;
    let edges = b.sets(k, n)?;
    Hypergraph::new(k, n, edges).map_err(|e| err(b.header_line, e.to_string()))
}

fn graph_body(b: &Body<'_>) -> Result<Graph> {
    b.expect_header(2, "graph <n> <m>")?;
    let (n, m) = (b.header[0], b.header[1]);
    check_n(b.header_line, n)?;
    b.expect_rows(m)?;
    let edges = b.sets(2, n)?;
    Graph::new(n, edges.iter().map(|&e| (e.min().unwrap(), e.max().unwrap())))
        .map_err(|e| err(b.header_line, e.to_string()))
}

fn growth_body(b: &Body<'_>) -> Result<GrowthSequence> {
    b.expect_header(3, "growth <k> <n> <q>")?;
    let (k, n, q) = (b.header[0], b.header[1], b.header[2]);
    if k == 0 {
        return Err(err(b.header_line, "uniformity must be at least 1"));
    }
    check_n(b.header_line, n)?;
    b.expect_rows(q)?;
    let edges = b.sets(k, n)?;
    GrowthSequence::new(k, edges).map_err(|e| err(b.header_line, e.to_string()))
}

fn embedding_body(b: &Body<'_>) -> Result<Embedding> {
    b.expect_header(2, "embedding <p> <q>")?;
    let (p, q) = (b.header[0], b.header[1]);
    b.expect_rows(p + q)?;
    let mut vertex_map = Vec::with_capacity(p);
    let mut edge_map = Vec::with_capacity(q);
    for (i, (line, row)) in b.rows.iter().enumerate() {
        let (target, index) = if i < p { (&mut vertex_map, i) } else { (&mut edge_map, i - p) };
        match row.as_slice() {
            [a, x] if *a == index => target.push(*x),
            [_, _] => return Err(err(*line, format!("expected index {index} first"))),
            _ => return Err(err(*line, "expected two columns")),
        }
    }
    Ok(Embedding { vertex_map, edge_map })
}

pub fn parse_document(text: &str) -> Result<Document> {
    let b = split(text)?;
    match b.kind {
        "hg" => hypergraph_body(&b).map(Document::Hypergraph),
        "graph" => graph_body(&b).map(Document::Graph),
        "growth" => growth_body(&b).map(Document::Growth),
        "embedding" => embedding_body(&b).map(Document::Embedding),
        other => Err(err(b.header_line, format!("unknown header `{other}`"))),
    }
}

/// Reads `hg` files; `graph` and `growth` files are accepted and converted.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    match parse_document(text)? {
        Document::Hypergraph(h) => Ok(h),
        Document::Graph(g) => Ok(g.to_hypergraph()),
        Document::Growth(g) => g.to_hypergraph(),
        Document::Embedding(_) => Err(err(1, "expected a hypergraph, found an embedding")),
    }
}

/// Reads `graph` files, or `hg 2` files.
pub fn parse_graph(text: &str) -> Result<Graph> {
    match parse_document(text)? {
        Document::Graph(g) => Ok(g),
        Document::Hypergraph(h) => Graph::from_hypergraph(&h).map_err(|e| err(1, e.to_string())),
        _ => Err(err(1, "expected a graph")),
    }
}

pub fn parse_growth(text: &str) -> Result<GrowthSequence> {
    match parse_document(text)? {
        Document::Growth(g) => Ok(g),
        _ => Err(err(1, "expected a `growth` file")),
    }
}

pub fn parse_embedding(text: &str) -> Result<Embedding> {
    match parse_document(text)? {
        Document::Embedding(e) => Ok(e),
        _ => Err(err(1, "expected an `embedding` file")),
    }
}

pub fn read_hypergraph(path: impl AsRef<Path>) -> Result<Hypergraph> {
    parse_hypergraph(&std::fs::read_to_string(path)?)
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<Graph> {
    parse_graph(&std::fs::read_to_string(path)?)
}

pub fn read_growth(path: impl AsRef<Path>) -> Result<GrowthSequence> {
    parse_growth(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::tests_support::random_growth;
    use crate::graph::tests::arb_graph;
    use proptest::prelude::*;

    fn arb_hypergraph() -> impl Strategy<Value = Hypergraph> {
        (1usize..5, 0usize..9).prop_flat_map(|(k, extra)| {
            let n = k + extra;
            let all = VertexSet::range(n).subsets_of_size(k);
            let len = all.len();
            proptest::sample::subsequence(all, 0..=len.min(40)).prop_map(move |es| Hypergraph::new(k, n, es).unwrap())
        })
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# a path\nhg 3 5 2\n\n0 1 2   # first\n2 3 4\n";
        let h = parse_hypergraph(text).unwrap();
        assert_eq!(h.len(), 2);
        let g = parse_graph("# kernel graph, s = 2\ngraph 6 2\n0 1\n2 3\n").unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("hg 3 5 2\n0 1 2\n2 3\n", 3),
            ("hg 3 5 2\n0 1 2\n2 3 9\n", 3),
            ("hg 3 5 2\n0 1 2\n\n2 1 0\n", 4),
            ("hg 3 5 3\n0 1 2\n2 3 4\n", 3),
            ("hg 3 x 2\n", 1),
            ("\n\nblob 1 2\n", 3),
            ("graph 4 1\n1 1\n", 2),
            ("growth 3 6 1\n0 1\n", 2),
            ("embedding 2 0\n0 3\n0 4\n", 3),
        ];
        for (text, line) in cases {
            match parse_document(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
        assert!(parse_document("").is_err());
    }

    #[test]
    fn conversions() {
        let g = parse_graph("hg 2 3 1\n0 2\n").unwrap();
        assert!(g.has_edge(0, 2));
        let h = parse_hypergraph("growth 3 5 2\n2 3 4\n0 1 2\n").unwrap();
        assert_eq!(h.len(), 2);
        assert!(parse_growth("hg 3 3 1\n0 1 2\n").is_err());
    }

    #[test]
    fn growth_and_embedding_round_trip() {
        for seed in 0..20 {
            let g = random_growth(3, 5, seed);
            assert_eq!(parse_growth(&g.to_text()).unwrap(), g);
        }
        let e = Embedding { vertex_map: vec![4, 0, 2], edge_map: vec![1] };
        assert_eq!(parse_embedding(&e.to_text()).unwrap(), e);
    }

    proptest! {
        #[test]
        fn hypergraph_round_trip(h in arb_hypergraph()) {
            prop_assert_eq!(parse_hypergraph(&h.to_text()).unwrap(), h);
        }

        #[test]
        fn graph_round_trip(g in arb_graph(9)) {
            prop_assert_eq!(parse_graph(&g.to_text()).unwrap(), g);
        }
    }
}
