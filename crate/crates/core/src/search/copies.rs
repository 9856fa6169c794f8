use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// Upper limit on injective maps tried per pattern while listing copies.
const MAP_LIMIT: u64 = 50_000_000;

/// The forbidden configurations of one search instance, as bitmasks over the
/// candidate k-sets of `[n]` (all k-sets in lexicographic order).
#[derive(Clone, Debug)]
pub struct CopyIndex {
    pub n: usize,
    pub k: usize,
    pub candidates: Vec<VertexSet>,
    /// Every copy of every pattern, with copies that contain another copy dropped.
    pub copies: Vec<u128>,
    /// `copies_of[c]` lists the copies containing candidate `c`.
    pub copies_of: Vec<Vec<u128>>,
}

impl CopyIndex {
    pub fn new(n: usize, k: usize, patterns: &[Hypergraph]) -> Result<Self> {
        let candidates = VertexSet::range(n).subsets_of_size(k);
        if candidates.len() > 128 {
            return Err(Error::Limit(format!("{} candidate edges, at most 128 supported", candidates.len())));
        }
        let index: HashMap<VertexSet, usize> = candidates.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut all: HashSet<u128> = HashSet::new();
        for p in patterns {
            all.extend(pattern_copies(p, n, &index)?);
        }
        let mut by_size: Vec<u128> = all.into_iter().collect();
        by_size.sort_unstable_by_key(|&c| (c.count_ones(), c));
        let mut copies: Vec<u128> = Vec::with_capacity(by_size.len());
        // copies[..smaller] hold the kept copies with fewer edges than the current one.
        let mut smaller = 0;
        for c in by_size {
            if copies.last().is_some_and(|d: &u128| d.count_ones() < c.count_ones()) {
                smaller = copies.len();
            }
            if copies[..smaller].iter().all(|&d| d & !c != 0) {
                copies.push(c);
            }
        }
        let mut copies_of = vec![Vec::new(); candidates.len()];
        for &c in &copies {
            let mut bits = c;
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                copies_of[i].push(c);
                bits &= bits - 1;
            }
        }
        Ok(CopyIndex { n, k, candidates, copies, copies_of })
    }

    pub fn len(&self) -> usize {
        self.candidates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.candidates.is_empty()
    }

    pub fn all(&self) -> u128 {
        if self.len() == 128 {
            u128::MAX
        } else {
            (1u128 << self.len()) - 1
        }
    }

    /// Candidates that form a copy on their own.
    pub fn banned(&self) -> u128 {
        self.copies.iter().filter(|c| c.count_ones() == 1).fold(0, |acc, &c| acc | c)
    }

    pub fn max_copy_size(&self) -> usize {
        self.copies.iter().map(|c| c.count_ones() as usize).max().unwrap_or(0)
    }

    pub fn to_hypergraph(&self, mask: u128) -> Result<Hypergraph> {
        let edges = (0..self.len()).filter(|&i| mask >> i & 1 == 1).map(|i| self.candidates[i]);
        Hypergraph::new(self.k, self.n, edges)
    }

    pub fn mask_of(&self, h: &Hypergraph) -> u128 {
        h.edges()
            .iter()
            .map(|e| self.candidates.binary_search(e).expect("edge is a candidate"))
            .fold(0, |acc, i| acc | 1u128 << i)
    }
}

/// All edge sets of copies of `p` inside the complete k-graph on `[n]`.
/// Vertices with the same edge neighbourhood get increasing images, since
/// swapping them cannot change the edge set.
fn pattern_copies(p: &Hypergraph, n: usize, index: &HashMap<VertexSet, usize>) -> Result<HashSet<u128>> {
    let mut out = HashSet::new();
    if p.n() > n {
        return Ok(out);
    }
    let incidence = p.incidence();
    let support: Vec<usize> = (0..p.n()).filter(|&v| !incidence[v].is_empty()).collect();
    let twin_before: Vec<Option<usize>> = support
        .iter()
        .enumerate()
        .map(|(i, &v)| support[..i].iter().rposition(|&u| incidence[u] == incidence[v]))
        .collect();
    let mut map = vec![0usize; p.n()];
    let mut tried = 0u64;
    let mut walk = Walk {
        p,
        n,
        index,
        support: &support,
        twin_before: &twin_before,
        map: &mut map,
        tried: &mut tried,
        out: &mut out,
    };
    walk.go(0, VertexSet::EMPTY)?;
    Ok(out)
}

struct Walk<'a> {
    p: &'a Hypergraph,
    n: usize,
    index: &'a HashMap<VertexSet, usize>,
    support: &'a [usize],
    twin_before: &'a [Option<usize>],
    map: &'a mut Vec<usize>,
    tried: &'a mut u64,
    out: &'a mut HashSet<u128>,
}

impl Walk<'_> {
    fn go(&mut self, i: usize, used: VertexSet) -> Result<()> {
        if i == self.support.len() {
            *self.tried += 1;
            if *self.tried > MAP_LIMIT {
                return Err(Error::Limit("too many pattern placements to list".into()));
            }
            let mask = self.p.edges().iter().fold(0u128, |acc, e| {
                let image: VertexSet = e.iter().map(|v| self.map[v]).collect();
                acc | 1u128 << self.index[&image]
            });
            self.out.insert(mask);
            return Ok(());
        }
        let v = self.support[i];
        let floor = self.twin_before[i].map_or(0, |j| self.map[self.support[j]] + 1);
        for x in floor..self.n {
            if used.contains(x) {
                continue;
            }
            self.map[v] = x;
            self.go(i + 1, used.with(x))?;
        }
        Ok(())
    }
}
