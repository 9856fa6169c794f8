use std::sync::atomic::Ordering;

use rayon::prelude::*;

use super::{Budget, Instance, Outcome, SearchConfig, SearchStats, SearchStrategy, Symmetry};
use crate::search::CopyIndex;

/// Include/exclude search over the candidate k-sets in lexicographic order.
///
/// Including a set excludes every candidate that would then complete a copy.
/// Nodes are cut by the best of: the number of candidates still available;
/// the answer for `n - 1` plus the smallest available degree; for every
/// finished prefix of vertices, the edges decided on it plus the answer for
/// the remaining vertices; and, under degree ordering, the degree caps.
pub struct BranchAndBound;

impl SearchStrategy for BranchAndBound {
    fn name(&self) -> &'static str {
        "branch-and-bound"
    }

    fn applicable(&self, _index: &CopyIndex) -> bool {
        true
    }

    fn uses_smaller(&self) -> bool {
        true
    }

    fn solve(&self, inst: &Instance<'_>, cfg: &SearchConfig, budget: &Budget) -> Outcome {
        let idx = inst.index;
        let banned = idx.banned();
        if idx.is_empty() || banned == idx.all() {
            return Outcome { size: 0, mask: 0, exhaustive: true, stats: SearchStats::default() };
        }
        budget.best.store(inst.initial.0, Ordering::SeqCst);
        let root = Task { inc: 0, exc: banned, i: 0 };
        let mut seed = Worker::new(inst, cfg.symmetry, budget, &root);
        let tasks = if cfg.threads == Some(1) || cfg.split_depth == 0 {
            vec![root]
        } else {
            let mut out = Vec::new();
            seed.split(0, cfg.split_depth, &mut out);
            out
        };
        let results: Vec<(Option<(usize, u128)>, SearchStats)> = tasks
            .par_iter()
            .map(|t| {
                let mut w = Worker::new(inst, cfg.symmetry, budget, t);
                w.dfs(t.i);
                (w.found, w.stats)
            })
            .collect();
        let mut stats = seed.stats;
        let mut best = inst.initial;
        for (found, s) in results {
            stats.add(&s);
            if let Some(f) = found {
                if f.0 > best.0 {
                    best = f;
                }
            }
        }
        Outcome { size: best.0, mask: best.1, exhaustive: !budget.stopped(), stats }
    }
}

/// A subtree root: decisions fixed for candidates below `i`.
#[derive(Clone, Copy, Debug)]
struct Task {
    inc: u128,
    exc: u128,
    i: usize,
}

struct Worker<'a> {
    idx: &'a CopyIndex,
    smaller: &'a [Option<usize>],
    symmetry: Symmetry,
    budget: &'a Budget,
    m: usize,
    n: usize,
    /// Smallest vertex of each candidate.
    lead: Vec<usize>,
    inc: u128,
    exc: u128,
    deg_inc: Vec<u32>,
    deg_avail: Vec<u32>,
    inc_by_lead: Vec<u32>,
    avail_by_lead: Vec<u32>,
    pending: u64,
    found: Option<(usize, u128)>,
    stats: SearchStats,
}

impl<'a> Worker<'a> {
    fn new(inst: &'a Instance<'a>, symmetry: Symmetry, budget: &'a Budget, task: &Task) -> Self {
        let idx = inst.index;
        let n = idx.n;
        let m = idx.len();
        let lead: Vec<usize> = idx.candidates.iter().map(|&c| c.min().unwrap()).collect();
        let mut w = Worker {
            idx,
            smaller: inst.smaller,
            symmetry,
            budget,
            m,
            n,
            lead,
            inc: 0,
            exc: 0,
            deg_inc: vec![0; n],
            deg_avail: vec![0; n],
            inc_by_lead: vec![0; n],
            avail_by_lead: vec![0; n],
            pending: 0,
            found: None,
            stats: SearchStats::default(),
        };
        for c in 0..m {
            for v in idx.candidates[c] {
                w.deg_avail[v] += 1;
            }
            w.avail_by_lead[w.lead[c]] += 1;
        }
        for c in 0..m {
            if task.exc >> c & 1 == 1 {
                w.exclude(c);
            } else if task.inc >> c & 1 == 1 {
                w.include(c);
            }
        }
        w
    }

    fn include(&mut self, c: usize) {
        self.inc |= 1 << c;
        for v in self.idx.candidates[c] {
            self.deg_inc[v] += 1;
        }
        self.inc_by_lead[self.lead[c]] += 1;
    }

    fn uninclude(&mut self, c: usize) {
        self.inc &= !(1 << c);
        for v in self.idx.candidates[c] {
            self.deg_inc[v] -= 1;
        }
        self.inc_by_lead[self.lead[c]] -= 1;
    }

    fn exclude(&mut self, c: usize) {
        self.exc |= 1 << c;
        for v in self.idx.candidates[c] {
            self.deg_avail[v] -= 1;
        }
        self.avail_by_lead[self.lead[c]] -= 1;
    }

    fn unexclude(&mut self, c: usize) {
        self.exc &= !(1 << c);
        for v in self.idx.candidates[c] {
            self.deg_avail[v] += 1;
        }
        self.avail_by_lead[self.lead[c]] += 1;
    }

    fn is_excluded(&self, c: usize) -> bool {
        self.exc >> c & 1 == 1
    }

    /// First vertex whose candidates are not all decided once `i` is next.
    fn frontier(&self, i: usize) -> usize {
        if i < self.m {
            self.lead[i]
        } else {
            self.n
        }
    }

    /// Degrees of finished vertices must be non-increasing and bound all others.
    fn degree_order_ok(&self, p: usize) -> bool {
        if self.symmetry != Symmetry::DegreeOrder || p == 0 {
            return true;
        }
        let finished = p.min(self.n);
        if (1..finished).any(|v| self.deg_inc[v] > self.deg_inc[v - 1]) {
            return false;
        }
        let cap = self.deg_inc[finished - 1];
        (finished..self.n).all(|v| self.deg_inc[v] <= cap)
    }

    fn bound(&self, p: usize) -> usize {
        let n = self.n;
        let mut best = self.m - self.exc.count_ones() as usize;
        if let Some(Some(e)) = self.smaller.get(n - 1) {
            let low = self.deg_avail.iter().min().copied().unwrap_or(0) as usize;
            best = best.min(e + low);
        }
        let mut before = 0usize;
        let mut after: usize = self.avail_by_lead.iter().map(|&x| x as usize).sum();
        for q in 1..=p.min(n) {
            before += self.inc_by_lead[q - 1] as usize;
            after -= self.avail_by_lead[q - 1] as usize;
            let inside = match self.smaller.get(n - q) {
                Some(Some(e)) => after.min(*e),
                _ => after,
            };
            best = best.min(before + inside);
        }
        if self.symmetry == Symmetry::DegreeOrder && p >= 1 {
            let finished = p.min(n);
            let mut total: usize = self.deg_inc[..finished].iter().map(|&d| d as usize).sum();
            let mut cap = self.deg_inc[finished - 1];
            for v in finished..n {
                cap = cap.min(self.deg_avail[v]);
                total += cap as usize;
            }
            best = best.min(total / self.idx.k);
        }
        best
    }

    fn tick(&mut self) -> bool {
        self.stats.nodes += 1;
        self.pending += 1;
        if self.pending >= 1024 {
            let ok = self.budget.charge(self.pending);
            self.pending = 0;
            return ok;
        }
        !self.budget.stopped()
    }

    /// Includes `c` and excludes every candidate left as the last missing
    /// member of a copy. Returns the newly excluded candidates.
    fn include_and_propagate(&mut self, c: usize) -> Vec<usize> {
        self.include(c);
        let mut forced = Vec::new();
        for &copy in &self.idx.copies_of[c] {
            let rest = copy & !self.inc;
            debug_assert!(rest != 0, "included candidates complete a copy");
            if rest.count_ones() == 1 {
                let d = rest.trailing_zeros() as usize;
                if !self.is_excluded(d) {
                    self.exclude(d);
                    forced.push(d);
                }
            }
        }
        forced
    }

    fn undo_include(&mut self, c: usize, forced: Vec<usize>) {
        for d in forced {
            self.unexclude(d);
        }
        self.uninclude(c);
    }

    fn include_allowed(&mut self, c: usize, p: usize) -> bool {
        if self.symmetry == Symmetry::DegreeOrder && p >= 1 {
            let cap = self.deg_inc[p - 1];
            if self.idx.candidates[c].iter().any(|u| u >= p && self.deg_inc[u] + 1 > cap) {
                self.stats.symmetry_prunes += 1;
                return false;
            }
        }
        true
    }

    fn dfs(&mut self, i: usize) {
        if !self.tick() {
            return;
        }
        let p = self.frontier(i);
        if !self.degree_order_ok(p) {
            self.stats.symmetry_prunes += 1;
            return;
        }
        let best = self.budget.best.load(Ordering::Relaxed);
        if i == self.m {
            let size = self.inc.count_ones() as usize;
            if size > best && self.found.is_none_or(|f| size > f.0) {
                self.found = Some((size, self.inc));
                self.budget.best.fetch_max(size, Ordering::SeqCst);
            }
            return;
        }
        if self.bound(p) <= best {
            self.stats.bound_prunes += 1;
            return;
        }
        if self.is_excluded(i) {
            self.dfs(i + 1);
            return;
        }
        if self.include_allowed(i, p) {
            let forced = self.include_and_propagate(i);
            self.dfs(i + 1);
            self.undo_include(i, forced);
        }
        if self.symmetry == Symmetry::Anchor && i == 0 {
            self.stats.symmetry_prunes += 1;
            return;
        }
        self.exclude(i);
        self.dfs(i + 1);
        self.unexclude(i);
    }

    /// Enumerates subtree roots `depth` binary decisions below the current node.
    fn split(&mut self, i: usize, depth: usize, out: &mut Vec<Task>) {
        let p = self.frontier(i);
        if !self.degree_order_ok(p) {
            self.stats.symmetry_prunes += 1;
            return;
        }
        if depth == 0 || i == self.m {
            out.push(Task { inc: self.inc, exc: self.exc, i });
            return;
        }
        if self.is_excluded(i) {
            self.split(i + 1, depth, out);
            return;
        }
        if self.include_allowed(i, p) {
            let forced = self.include_and_propagate(i);
            self.split(i + 1, depth - 1, out);
            self.undo_include(i, forced);
        }
        if self.symmetry == Symmetry::Anchor && i == 0 {
            self.stats.symmetry_prunes += 1;
            return;
        }
        self.exclude(i);
        self.split(i + 1, depth - 1, out);
        self.unexclude(i);
    }
}
