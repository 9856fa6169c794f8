use std::sync::atomic::Ordering;

use super::{Budget, Instance, Outcome, SearchConfig, SearchStats, SearchStrategy};
use crate::search::CopyIndex;

/// When every copy has at most two edges, a pattern-free family is exactly an
/// independent set of the conflict graph on candidates, so the answer is a
/// maximum clique of its complement. Solved with greedy-colouring bounds.
pub struct CliqueReduction;

impl SearchStrategy for CliqueReduction {
    fn name(&self) -> &'static str {
        "clique"
    }

    fn applicable(&self, index: &CopyIndex) -> bool {
        index.max_copy_size() <= 2
    }

    fn solve(&self, inst: &Instance<'_>, _cfg: &SearchConfig, budget: &Budget) -> Outcome {
        let idx = inst.index;
        let allowed = idx.all() & !idx.banned();
        let mut compat: Vec<u128> = (0..idx.len()).map(|c| allowed & !(1u128 << c)).collect();
        for &copy in idx.copies.iter().filter(|c| c.count_ones() == 2) {
            let a = copy.trailing_zeros() as usize;
            let b = 127 - copy.leading_zeros() as usize;
            compat[a] &= !(1u128 << b);
            compat[b] &= !(1u128 << a);
        }
        budget.best.store(inst.initial.0, Ordering::SeqCst);
        let mut s = Clique { compat: &compat, budget, best: inst.initial, stats: SearchStats::default(), pending: 0 };
        s.expand(0, allowed);
        Outcome { size: s.best.0, mask: s.best.1, exhaustive: !budget.stopped(), stats: s.stats }
    }
}

struct Clique<'a> {
    compat: &'a [u128],
    budget: &'a Budget,
    best: (usize, u128),
    stats: SearchStats,
    pending: u64,
}

impl Clique<'_> {
    fn expand(&mut self, clique: u128, mut pool: u128) {
        self.stats.nodes += 1;
        self.pending += 1;
        if self.pending >= 1024 {
            let ok = self.budget.charge(self.pending);
            self.pending = 0;
            if !ok {
                return;
            }
        }
        let size = clique.count_ones() as usize;
        if pool == 0 {
            if size > self.best.0 {
                self.best = (size, clique);
                self.budget.best.fetch_max(size, Ordering::SeqCst);
            }
            return;
        }
        // Greedy colouring: a clique takes at most one vertex per colour class.
        let mut order: Vec<(usize, usize)> = Vec::with_capacity(pool.count_ones() as usize);
        let mut uncoloured = pool;
        let mut colour = 0;
        while uncoloured != 0 {
            colour += 1;
            let mut q = uncoloured;
            while q != 0 {
                let v = q.trailing_zeros() as usize;
                q &= !(1u128 << v) & !self.compat[v];
                uncoloured &= !(1u128 << v);
                order.push((v, colour));
            }
        }
        for &(v, c) in order.iter().rev() {
            if size + c <= self.best.0 {
                self.stats.bound_prunes += 1;
                return;
            }
            self.expand(clique | 1u128 << v, pool & self.compat[v]);
            pool &= !(1u128 << v);
        }
        if size > self.best.0 {
            self.best = (size, clique);
        }
    }
}
