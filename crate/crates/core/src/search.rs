//! Vertex-ordered branch and bound over guard assignments.
//!
//! Vertices are decided in ascending index order, trying the largest value
//! first, so the first accepted assignment is the least one in that order
//! (for sets: the lexicographically least sorted vertex list). A vertex whose
//! closed neighbourhood is fully decided is checked against the local
//! condition immediately, and a covering estimate prunes branches that cannot
//! finish inside the weight budget.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::guard::GuardFunction;
use crate::set::{full_mask, VertexSet};

/// Per-vertex condition every finished assignment must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Local {
    /// Some guard in `N[v]`.
    Dominate,
    /// `f(v) ≥ 1` or a neighbour holds two guards.
    Roman,
    /// `v` is guarded or has at least `k` guarded neighbours.
    KDominate(u32),
}

pub(crate) struct OrderedSearch<'g> {
    g: &'g Graph,
    n: usize,
    max_value: u8,
    local: Local,
    /// `closes_at[i]`: vertices whose closed neighbourhood has maximum index `i`.
    closes_at: Vec<u64>,
    pub nodes: u64,
}

impl<'g> OrderedSearch<'g> {
    pub fn new(g: &'g Graph, max_value: u8, local: Local) -> Self {
        let n = g.order();
        let mut closes_at = vec![0u64; n];
        for v in 0..n {
            let last = 63 - g.closed_row(v).leading_zeros() as usize;
            closes_at[last] |= 1 << v;
        }
        OrderedSearch { g, n, max_value, local, closes_at, nodes: 0 }
    }

    /// Runs the search with total weight at most `budget`, calling `accept` on
    /// every complete assignment that meets the local condition. The search
    /// stops as soon as `accept` returns true, and that assignment is returned.
    pub fn run<F>(&mut self, budget: usize, mut accept: F) -> Option<GuardFunction>
    where
        F: FnMut(&GuardFunction) -> bool,
    {
        let mut found = None;
        self.descend(0, 0, 0, 0, 0, budget, &mut accept, &mut found);
        found
    }

    /// Smallest weight in `lo..=hi` admitting an accepted assignment, with the first such assignment.
    pub fn minimum<F>(&mut self, lo: usize, hi: usize, mut accept: F) -> Option<GuardFunction>
    where
        F: FnMut(&GuardFunction) -> bool,
    {
        (lo..=hi).find_map(|w| self.run(w, &mut accept))
    }

    #[allow(clippy::too_many_arguments)]
    fn descend<F>(
        &mut self,
        i: usize,
        ones: u64,
        twos: u64,
        dom: u64,
        weight: usize,
        budget: usize,
        accept: &mut F,
        found: &mut Option<GuardFunction>,
    ) -> bool
    where
        F: FnMut(&GuardFunction) -> bool,
    {
        self.nodes += 1;
        if i == self.n {
            let f = GuardFunction::from_masks(VertexSet::from_bits(ones, self.n), VertexSet::from_bits(twos, self.n));
            if accept(&f) {
                *found = Some(f);
                return true;
            }
            return false;
        }
        if weight + self.lower_bound(i, ones, twos, dom) > budget {
            return false;
        }
        let bit = 1u64 << i;
        for value in (0..=self.max_value).rev() {
            let w = weight + value as usize;
            if w > budget {
                continue;
            }
            let (o, t, d) = match value {
                0 => (ones, twos, dom),
                1 => (ones | bit, twos, dom | self.g.closed_row(i)),
                _ => (ones, twos | bit, dom | self.g.closed_row(i)),
            };
            if !self.closed_ok(self.closes_at[i], o, t, d) {
                continue;
            }
            if self.descend(i + 1, o, t, d, w, budget, accept, found) {
                return true;
            }
        }
        false
    }

    #[inline]
    fn closed_ok(&self, closing: u64, ones: u64, twos: u64, dom: u64) -> bool {
        match self.local {
            Local::Dominate => closing & !dom == 0,
            Local::Roman => closing & !self.roman_cover(ones, twos) == 0,
            Local::KDominate(k) => {
                let guarded = ones | twos;
                VertexSet::from_bits(closing & !guarded, self.n)
                    .iter()
                    .all(|v| (self.g.row(v) & guarded).count_ones() >= k)
            }
        }
    }

    #[inline]
    fn roman_cover(&self, ones: u64, twos: u64) -> u64 {
        let mut c = ones | twos;
        let mut t = twos;
        while t != 0 {
            let v = t.trailing_zeros() as usize;
            t &= t - 1;
            c |= self.g.row(v);
        }
        c
    }

    /// Weight still needed to satisfy every vertex, using only vertices `i..n`.
    fn lower_bound(&self, i: usize, ones: u64, twos: u64, dom: u64) -> usize {
        let unsatisfied = match self.local {
            Local::Dominate | Local::KDominate(_) => !dom,
            Local::Roman => !self.roman_cover(ones, twos),
        } & full_mask(self.n);
        if unsatisfied == 0 {
            return 0;
        }
        let open = full_mask(self.n) & !full_mask(i);
        let mut best_cover = 0u32;
        let mut rest = open;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            best_cover = best_cover.max((self.g.closed_row(u) & unsatisfied).count_ones());
        }
        let need = unsatisfied.count_ones() as usize;
        if best_cover == 0 {
            return usize::MAX / 2;
        }
        let per_cost = match self.local {
            // A double guard covers N[u] at cost 2; a single one covers only u.
            Local::Roman => {
                if best_cover >= 2 {
                    return (2 * need).div_ceil(best_cover as usize);
                }
                1
            }
            _ => best_cover as usize,
        };
        need.div_ceil(per_cost)
    }
}
