//! Branch and bound over labelings for the largest balanced L1 norm.
//!
//! Vertices are labeled in breadth-first order from vertex 0; each child
//! takes its parent's label plus -1, 0 or +1. Every label of a balanced
//! labeling lies in `[-(n+2), n+2]`: balance puts an integer minimizer of
//! `Phi` in `[-2, 2]`, so the median is within 5/2 of zero, and the labels
//! form an interval of width at most `n - 1` containing the median. Negating
//! a balanced labeling keeps it balanced with the same norm, so the root
//! label only ranges over `0..=n+2`.

use std::collections::BTreeSet;

use crate::labeling::{is_balanced, phi, Labeling};
use crate::tree::Tree;

use super::two_level_labeling;

pub(super) struct LabelSearch {
    order: Vec<usize>,
    /// Position of each vertex's parent in `order` (unused for the root).
    parent_pos: Vec<usize>,
    window: i64,
    labels: Vec<i64>,
    bound: Vec<i64>,
    best: i64,
    collect_ties: bool,
    found: Vec<Vec<i64>>,
}

impl LabelSearch {
    pub(super) fn new(t: &Tree) -> LabelSearch {
        let n = t.n();
        let (order, parent) = t.bfs_order(0);
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let parent_pos = order
            .iter()
            .map(|&v| if v == 0 { 0 } else { pos[parent[v]] })
            .collect();
        LabelSearch {
            order,
            parent_pos,
            window: n as i64 + 2,
            labels: vec![0; n],
            bound: vec![0; n],
            best: 0,
            collect_ties: false,
            found: Vec::new(),
        }
    }

    fn n(&self) -> usize {
        self.order.len()
    }

    /// Largest norm with one maximizer, normalized to a nonnegative median.
    pub(super) fn maximum(t: &Tree) -> (i64, Labeling) {
        let mut s = LabelSearch::new(t);
        // The two-level labeling is balanced and has root label 1, so the
        // search is guaranteed to meet its norm.
        let seed = two_level_labeling(t);
        debug_assert!(is_balanced(&seed));
        s.best = seed.norm() - 1;
        s.run();
        let mut witness = s.to_vertex_order(s.found.last().unwrap());
        if witness.median().twice() < 0 {
            witness = witness.negated();
        }
        (s.best, witness)
    }

    /// Every balanced labeling of norm `max`, both signs, sorted.
    pub(super) fn all_with_norm(t: &Tree, max: i64) -> Vec<Labeling> {
        let mut s = LabelSearch::new(t);
        s.best = max;
        s.collect_ties = true;
        s.run();
        let mut set = BTreeSet::new();
        for raw in std::mem::take(&mut s.found) {
            let h = s.to_vertex_order(&raw);
            set.insert(h.negated());
            set.insert(h);
        }
        set.into_iter().collect()
    }

    fn to_vertex_order(&self, by_pos: &[i64]) -> Labeling {
        let mut out = vec![0; self.n()];
        for (i, &v) in self.order.iter().enumerate() {
            out[v] = by_pos[i];
        }
        Labeling::new(out)
    }

    fn run(&mut self) {
        for root in 0..=self.window {
            self.labels[0] = root;
            self.descend(1, root);
        }
    }

    /// Admissible bound on the norm still to come from positions `pos..`.
    fn remaining_bound(&mut self, pos: usize) -> i64 {
        let mut total = 0;
        for p in pos..self.n() {
            let pp = self.parent_pos[p];
            let base = if pp < pos { self.labels[pp].abs() } else { self.bound[pp] };
            let b = (base + 1).min(self.window);
            self.bound[p] = b;
            total += b;
        }
        total
    }

    fn descend(&mut self, pos: usize, norm: i64) {
        if pos == self.n() {
            self.accept(norm);
            return;
        }
        let ub = norm + self.remaining_bound(pos);
        if ub < self.best || (!self.collect_ties && ub == self.best) {
            return;
        }
        let parent = self.labels[self.parent_pos[pos]];
        for d in [1, 0, -1] {
            let l = parent + d;
            if l.abs() > self.window {
                continue;
            }
            self.labels[pos] = l;
            self.descend(pos + 1, norm + l.abs());
        }
    }

    fn accept(&mut self, norm: i64) {
        let better = if self.collect_ties { norm == self.best } else { norm > self.best };
        if !better {
            return;
        }
        // Balance: Phi(0) <= Phi(3) and Phi(0) <= Phi(-3).
        if norm > phi(&self.labels, 3) || norm > phi(&self.labels, -3) {
            return;
        }
        if self.collect_ties {
            self.found.push(self.labels.clone());
        } else {
            self.best = norm;
            self.found = vec![self.labels.clone()];
        }
    }
}
