//! Depth-first branch-and-bound over partial labelings.
//!
//! The searcher keeps, for every vertex, the assigned part of its closed
//! neighbourhood sum and the number of assigned `-1`/`2` neighbours, so each
//! assignment is checked in `O(deg)`. A partial labeling is cut when
//!
//! * some closed neighbourhood cannot reach a sum of 1 even if every free
//!   vertex in it were labelled `2`,
//! * a `-1` vertex has two `2` neighbours, or has none and no free neighbour
//!   that could still become its exclusive guard,
//! * a `2` vertex is adjacent to two `-1` vertices, or
//! * the completion bound reaches the shared incumbent.

use alloc::vec;
use alloc::vec::Vec;
use core::sync::atomic::{AtomicBool, AtomicI64, AtomicU64, Ordering};

use crate::graph::Graph;
use crate::labeling::{Label, Labeling};

const FLUSH_EVERY: u64 = 1 << 12;

/// State shared by every worker of one search.
#[derive(Debug)]
pub struct SharedState {
    best_weight: AtomicI64,
    stop: AtomicBool,
    exhausted: AtomicBool,
    nodes: AtomicU64,
    node_budget: Option<u64>,
}

impl SharedState {
    /// Search for labelings of weight strictly below `incumbent`.
    pub fn new(incumbent: i64, node_budget: Option<u64>) -> Self {
        SharedState {
            best_weight: AtomicI64::new(incumbent),
            stop: AtomicBool::new(false),
            exhausted: AtomicBool::new(false),
            nodes: AtomicU64::new(0),
            node_budget,
        }
    }

    pub fn best_weight(&self) -> i64 {
        self.best_weight.load(Ordering::Acquire)
    }

    /// Asks every worker to stop; the result is then not proven optimal.
    pub fn request_stop(&self) {
        self.exhausted.store(true, Ordering::Release);
        self.stop.store(true, Ordering::Release);
    }

    pub fn is_stopped(&self) -> bool {
        self.stop.load(Ordering::Acquire)
    }

    /// True when a budget or an external stop cut the search short.
    pub fn exhausted(&self) -> bool {
        self.exhausted.load(Ordering::Acquire)
    }

    pub fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Acquire)
    }

    fn add_nodes(&self, count: u64) {
        let total = self.nodes.fetch_add(count, Ordering::AcqRel) + count;
        if self.node_budget.is_some_and(|budget| total >= budget) {
            self.request_stop();
        }
    }

    fn offer(&self, weight: i64) -> bool {
        self.best_weight.fetch_min(weight, Ordering::AcqRel) > weight
    }
}

/// Branching order: descending degree, ties by index.
pub fn branching_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (core::cmp::Reverse(g.degree(v)), v));
    order
}

/// Labels tried at each vertex in the main search.
pub const MAIN_VALUE_ORDER: [Label; 3] = [Label::One, Label::Two, Label::Minus];

/// A single-threaded worker over one graph.
pub struct Searcher<'a> {
    g: &'a Graph,
    shared: &'a SharedState,
    order: Vec<usize>,
    values: [Label; 3],
    first_only: bool,
    cubic: bool,

    labels: Vec<Option<Label>>,
    closed_sum: Vec<i32>,
    closed_free: Vec<u32>,
    nbr_free: Vec<u32>,
    nbr_two: Vec<u32>,
    nbr_minus: Vec<u32>,
    count_minus: usize,
    count_one: usize,
    count_two: usize,
    assigned: usize,

    pending_nodes: u64,
    best: Option<(i64, Vec<Label>)>,
}

impl<'a> Searcher<'a> {
    pub fn new(g: &'a Graph, shared: &'a SharedState, order: Vec<usize>) -> Self {
        debug_assert_eq!(order.len(), g.n());
        let n = g.n();
        Searcher {
            g,
            shared,
            order,
            values: MAIN_VALUE_ORDER,
            first_only: false,
            cubic: g.is_regular(3),
            labels: vec![None; n],
            closed_sum: vec![0; n],
            closed_free: (0..n).map(|v| g.degree(v) as u32 + 1).collect(),
            nbr_free: (0..n).map(|v| g.degree(v) as u32).collect(),
            nbr_two: vec![0; n],
            nbr_minus: vec![0; n],
            count_minus: 0,
            count_one: 0,
            count_two: 0,
            assigned: 0,
            pending_nodes: 0,
            best: None,
        }
    }

    /// Tries labels in the given order at every vertex.
    pub fn with_value_order(mut self, values: [Label; 3]) -> Self {
        self.values = values;
        self
    }

    /// Stops at the first labeling found below the incumbent.
    pub fn first_only(mut self) -> Self {
        self.first_only = true;
        self
    }

    /// Best labeling found by this worker, indexed by vertex.
    pub fn into_best(mut self) -> Option<(i64, Labeling)> {
        self.flush();
        self.best.take().map(|(w, labels)| (w, Labeling::new(labels)))
    }

    /// Lower bound on the weight of any valid completion.
    ///
    /// With `a`, `b`, `c` the final counts of `-1`, `1`, `2`, the weight is
    /// `n - 2a + c`. Every `-1` owns a distinct guard (`c >= a`), and on
    /// 3-regular graphs every `-1` needs a `1` neighbour while a `1` serves at
    /// most two (`2b >= a`). The weight falls as `a` grows, so the bound takes
    /// the largest `a` whose mandatory guards and `1`s still fit in the free
    /// vertices.
    fn lower_bound(&self) -> i64 {
        let free = self.g.n() - self.assigned;
        let (a0, b0, c0) = (self.count_minus, self.count_one, self.count_two);
        let needed = |extra: usize| {
            let a = a0 + extra;
            let twos = a.saturating_sub(c0);
            let ones = if self.cubic { a.div_ceil(2).saturating_sub(b0) } else { 0 };
            extra + twos + ones
        };
        let mut lo = 0;
        let mut hi = free;
        while lo < hi {
            let mid = (lo + hi).div_ceil(2);
            if needed(mid) <= free {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        let a = a0 + lo;
        let c = c0.max(a);
        self.g.n() as i64 - 2 * a as i64 + c as i64
    }

    fn apply(&mut self, x: usize, label: Label) {
        let value = label.value() as i32;
        self.labels[x] = Some(label);
        self.assigned += 1;
        match label {
            Label::Minus => self.count_minus += 1,
            Label::One => self.count_one += 1,
            Label::Two => self.count_two += 1,
        }
        self.closed_sum[x] += value;
        self.closed_free[x] -= 1;
        for &w in self.g.neighbors(x) {
            self.closed_sum[w] += value;
            self.closed_free[w] -= 1;
            self.nbr_free[w] -= 1;
            match label {
                Label::Two => self.nbr_two[w] += 1,
                Label::Minus => self.nbr_minus[w] += 1,
                Label::One => {}
            }
        }
    }

    fn undo(&mut self, x: usize) {
        let label = self.labels[x].take().expect("undo of an unassigned vertex");
        let value = label.value() as i32;
        self.assigned -= 1;
        match label {
            Label::Minus => self.count_minus -= 1,
            Label::One => self.count_one -= 1,
            Label::Two => self.count_two -= 1,
        }
        self.closed_sum[x] -= value;
        self.closed_free[x] += 1;
        for &w in self.g.neighbors(x) {
            self.closed_sum[w] -= value;
            self.closed_free[w] += 1;
            self.nbr_free[w] += 1;
            match label {
                Label::Two => self.nbr_two[w] -= 1,
                Label::Minus => self.nbr_minus[w] -= 1,
                Label::One => {}
            }
        }
    }

    fn vertex_ok(&self, w: usize) -> bool {
        if self.closed_sum[w] + 2 * (self.closed_free[w] as i32) < 1 {
            return false;
        }
        match self.labels[w] {
            Some(Label::Minus) => match self.nbr_two[w] {
                0 => self
                    .g
                    .neighbors(w)
                    .iter()
                    .any(|&y| self.labels[y].is_none() && self.nbr_minus[y] == 1),
                1 => true,
                _ => false,
            },
            Some(Label::Two) => self.nbr_minus[w] <= 1,
            _ => true,
        }
    }

    /// Conditions that can change when `x` is assigned.
    fn consistent_around(&self, x: usize) -> bool {
        if !self.vertex_ok(x) {
            return false;
        }
        for &w in self.g.neighbors(x) {
            if !self.vertex_ok(w) {
                return false;
            }
            // A free neighbour `w` of a new -1 may have been the only
            // possible guard of another -1 at distance two.
            if self.labels[x] == Some(Label::Minus) && self.labels[w].is_none() {
                for &z in self.g.neighbors(w) {
                    if z != x && self.labels[z] == Some(Label::Minus) && !self.vertex_ok(z) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn flush(&mut self) {
        if self.pending_nodes > 0 {
            self.shared.add_nodes(self.pending_nodes);
            self.pending_nodes = 0;
        }
    }

    fn tick(&mut self) -> bool {
        self.pending_nodes += 1;
        if self.pending_nodes >= FLUSH_EVERY {
            self.flush();
        }
        !self.shared.is_stopped()
    }

    fn record_leaf(&mut self) {
        let weight = self.count_one as i64 + 2 * self.count_two as i64 - self.count_minus as i64;
        if self.shared.offer(weight) || self.best.as_ref().map_or(true, |(w, _)| weight < *w) {
            let labels = self.labels.iter().map(|l| l.expect("leaf is fully assigned")).collect();
            self.best = Some((weight, labels));
        }
    }

    /// Returns true when the search should unwind (first-only hit or stop).
    fn dfs(&mut self, depth: usize) -> bool {
        if !self.tick() {
            return true;
        }
        if self.lower_bound() >= self.shared.best_weight() {
            return false;
        }
        if depth == self.order.len() {
            self.record_leaf();
            return self.first_only;
        }
        let v = self.order[depth];
        for label in self.values {
            self.apply(v, label);
            let done = self.consistent_around(v) && self.dfs(depth + 1);
            self.undo(v);
            if done {
                return true;
            }
        }
        false
    }

    /// Assigns `prefix` to the first vertices of the order and searches the
    /// remaining subtree. Returns false if the prefix is already infeasible.
    pub fn run_from(&mut self, prefix: &[Label]) -> bool {
        let mut applied = 0;
        let mut feasible = true;
        for (i, &label) in prefix.iter().enumerate() {
            let v = self.order[i];
            self.apply(v, label);
            applied += 1;
            if !self.consistent_around(v) {
                feasible = false;
                break;
            }
        }
        if feasible {
            self.dfs(prefix.len());
        }
        for i in (0..applied).rev() {
            self.undo(self.order[i]);
        }
        self.flush();
        feasible
    }

    /// Feasible label prefixes of length `depth` (fewer if the graph is
    /// smaller), in search order.
    pub fn frontier(&mut self, depth: usize) -> Vec<Vec<Label>> {
        let depth = depth.min(self.order.len());
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(depth);
        self.collect_frontier(depth, &mut prefix, &mut out);
        self.flush();
        out
    }

    fn collect_frontier(&mut self, depth: usize, prefix: &mut Vec<Label>, out: &mut Vec<Vec<Label>>) {
        self.tick();
        if self.lower_bound() >= self.shared.best_weight() {
            return;
        }
        if prefix.len() == depth {
            out.push(prefix.clone());
            return;
        }
        let v = self.order[prefix.len()];
        for label in self.values {
            self.apply(v, label);
            if self.consistent_around(v) {
                prefix.push(label);
                self.collect_frontier(depth, prefix, out);
                prefix.pop();
            }
            self.undo(v);
        }
    }
}
