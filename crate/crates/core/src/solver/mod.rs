//! Exact minimum-weight search.
//!
//! [`brute_force`] enumerates every labeling and is the oracle for small
//! graphs. [`solve`] runs the branch-and-bound in [`search`] on one thread;
//! the `plsrd` crate drives the same engine from several workers and adds a
//! wall-clock budget.

mod brute;
pub mod search;

use alloc::format;
use core::fmt;
use core::time::Duration;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labeling::{is_valid, Label, Labeling};

pub use brute::{enumerate_valid, ValidLabelings, BRUTE_FORCE_LIMIT, ENUMERATE_LIMIT};
use search::{branching_order, Searcher, SharedState};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Algorithm {
    BruteForce,
    #[default]
    Backtracking,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::BruteForce => "BruteForce",
            Algorithm::Backtracking => "Backtracking",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "BruteForce" => Some(Algorithm::BruteForce),
            "Backtracking" => Some(Algorithm::Backtracking),
            _ => None,
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOptions {
    pub algorithm: Algorithm,
    /// Worker threads; the core solver always runs one.
    pub workers: usize,
    pub node_budget: Option<u64>,
    /// Wall-clock limit, enforced by the threaded driver in `plsrd`.
    pub time_budget: Option<Duration>,
    /// A known valid labeling; the search only looks for lighter ones.
    pub warm_start: Option<Labeling>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { algorithm: Algorithm::Backtracking, workers: 1, node_budget: None, time_budget: None, warm_start: None }
    }
}

impl SolveOptions {
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.workers == 0 {
            return Err(Error::InvalidOptions("worker count must be at least 1".into()));
        }
        if self.node_budget == Some(0) {
            return Err(Error::InvalidOptions("node budget must be positive".into()));
        }
        if self.time_budget == Some(Duration::ZERO) {
            return Err(Error::InvalidOptions("time budget must be positive".into()));
        }
        if let Some(start) = &self.warm_start {
            if start.len() != g.n() {
                return Err(Error::InvalidOptions(format!(
                    "warm start has {} labels, graph has {} vertices",
                    start.len(),
                    g.n()
                )));
            }
            if !is_valid(g, start) {
                return Err(Error::InvalidOptions("warm start is not a valid labeling".into()));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub optimum: i64,
    pub witness: Labeling,
    pub nodes_explored: u64,
    pub proven_optimal: bool,
    pub algorithm: Algorithm,
}

/// Brute-force minimum with the lexicographically smallest witness.
pub fn brute_force(g: &Graph) -> Result<SolveResult> {
    let (optimum, witness, examined) = brute::brute_force(g)?;
    Ok(SolveResult { optimum, witness, nodes_explored: examined, proven_optimal: true, algorithm: Algorithm::BruteForce })
}

/// Starting incumbent: the warm start if given, otherwise all ones.
pub fn initial_incumbent(g: &Graph, opts: &SolveOptions) -> Labeling {
    opts.warm_start.clone().unwrap_or_else(|| Labeling::all_ones(g.n()))
}

/// Combines the incumbent and the best labeling a search found.
pub fn finish(shared: &SharedState, incumbent: Labeling, found: Option<(i64, Labeling)>) -> SolveResult {
    let (optimum, witness) = match found {
        Some((w, labeling)) if w < incumbent.weight() => (w, labeling),
        _ => (incumbent.weight(), incumbent),
    };
    SolveResult {
        optimum,
        witness,
        nodes_explored: shared.nodes(),
        proven_optimal: !shared.exhausted(),
        algorithm: Algorithm::Backtracking,
    }
}

/// Search state for [`canonicalize`] on `result`.
pub fn canonical_control(result: &SolveResult, node_budget: Option<u64>) -> SharedState {
    SharedState::new(result.optimum + 1, node_budget)
}

/// Replaces the witness by the lexicographically smallest labeling of the
/// same weight, unless `control` stops the pass first.
pub fn canonicalize(g: &Graph, result: &mut SolveResult, control: &SharedState) {
    let mut searcher = Searcher::new(g, control, (0..g.n()).collect()).with_value_order(Label::ALL).first_only();
    searcher.run_from(&[]);
    if let Some((w, labeling)) = searcher.into_best() {
        if w == result.optimum {
            result.witness = labeling;
        }
    }
    result.nodes_explored += control.nodes();
}

/// Exact minimum weight on the calling thread.
///
/// `workers` and `time_budget` are accepted but not acted on here; use
/// `plsrd::solve` for threads and wall-clock limits.
pub fn solve(g: &Graph, opts: &SolveOptions) -> Result<SolveResult> {
    opts.validate(g)?;
    if opts.algorithm == Algorithm::BruteForce {
        return brute_force(g);
    }
    let incumbent = initial_incumbent(g, opts);
    let shared = SharedState::new(incumbent.weight(), opts.node_budget);
    let mut searcher = Searcher::new(g, &shared, branching_order(g));
    searcher.run_from(&[]);
    let found = searcher.into_best();
    let mut result = finish(&shared, incumbent, found);
    let control = canonical_control(&result, opts.node_budget);
    canonicalize(g, &mut result, &control);
    Ok(result)
}
