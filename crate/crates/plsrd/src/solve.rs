//! Multi-threaded driver for the branch-and-bound search.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::{Condvar, Mutex};
use std::thread;
use std::time::Instant;

use plsrd_core::solver::search::{branching_order, Searcher, SharedState};
use plsrd_core::solver::{self, canonical_control, canonicalize, finish, initial_incumbent};
use plsrd_core::{Algorithm, Graph, Labeling, SolveOptions, SolveResult};

use crate::error::Result;

/// Environment variable holding the default worker count.
pub const THREADS_ENV: &str = "PLSRD_THREADS";

/// Worker count from [`THREADS_ENV`], or 1 when unset or unparsable.
pub fn default_workers() -> usize {
    std::env::var(THREADS_ENV).ok().and_then(|s| s.trim().parse().ok()).filter(|&n| n > 0).unwrap_or(1)
}

/// Stops the given searches once the deadline passes, unless dropped first.
struct Watchdog {
    done: Mutex<bool>,
    wake: Condvar,
}

impl Watchdog {
    fn new() -> Self {
        Watchdog { done: Mutex::new(false), wake: Condvar::new() }
    }

    fn run(&self, deadline: Instant, targets: &[&SharedState]) {
        let mut done = self.done.lock().unwrap();
        while !*done {
            let now = Instant::now();
            if now >= deadline {
                for t in targets {
                    t.request_stop();
                }
                return;
            }
            done = self.wake.wait_timeout(done, deadline - now).unwrap().0;
        }
    }

    fn finish(&self) {
        *self.done.lock().unwrap() = true;
        self.wake.notify_all();
    }
}

/// Prefix length giving every worker several subtrees to pull from.
fn split_depth(workers: usize, n: usize) -> usize {
    let mut depth = 0;
    let mut leaves = 1usize;
    while leaves < 8 * workers && depth < n {
        leaves = leaves.saturating_mul(3);
        depth += 1;
    }
    depth
}

fn search_parallel(g: &Graph, shared: &SharedState, workers: usize) -> Option<(i64, Labeling)> {
    let order = branching_order(g);
    if workers == 1 {
        let mut searcher = Searcher::new(g, shared, order);
        searcher.run_from(&[]);
        return searcher.into_best();
    }
    let prefixes = Searcher::new(g, shared, order.clone()).frontier(split_depth(workers, g.n()));
    let next = AtomicUsize::new(0);
    thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                let order = order.clone();
                let (prefixes, next) = (&prefixes, &next);
                s.spawn(move || {
                    let mut searcher = Searcher::new(g, shared, order);
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        if i >= prefixes.len() || shared.is_stopped() {
                            break;
                        }
                        searcher.run_from(&prefixes[i]);
                    }
                    searcher.into_best()
                })
            })
            .collect();
        handles
            .into_iter()
            .filter_map(|h| h.join().expect("search worker panicked"))
            .min_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)))
    })
}

/// Exact minimum weight using `opts.workers` threads and honouring
/// `opts.time_budget`.
///
/// The optimum does not depend on the worker count. The witness is the
/// lexicographically smallest optimal labeling whenever the canonical pass
/// completes within the budgets.
pub fn solve(g: &Graph, opts: &SolveOptions) -> Result<SolveResult> {
    opts.validate(g)?;
    if opts.algorithm == Algorithm::BruteForce {
        return Ok(solver::brute_force(g)?);
    }
    let incumbent = initial_incumbent(g, opts);
    let shared = SharedState::new(incumbent.weight(), opts.node_budget);
    let deadline = opts.time_budget.map(|t| Instant::now() + t);
    let timed_out = AtomicBool::new(false);

    let run_phase = |state: &SharedState, body: &mut dyn FnMut()| match deadline {
        None => body(),
        Some(deadline) => {
            let watchdog = Watchdog::new();
            thread::scope(|s| {
                s.spawn(|| watchdog.run(deadline, &[state]));
                body();
                watchdog.finish();
            });
            if state.is_stopped() && Instant::now() >= deadline {
                timed_out.store(true, Ordering::Relaxed);
            }
        }
    };

    let mut found = None;
    run_phase(&shared, &mut || found = search_parallel(g, &shared, opts.workers));
    let mut result = finish(&shared, incumbent, found);
    let control = canonical_control(&result, opts.node_budget);
    if !timed_out.load(Ordering::Relaxed) {
        run_phase(&control, &mut || canonicalize(g, &mut result, &control));
    }
    Ok(result)
}
