//! Perfect locating signed Roman domination (PLSRD) on simple undirected graphs.
//!
//! A PLSRD function labels every vertex with `-1`, `1` or `2` so that
//!
//! * every `-1` vertex has exactly one neighbour labelled `2` (its guard),
//! * no `2` vertex guards two different `-1` vertices,
//! * every closed neighbourhood sums to at least `1`.
//!
//! The crate provides the graph families the closed forms are stated for,
//! the validator, deterministic upper-bound constructions, closed-form values
//! and lower bounds, maximum 2-packings, and an exact branch-and-bound search
//! with a brute-force oracle. It is `no_std` and needs only `alloc`; file
//! formats, threading and the command line live in the `plsrd` crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod construct;
mod error;
pub mod family;
pub mod graph;
pub mod labeling;
pub mod solver;

pub use bounds::{BoundsRecord, PackingSet, Provenance};
pub use construct::{construct, formula_value, ConstructionResult};
pub use error::{Error, Result};
pub use family::{generate, FamilyKind, FamilySpec};
pub use graph::Graph;
pub use labeling::{Label, Labeling, LabelingStats, ValidationReport, Violation, ViolationKind};
pub use solver::{Algorithm, SolveOptions, SolveResult};

/// `ceil(a / b)` for non-negative `a` and positive `b`.
pub(crate) fn div_ceil(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}
