//! Closed-form values, lower bounds and 2-packing upper bounds.

mod packing;

pub use packing::{max_two_packing, PackingSet, EXACT_PACKING_LIMIT};

use alloc::vec::Vec;

use crate::construct::ConstructionResult;
use crate::div_ceil;
use crate::error::{Error, Result};
use crate::family::{generate, FamilySpec};
use crate::graph::Graph;
use crate::labeling::{validate, Label, Labeling};

/// Tag naming the result each entry of a [`BoundsRecord`] comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Provenance {
    pub lower: Option<&'static str>,
    pub upper: Option<&'static str>,
    pub exact: Option<&'static str>,
}

/// Known bounds on the minimum weight of a graph.
///
/// When `exact` is present, `lower` and `upper` equal it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BoundsRecord {
    pub lower: Option<i64>,
    pub upper: Option<i64>,
    pub exact: Option<i64>,
    pub provenance: Provenance,
}

impl BoundsRecord {
    pub fn exact(value: i64, tag: &'static str) -> Self {
        BoundsRecord {
            lower: Some(value),
            upper: Some(value),
            exact: Some(value),
            provenance: Provenance { lower: Some(tag), upper: Some(tag), exact: Some(tag) },
        }
    }

    pub fn between(lower: Option<(i64, &'static str)>, upper: Option<(i64, &'static str)>) -> Self {
        BoundsRecord {
            lower: lower.map(|l| l.0),
            upper: upper.map(|u| u.0),
            exact: None,
            provenance: Provenance { lower: lower.map(|l| l.1), upper: upper.map(|u| u.1), exact: None },
        }
    }

    /// True when `value` lies within the recorded bounds.
    pub fn admits(&self, value: i64) -> bool {
        self.lower.map_or(true, |l| l <= value) && self.upper.map_or(true, |u| value <= u)
    }
}

fn ceil_div_i(a: usize, b: usize) -> i64 {
    div_ceil(a, b) as i64
}

/// Closed-form value (or bound sandwich) for a family member.
pub fn closed_form(spec: &FamilySpec) -> Result<BoundsRecord> {
    spec.validate()?;
    Ok(match *spec {
        FamilySpec::Complete(n) => BoundsRecord::exact(n as i64 - 1, "complete"),
        FamilySpec::CompleteBipartite { p: 2, n } => {
            // A part of size two admits at most one -1 vertex overall.
            BoundsRecord::exact(n as i64 + 1, "complete-bipartite-p2")
        }
        FamilySpec::CompleteBipartite { p, n } => {
            BoundsRecord::exact((p + n) as i64 - 2, "complete-bipartite")
        }
        FamilySpec::Star(n) => BoundsRecord::exact(n as i64, "star"),
        FamilySpec::Wheel(n) => {
            let value = if n % 4 == 0 { div_ceil(n, 2) + 1 } else { div_ceil(n + 1, 2) + 1 };
            BoundsRecord::exact(value as i64, "wheel")
        }
        FamilySpec::Path(n) => BoundsRecord::exact((2 * n / 3) as i64, "path"),
        FamilySpec::Cycle(n) => BoundsRecord::exact(ceil_div_i(2 * n, 3), "cycle"),
        FamilySpec::Ladder(n) => BoundsRecord::exact(ceil_div_i(6 * n, 5), "ladder"),
        FamilySpec::Prism(n) => {
            let bump = i64::from(matches!(n % 10, 4 | 5));
            BoundsRecord::exact(ceil_div_i(6 * n, 5) + bump, "prism")
        }
        FamilySpec::Grid3(n) => BoundsRecord::exact(2 * n as i64, "grid3"),
        FamilySpec::FlowerSnark(n) => {
            let upper = 5 * n as i64 + if n % 2 == 0 { 3 } else { 4 };
            let lower = ceil_div_i(3 * spec.order(), 5);
            BoundsRecord::between(
                Some((lower, "cubic-lower-bound")),
                Some((upper, "flower-snark-construction")),
            )
        }
        FamilySpec::ExplicitTree(_) => {
            let g = generate(spec)?;
            let exact = g.n() <= EXACT_PACKING_LIMIT;
            let packing = max_two_packing(&g, exact)?;
            let tag = if exact { "tree-two-packing" } else { "tree-two-packing-greedy" };
            BoundsRecord::between(None, Some(((g.n() - packing.len()) as i64, tag)))
        }
    })
}

/// `ceil(3n / 5)` for a 3-regular graph on `n` vertices.
pub fn cubic_lower_bound(g: &Graph) -> Result<i64> {
    if !g.is_regular(3) {
        return Err(Error::NotCubic);
    }
    Ok(ceil_div_i(3 * g.n(), 5))
}

/// An upper bound `n - |S|` together with the labeling that attains it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackingBound {
    pub value: i64,
    pub certificate: Labeling,
}

/// Upper bound `n - |S|` for graphs with minimum degree at least 2.
///
/// The certificate labels `S` with `-1`, the lowest-indexed neighbour of each
/// packing vertex with `2`, and everything else with `1`.
pub fn packing_upper_bound(g: &Graph, s: &PackingSet) -> Result<PackingBound> {
    let delta = g.min_degree();
    if delta < 2 {
        return Err(Error::MinDegreeTooLow(delta));
    }
    packing::check_packing(g, s.vertices())?;
    let mut labels = alloc::vec![Label::One; g.n()];
    for &v in s.vertices() {
        labels[v] = Label::Minus;
        labels[g.neighbors(v)[0]] = Label::Two;
    }
    let certificate = Labeling::new(labels);
    let report = validate(g, &certificate)?;
    if !report.is_valid() {
        return Err(Error::ConstructionInvalid { family: "two-packing", violations: report.len() });
    }
    Ok(PackingBound { value: (g.n() - s.len()) as i64, certificate })
}

/// Labels a tree from a 2-packing `s`, giving weight `n - |S|`.
///
/// For each `v` in `s`: a leaf gets `-1` and its support `2`; a support vertex
/// gets `2` and its lowest-indexed leaf `-1`; any other vertex gets `-1` and
/// its lowest-indexed neighbour `2`. All remaining vertices get `1`.
pub fn tree_construction(t: &Graph, s: &PackingSet) -> Result<ConstructionResult> {
    if !t.is_tree() || t.n() < 2 {
        return Err(Error::NotATree("graph is not a tree on at least two vertices".into()));
    }
    packing::check_packing(t, s.vertices())?;
    let is_leaf = |v: usize| t.degree(v) == 1;
    let mut labels = alloc::vec![Label::One; t.n()];
    for &v in s.vertices() {
        if is_leaf(v) {
            labels[v] = Label::Minus;
            labels[t.neighbors(v)[0]] = Label::Two;
        } else if let Some(&leaf) = t.neighbors(v).iter().find(|&&u| is_leaf(u)) {
            labels[v] = Label::Two;
            labels[leaf] = Label::Minus;
        } else {
            labels[v] = Label::Minus;
            labels[t.neighbors(v)[0]] = Label::Two;
        }
    }
    let labeling = Labeling::new(labels);
    let report = validate(t, &labeling)?;
    let claimed_weight = (t.n() - s.len()) as i64;
    if !report.is_valid() || labeling.weight() != claimed_weight {
        return Err(Error::ConstructionInvalid { family: "tree", violations: report.len() });
    }
    let edges: Vec<(usize, usize)> = t.edges().collect();
    Ok(ConstructionResult { labeling, claimed_weight, family: FamilySpec::ExplicitTree(edges) })
}
