//! Checks closed forms against constructions and exact optima.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use plsrd_core::bounds::closed_form;
use plsrd_core::{construct, generate, FamilyKind, FamilySpec, SolveOptions};

use crate::error::Result;
use crate::solve::solve;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VerifyStatus {
    /// Formula, construction and proven optimum agree.
    Match,
    /// The optimum lies within the bounds and the construction attains the upper one.
    BoundConsistent,
    Mismatch,
    /// No proven optimum; formula and construction are consistent.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyRow {
    pub family: String,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    pub formula_value: Option<i64>,
    pub lower: Option<i64>,
    pub upper: Option<i64>,
    pub construction_weight: i64,
    pub exact_optimum: Option<i64>,
    pub status: VerifyStatus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Node budget per exact solve; `None` skips solving.
    pub solver_budget: Option<u64>,
    pub workers: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { solver_budget: Some(100_000_000), workers: 1 }
    }
}

fn status(formula: Option<i64>, lower: Option<i64>, upper: Option<i64>, construction: i64, exact: Option<i64>) -> VerifyStatus {
    use VerifyStatus::*;
    match (formula, exact) {
        (Some(f), Some(e)) => if f == construction && construction == e { Match } else { Mismatch },
        (Some(f), None) => if f == construction { Skipped } else { Mismatch },
        (None, _) => {
            let within = |v: i64| lower.map_or(true, |l| l <= v) && upper.map_or(true, |u| v <= u);
            if upper != Some(construction) || !within(construction) {
                Mismatch
            } else if let Some(e) = exact {
                if within(e) { BoundConsistent } else { Mismatch }
            } else {
                Skipped
            }
        }
    }
}

/// Verifies one family member.
pub fn verify_spec(spec: &FamilySpec, cfg: &VerifyConfig) -> Result<VerifyRow> {
    let bounds = closed_form(spec)?;
    let c = construct(spec)?;
    let exact = match cfg.solver_budget {
        Some(budget) => {
            let g = generate(spec)?;
            let opts = SolveOptions {
                workers: cfg.workers,
                node_budget: Some(budget),
                warm_start: Some(c.labeling.clone()),
                ..SolveOptions::default()
            };
            let r = solve(&g, &opts)?;
            r.proven_optimal.then_some(r.optimum)
        }
        None => None,
    };
    let p = match *spec {
        FamilySpec::CompleteBipartite { p, .. } => Some(p),
        _ => None,
    };
    Ok(VerifyRow {
        family: spec.kind().name().to_owned(),
        n: spec.param_n(),
        p,
        formula_value: bounds.exact,
        lower: bounds.lower,
        upper: bounds.upper,
        construction_weight: c.claimed_weight,
        exact_optimum: exact,
        status: status(bounds.exact, bounds.lower, bounds.upper, c.claimed_weight, exact),
    })
}

/// One row per `n` in `from..=to`; `p` is required for bipartite graphs.
pub fn verify_range(kind: FamilyKind, from: usize, to: usize, p: Option<usize>, cfg: &VerifyConfig) -> Result<Vec<VerifyRow>> {
    (from..=to)
        .map(|n| verify_spec(&FamilySpec::with_params(kind, n, p)?, cfg))
        .collect()
}

/// True when no row is a mismatch.
pub fn all_consistent(rows: &[VerifyRow]) -> bool {
    rows.iter().all(|r| r.status != VerifyStatus::Mismatch)
}

fn cell(v: Option<i64>) -> String {
    v.map_or_else(|| "-".to_owned(), |v| v.to_string())
}

/// Aligned plain-text table.
pub fn format_table(rows: &[VerifyRow]) -> String {
    let header = ["family", "n", "p", "formula", "lower", "upper", "construction", "exact", "status"];
    let body: Vec<[String; 9]> = rows
        .iter()
        .map(|r| {
            [
                r.family.clone(),
                r.n.to_string(),
                r.p.map_or_else(|| "-".to_owned(), |p| p.to_string()),
                cell(r.formula_value),
                cell(r.lower),
                cell(r.upper),
                r.construction_weight.to_string(),
                cell(r.exact_optimum),
                format!("{:?}", r.status),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &body {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &[String]| {
        let parts: Vec<String> = cells.iter().zip(&widths).map(|(c, &w)| format!("{c:>w$}")).collect();
        writeln!(out, "{}", parts.join("  ").trim_end()).unwrap();
    };
    line(&header.map(str::to_owned));
    for row in &body {
        line(row);
    }
    out
}

pub fn rows_to_json(rows: &[VerifyRow]) -> String {
    let mut s = serde_json::to_string_pretty(rows).unwrap();
    s.push('\n');
    s
}
