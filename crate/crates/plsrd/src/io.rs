//! File formats.
//!
//! Graphs are written as compact JSON `{"n":4,"edges":[[0,1],[1,2]]}` with
//! sorted `u < v` pairs and a trailing newline. On input the plain edge list
//! (`n m` header, then `m` lines `u v`) is also accepted; `#` starts a comment
//! there.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use plsrd_core::{
    Algorithm, BoundsRecord, ConstructionResult, FamilySpec, Graph, Labeling, PackingSet, SolveResult,
    ValidationReport, ViolationKind,
};

use crate::error::{Error, Result};

pub fn read_to_string(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_owned(), source })
}

pub fn write_string(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|source| Error::Io { path: path.to_owned(), source })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    n: usize,
    edges: Vec<[usize; 2]>,
}

/// Canonical JSON encoding.
pub fn graph_to_json(g: &Graph) -> String {
    let mut out = String::with_capacity(16 + 12 * g.num_edges());
    write!(out, "{{\"n\":{},\"edges\":[", g.n()).unwrap();
    for (i, (u, v)) in g.edges().enumerate() {
        if i > 0 {
            out.push(',');
        }
        write!(out, "[{u},{v}]").unwrap();
    }
    out.push_str("]}\n");
    out
}

/// Parses either format, detected by a leading `{`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        let file: GraphFile = serde_json::from_str(text).map_err(|e| Error::parse(format!("graph JSON: {e}")))?;
        let edges: Vec<(usize, usize)> = file.edges.iter().map(|e| (e[0], e[1])).collect();
        return Ok(Graph::from_edges(file.n, &edges)?);
    }
    parse_edge_list(text)
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.split('#').next().unwrap_or("").trim()))
        .filter(|(_, line)| !line.is_empty());
    let pair = |lineno: usize, line: &str| -> Result<(usize, usize)> {
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            [a, b] => match (a.parse(), b.parse()) {
                (Ok(a), Ok(b)) => Ok((a, b)),
                _ => Err(Error::parse(format!("line {lineno}: expected two non-negative integers"))),
            },
            _ => Err(Error::parse(format!("line {lineno}: expected two fields, found {}", fields.len()))),
        }
    };
    let (lineno, header) = lines.next().ok_or_else(|| Error::parse("empty graph file"))?;
    let (n, m) = pair(lineno, header)?;
    let edges = lines.map(|(i, line)| pair(i, line)).collect::<Result<Vec<_>>>()?;
    if edges.len() != m {
        return Err(Error::parse(format!("header announces {m} edges, found {}", edges.len())));
    }
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    parse_graph(&read_to_string(path)?)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LabelingFile {
    labels: Vec<i64>,
}

pub fn labeling_to_json(f: &Labeling) -> String {
    let mut s = serde_json::to_string(&LabelingFile { labels: f.values() }).unwrap();
    s.push('\n');
    s
}

pub fn parse_labeling(text: &str) -> Result<Labeling> {
    let file: LabelingFile = serde_json::from_str(text).map_err(|e| Error::parse(format!("labeling JSON: {e}")))?;
    Ok(Labeling::from_values(&file.labels)?)
}

pub fn read_labeling(path: &Path) -> Result<Labeling> {
    parse_labeling(&read_to_string(path)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationJson {
    pub kind: String,
    pub vertices: Vec<usize>,
    pub detail: i64,
}

pub fn report_to_json(report: &ValidationReport) -> String {
    let rows: Vec<ViolationJson> = report
        .violations
        .iter()
        .map(|v| ViolationJson { kind: v.kind.name().to_owned(), vertices: v.vertices.clone(), detail: v.detail })
        .collect();
    let mut s = serde_json::to_string_pretty(&rows).unwrap();
    s.push('\n');
    s
}

/// Parses a violation list, checking every kind name.
pub fn parse_report(text: &str) -> Result<Vec<ViolationJson>> {
    let rows: Vec<ViolationJson> =
        serde_json::from_str(text).map_err(|e| Error::parse(format!("violation JSON: {e}")))?;
    if let Some(bad) = rows.iter().find(|r| ViolationKind::from_name(&r.kind).is_none()) {
        return Err(Error::parse(format!("unknown violation kind {:?}", bad.kind)));
    }
    Ok(rows)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResultJson {
    pub optimum: i64,
    pub witness: Vec<i64>,
    pub nodes: u64,
    pub proven: bool,
    pub algorithm: String,
}

impl From<&SolveResult> for SolveResultJson {
    fn from(r: &SolveResult) -> Self {
        SolveResultJson {
            optimum: r.optimum,
            witness: r.witness.values(),
            nodes: r.nodes_explored,
            proven: r.proven_optimal,
            algorithm: r.algorithm.name().to_owned(),
        }
    }
}

impl TryFrom<SolveResultJson> for SolveResult {
    type Error = Error;

    fn try_from(j: SolveResultJson) -> Result<Self> {
        let algorithm = Algorithm::from_name(&j.algorithm)
            .ok_or_else(|| Error::parse(format!("unknown algorithm {:?}", j.algorithm)))?;
        Ok(SolveResult {
            optimum: j.optimum,
            witness: Labeling::from_values(&j.witness)?,
            nodes_explored: j.nodes,
            proven_optimal: j.proven,
            algorithm,
        })
    }
}

pub fn solve_result_to_json(r: &SolveResult) -> String {
    let mut s = serde_json::to_string_pretty(&SolveResultJson::from(r)).unwrap();
    s.push('\n');
    s
}

pub fn parse_solve_result(text: &str) -> Result<SolveResult> {
    let j: SolveResultJson = serde_json::from_str(text).map_err(|e| Error::parse(format!("solve result JSON: {e}")))?;
    j.try_into()
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProvenanceJson {
    pub lower: Option<String>,
    pub upper: Option<String>,
    pub exact: Option<String>,
}

/// One bound with the result it comes from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub kind: BoundKind,
    pub value: i64,
    pub source: String,
    /// Set when the value rests on a greedy rather than maximum packing.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub heuristic: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Lower,
    Upper,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsJson {
    pub lower: Option<i64>,
    pub upper: Option<i64>,
    pub exact: Option<i64>,
    pub provenance: ProvenanceJson,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub bounds: Vec<BoundEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub packing: Option<PackingJson>,
}

impl From<&BoundsRecord> for BoundsJson {
    fn from(b: &BoundsRecord) -> Self {
        let tag = |t: Option<&'static str>| t.map(str::to_owned);
        BoundsJson {
            lower: b.lower,
            upper: b.upper,
            exact: b.exact,
            provenance: ProvenanceJson {
                lower: tag(b.provenance.lower),
                upper: tag(b.provenance.upper),
                exact: tag(b.provenance.exact),
            },
            bounds: Vec::new(),
            packing: None,
        }
    }
}

pub fn bounds_to_json(b: &BoundsJson) -> String {
    let mut s = serde_json::to_string_pretty(b).unwrap();
    s.push('\n');
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PackingJson {
    pub vertices: Vec<usize>,
}

impl From<&PackingSet> for PackingJson {
    fn from(s: &PackingSet) -> Self {
        PackingJson { vertices: s.vertices().to_vec() }
    }
}

pub fn parse_packing(g: &Graph, text: &str) -> Result<PackingSet> {
    let j: PackingJson = serde_json::from_str(text).map_err(|e| Error::parse(format!("packing JSON: {e}")))?;
    Ok(PackingSet::new(g, j.vertices)?)
}

/// Metadata written next to a construction's labeling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sidecar {
    pub family: String,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    pub claimed_weight: i64,
}

impl From<&ConstructionResult> for Sidecar {
    fn from(c: &ConstructionResult) -> Self {
        let p = match c.family {
            FamilySpec::CompleteBipartite { p, .. } => Some(p),
            _ => None,
        };
        Sidecar {
            family: c.family.kind().name().to_owned(),
            n: c.family.param_n(),
            p,
            claimed_weight: c.claimed_weight,
        }
    }
}

pub fn sidecar_to_json(s: &Sidecar) -> String {
    let mut out = serde_json::to_string(s).unwrap();
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use plsrd_core::labeling::validate;
    use plsrd_core::{generate, FamilySpec};

    #[test]
    fn canonical_graph_json() {
        let g = generate(&FamilySpec::Path(3)).unwrap();
        assert_eq!(graph_to_json(&g), "{\"n\":3,\"edges\":[[0,1],[1,2]]}\n");
        let single = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(graph_to_json(&single), "{\"n\":1,\"edges\":[]}\n");
    }

    #[test]
    fn edge_list_and_json_agree() {
        let text = "# a 4-cycle\n4 4\n0 1\n1 2\n2 3\n3 0\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g, generate(&FamilySpec::Cycle(4)).unwrap());
        let json = parse_graph("{\"n\": 4, \"edges\": [[1,0],[2,1],[3,2],[0,3]]}").unwrap();
        assert_eq!(graph_to_json(&g), graph_to_json(&json));
    }

    #[test]
    fn malformed_graphs() {
        for text in ["", "3\n", "3 2\n0 1\n", "3 1\n0 x\n", "2 1\n0 5\n", "{\"n\":2}", "{\"n\":2,\"edges\":[[0,0]]}"] {
            assert!(parse_graph(text).is_err(), "{text:?}");
        }
    }

    #[test]
    fn labeling_round_trip() {
        let f = Labeling::from_values(&[-1, 2, 1]).unwrap();
        let text = labeling_to_json(&f);
        assert_eq!(text, "{\"labels\":[-1,2,1]}\n");
        assert_eq!(parse_labeling(&text).unwrap(), f);
        assert!(parse_labeling("{\"labels\":[0]}").is_err());
    }

    #[test]
    fn report_round_trip() {
        let g = generate(&FamilySpec::Path(3)).unwrap();
        let f = Labeling::from_values(&[-1, -1, 2]).unwrap();
        let report = validate(&g, &f).unwrap();
        let rows = parse_report(&report_to_json(&report)).unwrap();
        assert_eq!(rows.len(), report.len());
        assert!(rows.iter().any(|r| r.kind == "C1_NoGuard" && r.vertices == [0]));
        assert!(parse_report("[{\"kind\":\"C9\",\"vertices\":[],\"detail\":0}]").is_err());
    }

    #[test]
    fn solve_result_round_trip() {
        let r = SolveResult {
            optimum: 2,
            witness: Labeling::from_values(&[-1, 2, 1]).unwrap(),
            nodes_explored: 27,
            proven_optimal: true,
            algorithm: Algorithm::BruteForce,
        };
        let text = solve_result_to_json(&r);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["algorithm"], "BruteForce");
        assert_eq!(v["nodes"], 27);
        assert_eq!(parse_solve_result(&text).unwrap(), r);
    }

    #[test]
    fn packing_and_sidecar() {
        let g = generate(&FamilySpec::Path(4)).unwrap();
        assert_eq!(parse_packing(&g, "{\"vertices\":[3,0]}").unwrap().vertices(), &[0, 3]);
        assert!(parse_packing(&g, "{\"vertices\":[0,1]}").is_err());
        let c = plsrd_core::construct(&FamilySpec::CompleteBipartite { p: 3, n: 4 }).unwrap();
        assert_eq!(
            sidecar_to_json(&Sidecar::from(&c)),
            "{\"family\":\"bipartite\",\"n\":4,\"p\":3,\"claimed_weight\":5}\n"
        );
    }
}
