//! Parametrized graph families and their canonical vertex orderings.
//!
//! | family              | vertices                                               |
//! |---------------------|--------------------------------------------------------|
//! | `Path(n)`/`Cycle(n)`| `0..n` along the path or cycle                         |
//! | `Complete(n)`       | `0..n`                                                 |
//! | `CompleteBipartite` | part X = `0..p`, part Y = `p..p+n`                     |
//! | `Star(n)`           | hub `0`, leaves `1..=n`                                |
//! | `Wheel(n)`          | hub `0`, rim `c_1..c_n` = `1..=n`                      |
//! | `Ladder(n)`         | top row `a_i` = `0..n`, bottom row `b_i` = `n..2n`     |
//! | `Prism(n)`          | ladder plus wrap edges `(0, n-1)` and `(n, 2n-1)`      |
//! | `Grid3(n)`          | column-major, column `j` is `3j, 3j+1, 3j+2` top-down  |
//! | `FlowerSnark(n)`    | `J_{2n+1}`: blocks `a`, `b`, `c`, `d` of `2n+1` each   |

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Star,
    Wheel,
    Ladder,
    Prism,
    Grid3,
    FlowerSnark,
    ExplicitTree,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 11] = [
        FamilyKind::Path,
        FamilyKind::Cycle,
        FamilyKind::Complete,
        FamilyKind::CompleteBipartite,
        FamilyKind::Star,
        FamilyKind::Wheel,
        FamilyKind::Ladder,
        FamilyKind::Prism,
        FamilyKind::Grid3,
        FamilyKind::FlowerSnark,
        FamilyKind::ExplicitTree,
    ];

    /// Short lowercase name used in files and on the command line.
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Complete => "complete",
            FamilyKind::CompleteBipartite => "bipartite",
            FamilyKind::Star => "star",
            FamilyKind::Wheel => "wheel",
            FamilyKind::Ladder => "ladder",
            FamilyKind::Prism => "prism",
            FamilyKind::Grid3 => "grid3",
            FamilyKind::FlowerSnark => "flowersnark",
            FamilyKind::ExplicitTree => "tree",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }

    /// Smallest permitted value of the `n` parameter.
    pub fn min_n(self) -> usize {
        match self {
            FamilyKind::Path | FamilyKind::Cycle | FamilyKind::Prism => 3,
            FamilyKind::Complete | FamilyKind::CompleteBipartite | FamilyKind::Ladder => 2,
            FamilyKind::FlowerSnark => 2,
            FamilyKind::Wheel => 4,
            FamilyKind::Star | FamilyKind::Grid3 => 1,
            FamilyKind::ExplicitTree => 2,
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A named member of a graph family.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `K_{p,n}` with `2 <= p <= n`.
    CompleteBipartite { p: usize, n: usize },
    /// `S_n`: a hub joined to `n` leaves.
    Star(usize),
    /// `W_n`: a hub joined to every vertex of an `n`-cycle.
    Wheel(usize),
    Ladder(usize),
    Prism(usize),
    Grid3(usize),
    /// The flower snark `J_{2n+1}`.
    FlowerSnark(usize),
    /// A tree given by its edge list; the vertex count is one more than the
    /// largest endpoint.
    ExplicitTree(Vec<(usize, usize)>),
}

impl FamilySpec {
    /// Builds the spec for a single-parameter family (or bipartite with `p`).
    pub fn with_params(kind: FamilyKind, n: usize, p: Option<usize>) -> Result<Self> {
        let spec = match kind {
            FamilyKind::Path => FamilySpec::Path(n),
            FamilyKind::Cycle => FamilySpec::Cycle(n),
            FamilyKind::Complete => FamilySpec::Complete(n),
            FamilyKind::CompleteBipartite => {
                let p = p.ok_or_else(|| Error::InvalidFamilyParams {
                    family: kind.name(),
                    reason: "missing part size p".into(),
                })?;
                FamilySpec::CompleteBipartite { p, n }
            }
            FamilyKind::Star => FamilySpec::Star(n),
            FamilyKind::Wheel => FamilySpec::Wheel(n),
            FamilyKind::Ladder => FamilySpec::Ladder(n),
            FamilyKind::Prism => FamilySpec::Prism(n),
            FamilyKind::Grid3 => FamilySpec::Grid3(n),
            FamilyKind::FlowerSnark => FamilySpec::FlowerSnark(n),
            FamilyKind::ExplicitTree => return Err(Error::UnsupportedFamily(kind.name())),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn kind(&self) -> FamilyKind {
        match self {
            FamilySpec::Path(_) => FamilyKind::Path,
            FamilySpec::Cycle(_) => FamilyKind::Cycle,
            FamilySpec::Complete(_) => FamilyKind::Complete,
            FamilySpec::CompleteBipartite { .. } => FamilyKind::CompleteBipartite,
            FamilySpec::Star(_) => FamilyKind::Star,
            FamilySpec::Wheel(_) => FamilyKind::Wheel,
            FamilySpec::Ladder(_) => FamilyKind::Ladder,
            FamilySpec::Prism(_) => FamilyKind::Prism,
            FamilySpec::Grid3(_) => FamilyKind::Grid3,
            FamilySpec::FlowerSnark(_) => FamilyKind::FlowerSnark,
            FamilySpec::ExplicitTree(_) => FamilyKind::ExplicitTree,
        }
    }

    /// The family's `n` parameter (vertex count for trees).
    pub fn param_n(&self) -> usize {
        match *self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Complete(n)
            | FamilySpec::CompleteBipartite { n, .. }
            | FamilySpec::Star(n)
            | FamilySpec::Wheel(n)
            | FamilySpec::Ladder(n)
            | FamilySpec::Prism(n)
            | FamilySpec::Grid3(n)
            | FamilySpec::FlowerSnark(n) => n,
            FamilySpec::ExplicitTree(ref edges) => tree_order(edges),
        }
    }

    /// Number of vertices of the generated graph.
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Path(n) | FamilySpec::Cycle(n) | FamilySpec::Complete(n) => n,
            FamilySpec::CompleteBipartite { p, n } => p + n,
            FamilySpec::Star(n) | FamilySpec::Wheel(n) => n + 1,
            FamilySpec::Ladder(n) | FamilySpec::Prism(n) => 2 * n,
            FamilySpec::Grid3(n) => 3 * n,
            FamilySpec::FlowerSnark(n) => 4 * (2 * n + 1),
            FamilySpec::ExplicitTree(ref edges) => tree_order(edges),
        }
    }

    /// Checks the parameter ranges of the family.
    pub fn validate(&self) -> Result<()> {
        let kind = self.kind();
        let invalid = |reason| Err(Error::InvalidFamilyParams { family: kind.name(), reason });
        match *self {
            FamilySpec::CompleteBipartite { p, n } => {
                if p < 2 || p > n {
                    return invalid(format!("requires 2 <= p <= n, got p = {p}, n = {n}"));
                }
                Ok(())
            }
            FamilySpec::ExplicitTree(ref edges) => check_tree(edges).map(|_| ()),
            _ => {
                let n = self.param_n();
                if n < kind.min_n() {
                    return invalid(format!("requires n >= {}, got n = {n}", kind.min_n()));
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::CompleteBipartite { p, n } => write!(f, "bipartite({p},{n})"),
            FamilySpec::ExplicitTree(edges) => write!(f, "tree({})", tree_order(edges)),
            other => write!(f, "{}({})", other.kind(), other.param_n()),
        }
    }
}

fn tree_order(edges: &[(usize, usize)]) -> usize {
    edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0)
}

fn check_tree(edges: &[(usize, usize)]) -> Result<Graph> {
    if edges.is_empty() {
        return Err(Error::NotATree("empty edge list".into()));
    }
    let n = tree_order(edges);
    let g = Graph::from_edges(n, edges).map_err(|e| Error::NotATree(format!("{e}")))?;
    if g.num_edges() + 1 != n {
        return Err(Error::NotATree(format!("{} edges on {n} vertices", g.num_edges())));
    }
    if !g.is_connected() {
        return Err(Error::NotATree("edge list is disconnected".into()));
    }
    Ok(g)
}

/// Builds the graph named by `spec` under the canonical vertex ordering.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let mut edges = Vec::new();
    let n_vertices = spec.order();
    match *spec {
        FamilySpec::Path(n) => edges.extend((0..n - 1).map(|i| (i, i + 1))),
        FamilySpec::Cycle(n) => edges.extend((0..n).map(|i| (i, (i + 1) % n))),
        FamilySpec::Complete(n) => {
            for u in 0..n {
                edges.extend((u + 1..n).map(|v| (u, v)));
            }
        }
        FamilySpec::CompleteBipartite { p, n } => {
            for u in 0..p {
                edges.extend((p..p + n).map(|v| (u, v)));
            }
        }
        FamilySpec::Star(n) => edges.extend((1..=n).map(|v| (0, v))),
        FamilySpec::Wheel(n) => {
            edges.extend((1..=n).map(|v| (0, v)));
            edges.extend((1..=n).map(|v| (v, v % n + 1)));
        }
        FamilySpec::Ladder(n) | FamilySpec::Prism(n) => {
            for i in 0..n - 1 {
                edges.push((i, i + 1));
                edges.push((n + i, n + i + 1));
            }
            edges.extend((0..n).map(|i| (i, n + i)));
            if matches!(spec, FamilySpec::Prism(_)) {
                edges.push((0, n - 1));
                edges.push((n, 2 * n - 1));
            }
        }
        FamilySpec::Grid3(n) => {
            for j in 0..n {
                edges.push((3 * j, 3 * j + 1));
                edges.push((3 * j + 1, 3 * j + 2));
                if j + 1 < n {
                    edges.extend((0..3).map(|r| (3 * j + r, 3 * j + 3 + r)));
                }
            }
        }
        FamilySpec::FlowerSnark(n) => {
            let s = Snark::new(n);
            let last = 2 * n;
            for i in 0..last {
                edges.push((s.a(i), s.a(i + 1)));
                edges.push((s.c(i), s.c(i + 1)));
                edges.push((s.d(i), s.d(i + 1)));
            }
            edges.push((s.a(last), s.a(0)));
            edges.push((s.c(last), s.d(0)));
            edges.push((s.d(last), s.c(0)));
            for i in 0..=last {
                edges.push((s.a(i), s.b(i)));
                edges.push((s.b(i), s.c(i)));
                edges.push((s.b(i), s.d(i)));
            }
        }
        FamilySpec::ExplicitTree(ref tree) => return check_tree(tree),
    }
    Ok(Graph::from_simple_edges(n_vertices, &edges))
}

/// Index arithmetic for `J_{2n+1}`: `a_i = i`, `b_i = m + i`, `c_i = 2m + i`,
/// `d_i = 3m + i` with `m = 2n + 1`.
#[derive(Debug, Clone, Copy)]
pub struct Snark {
    m: usize,
}

impl Snark {
    pub fn new(n: usize) -> Self {
        Snark { m: 2 * n + 1 }
    }

    pub fn a(self, i: usize) -> usize {
        i
    }

    pub fn b(self, i: usize) -> usize {
        self.m + i
    }

    pub fn c(self, i: usize) -> usize {
        2 * self.m + i
    }

    pub fn d(self, i: usize) -> usize {
        3 * self.m + i
    }
}

/// Decodes a Prüfer sequence of length `n - 2` into the tree on `n` vertices.
pub fn tree_from_prufer(sequence: &[usize]) -> Result<FamilySpec> {
    let n = sequence.len() + 2;
    if let Some(&bad) = sequence.iter().find(|&&x| x >= n) {
        return Err(Error::NotATree(format!("Prüfer entry {bad} out of range for n = {n}")));
    }
    let mut degree = vec![1usize; n];
    for &x in sequence {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in sequence {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always exists");
        edges.push((leaf.min(x), leaf.max(x)));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let mut rest = (0..n).filter(|&v| degree[v] == 1);
    let (u, v) = (rest.next().unwrap(), rest.next().unwrap());
    edges.push((u, v));
    edges.sort_unstable();
    Ok(FamilySpec::ExplicitTree(edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(spec: FamilySpec) -> (usize, usize) {
        let g = generate(&spec).unwrap();
        (g.n(), g.num_edges())
    }

    #[test]
    fn small_examples() {
        let p3 = generate(&FamilySpec::Path(3)).unwrap();
        assert_eq!(p3.edges().collect::<Vec<_>>(), [(0, 1), (1, 2)]);

        let prism = generate(&FamilySpec::Prism(3)).unwrap();
        assert_eq!((prism.n(), prism.num_edges()), (6, 9));
        assert!(prism.is_regular(3));

        let j5 = generate(&FamilySpec::FlowerSnark(2)).unwrap();
        assert_eq!((j5.n(), j5.num_edges()), (20, 30));
        assert!(j5.is_regular(3));
        let s = Snark::new(2);
        assert!(j5.has_edge(s.a(4), s.a(0)));
        assert!(j5.has_edge(s.c(4), s.d(0)));
        assert!(j5.has_edge(s.d(4), s.c(0)));
    }

    #[test]
    fn closed_form_counts() {
        for n in 2..30 {
            assert_eq!(counts(FamilySpec::Ladder(n)), (2 * n, 3 * n - 2));
            assert_eq!(counts(FamilySpec::FlowerSnark(n)), (8 * n + 4, 12 * n + 6));
            assert_eq!(counts(FamilySpec::Grid3(n)), (3 * n, 5 * n - 3));
        }
        for n in 3..30 {
            assert_eq!(counts(FamilySpec::Prism(n)), (2 * n, 3 * n));
        }
        for n in 4..30 {
            assert_eq!(counts(FamilySpec::Wheel(n)), (n + 1, 2 * n));
        }
        assert_eq!(counts(FamilySpec::Grid3(1)), (3, 2));
    }

    #[test]
    fn degree_queries() {
        assert_eq!(generate(&FamilySpec::Star(4)).unwrap().min_degree(), 1);
        assert_eq!(generate(&FamilySpec::Prism(5)).unwrap().min_degree(), 3);
        assert_eq!(generate(&FamilySpec::Complete(6)).unwrap().min_degree(), 5);
        assert!(generate(&FamilySpec::Prism(4)).unwrap().is_regular(3));
        assert!(!generate(&FamilySpec::Wheel(5)).unwrap().is_regular(3));
        assert!(generate(&FamilySpec::Cycle(7)).unwrap().is_regular(2));
    }

    #[test]
    fn range_guards() {
        let bad = [
            FamilySpec::Path(2),
            FamilySpec::Cycle(2),
            FamilySpec::Complete(1),
            FamilySpec::CompleteBipartite { p: 1, n: 3 },
            FamilySpec::CompleteBipartite { p: 4, n: 3 },
            FamilySpec::Star(0),
            FamilySpec::Wheel(3),
            FamilySpec::Ladder(1),
            FamilySpec::Prism(2),
            FamilySpec::Grid3(0),
            FamilySpec::FlowerSnark(1),
        ];
        for spec in bad {
            assert!(matches!(generate(&spec), Err(Error::InvalidFamilyParams { .. })), "{spec}");
        }
    }

    #[test]
    fn explicit_tree_checks() {
        let star = generate(&FamilySpec::ExplicitTree(vec![(0, 1), (1, 2), (1, 3)])).unwrap();
        assert_eq!(star.n(), 4);
        assert_eq!(star.degree(1), 3);
        let cyclic = FamilySpec::ExplicitTree(vec![(0, 1), (1, 2), (0, 2)]);
        assert!(matches!(generate(&cyclic), Err(Error::NotATree(_))));
        let split = FamilySpec::ExplicitTree(vec![(0, 1), (2, 3)]);
        assert!(matches!(generate(&split), Err(Error::NotATree(_))));
        assert!(matches!(generate(&FamilySpec::ExplicitTree(vec![])), Err(Error::NotATree(_))));
    }

    #[test]
    fn prufer_decoding() {
        // Sequence [3, 3, 3] is the star with hub 3 on five vertices.
        let spec = tree_from_prufer(&[3, 3, 3]).unwrap();
        let g = generate(&spec).unwrap();
        assert_eq!(g.degree(3), 4);
        // Empty sequence is a single edge.
        assert_eq!(tree_from_prufer(&[]).unwrap(), FamilySpec::ExplicitTree(vec![(0, 1)]));
        for seq in [[0usize, 1, 2, 3], [4, 4, 0, 1], [5, 2, 2, 5]] {
            assert!(generate(&tree_from_prufer(&seq).unwrap()).unwrap().is_tree());
        }
    }

    #[test]
    fn names_round_trip() {
        for kind in FamilyKind::ALL {
            assert_eq!(FamilyKind::from_name(kind.name()), Some(kind));
        }
    }
}
