//! Maximum 2-packings: vertex sets with pairwise distance at least 3.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest graph accepted by the exact search.
pub const EXACT_PACKING_LIMIT: usize = 24;

/// A sorted 2-packing of some graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PackingSet {
    vertices: Vec<usize>,
    /// True when the set is known to be a maximum 2-packing.
    pub maximum: bool,
}

impl PackingSet {
    /// Checks that `vertices` is a 2-packing of `g`.
    pub fn new(g: &Graph, mut vertices: Vec<usize>) -> Result<Self> {
        vertices.sort_unstable();
        vertices.dedup();
        check_packing(g, &vertices)?;
        Ok(PackingSet { vertices, maximum: false })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

pub(crate) fn check_packing(g: &Graph, vertices: &[usize]) -> Result<()> {
    if let Some(&v) = vertices.iter().find(|&&v| v >= g.n()) {
        return Err(Error::NotAPacking(format!("vertex {v} out of range")));
    }
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            if g.pairwise_distance_leq(u, v, 2) {
                return Err(Error::NotAPacking(format!("vertices {u} and {v} are within distance 2")));
            }
        }
    }
    Ok(())
}

/// A maximum 2-packing (`exact`) or a greedy maximal one.
///
/// Exact mode returns the lexicographically smallest maximum packing and is
/// limited to [`EXACT_PACKING_LIMIT`] vertices. Greedy mode scans vertices by
/// ascending degree, ties by index.
pub fn max_two_packing(g: &Graph, exact: bool) -> Result<PackingSet> {
    if !exact {
        return Ok(PackingSet { vertices: greedy(g), maximum: false });
    }
    if g.n() > EXACT_PACKING_LIMIT {
        return Err(Error::TooLargeForExact { n: g.n(), limit: EXACT_PACKING_LIMIT });
    }
    let mut search = ExactSearch::new(g);
    search.run(0);
    Ok(PackingSet { vertices: search.best, maximum: true })
}

fn greedy(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    let mut blocked = vec![false; g.n()];
    let mut chosen = Vec::new();
    for v in order {
        if blocked[v] {
            continue;
        }
        chosen.push(v);
        blocked[v] = true;
        for u in g.within_two(v) {
            blocked[u] = true;
        }
    }
    chosen.sort_unstable();
    chosen
}

struct ExactSearch {
    conflicts: Vec<Vec<usize>>,
    /// Number of chosen vertices within distance 2 of each vertex.
    blocked: Vec<u32>,
    current: Vec<usize>,
    best: Vec<usize>,
    /// A set must beat this size to be recorded.
    threshold: usize,
}

impl ExactSearch {
    fn new(g: &Graph) -> Self {
        let seed = greedy(g).len();
        ExactSearch {
            conflicts: (0..g.n()).map(|v| g.within_two(v)).collect(),
            blocked: vec![0; g.n()],
            current: Vec::new(),
            best: Vec::new(),
            threshold: seed.saturating_sub(1),
        }
    }

    fn free_from(&self, v: usize) -> usize {
        self.blocked[v..].iter().filter(|&&b| b == 0).count()
    }

    // Include-first over vertices in index order: the first maximum set
    // reached is the lexicographically smallest one.
    fn run(&mut self, v: usize) {
        let n = self.blocked.len();
        if self.current.len() + self.free_from(v.min(n)) <= self.threshold {
            return;
        }
        if v == n {
            self.threshold = self.current.len();
            self.best = self.current.clone();
            return;
        }
        if self.blocked[v] == 0 {
            self.current.push(v);
            for i in 0..self.conflicts[v].len() {
                self.blocked[self.conflicts[v][i]] += 1;
            }
            self.run(v + 1);
            for i in 0..self.conflicts[v].len() {
                self.blocked[self.conflicts[v][i]] -= 1;
            }
            self.current.pop();
        }
        self.run(v + 1);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, FamilySpec};

    /// Subset enumeration oracle: the lexicographically smallest maximum set.
    fn brute_force(g: &Graph) -> Vec<usize> {
        let n = g.n();
        let mut best: Vec<usize> = Vec::new();
        for mask in 0u32..(1 << n) {
            let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if set.len() < best.len() || check_packing(g, &set).is_err() {
                continue;
            }
            if set.len() > best.len() || set < best {
                best = set;
            }
        }
        best
    }

    #[test]
    fn examples() {
        let p4 = generate(&FamilySpec::Path(4)).unwrap();
        assert_eq!(max_two_packing(&p4, true).unwrap().vertices(), &[0, 3]);
        let c5 = generate(&FamilySpec::Cycle(5)).unwrap();
        assert_eq!(max_two_packing(&c5, true).unwrap().len(), 1);
        let c6 = generate(&FamilySpec::Cycle(6)).unwrap();
        assert_eq!(max_two_packing(&c6, true).unwrap().vertices(), &[0, 3]);
    }

    #[test]
    fn exact_matches_subset_oracle() {
        let mut specs = Vec::new();
        for n in 1..=14 {
            specs.extend([
                FamilySpec::Path(n),
                FamilySpec::Cycle(n),
                FamilySpec::Complete(n),
                FamilySpec::Star(n),
                FamilySpec::Wheel(n),
                FamilySpec::Ladder(n),
                FamilySpec::Prism(n),
                FamilySpec::Grid3(n),
            ]);
        }
        for spec in specs {
            if spec.validate().is_err() || spec.order() > 14 {
                continue;
            }
            let g = generate(&spec).unwrap();
            let exact = max_two_packing(&g, true).unwrap();
            assert_eq!(exact.vertices(), brute_force(&g).as_slice(), "{spec}");
            assert!(exact.maximum);
            let greedy = max_two_packing(&g, false).unwrap();
            assert!(check_packing(&g, greedy.vertices()).is_ok());
            assert!(greedy.len() <= exact.len());
        }
    }

    #[test]
    fn size_guard_and_validation() {
        let big = generate(&FamilySpec::Path(25)).unwrap();
        assert!(matches!(max_two_packing(&big, true), Err(Error::TooLargeForExact { .. })));
        assert_eq!(max_two_packing(&big, false).unwrap().len(), 9);
        let p4 = generate(&FamilySpec::Path(4)).unwrap();
        assert!(matches!(PackingSet::new(&p4, vec![0, 2]), Err(Error::NotAPacking(_))));
        assert!(matches!(PackingSet::new(&p4, vec![7]), Err(Error::NotAPacking(_))));
    }
}
