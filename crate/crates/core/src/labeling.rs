//! Labelings `V -> {-1, 1, 2}` and the three-condition validator.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A vertex label. Ordered `Minus < One < Two`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Minus,
    One,
    Two,
}

impl Label {
    /// All labels in ascending order.
    pub const ALL: [Label; 3] = [Label::Minus, Label::One, Label::Two];

    #[inline]
    pub const fn value(self) -> i64 {
        match self {
            Label::Minus => -1,
            Label::One => 1,
            Label::Two => 2,
        }
    }
}

impl TryFrom<i64> for Label {
    type Error = Error;

    fn try_from(value: i64) -> Result<Self> {
        match value {
            -1 => Ok(Label::Minus),
            1 => Ok(Label::One),
            2 => Ok(Label::Two),
            other => Err(Error::InvalidLabel(other)),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// A total assignment of labels, index-aligned with the graph's vertices.
///
/// Labelings compare lexicographically with `-1 < 1 < 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Labeling(Vec<Label>);

impl Labeling {
    pub fn new(labels: Vec<Label>) -> Self {
        Labeling(labels)
    }

    pub fn from_values(values: &[i64]) -> Result<Self> {
        values.iter().map(|&v| Label::try_from(v)).collect::<Result<Vec<_>>>().map(Labeling)
    }

    pub fn all_ones(n: usize) -> Self {
        Labeling(alloc::vec![Label::One; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.0
    }

    pub fn values(&self) -> Vec<i64> {
        self.0.iter().map(|l| l.value()).collect()
    }

    pub fn into_inner(self) -> Vec<Label> {
        self.0
    }

    pub fn weight(&self) -> i64 {
        self.0.iter().map(|l| l.value()).sum()
    }

    pub fn stats(&self) -> LabelingStats {
        stats(self)
    }
}

impl core::ops::Index<usize> for Labeling {
    type Output = Label;

    fn index(&self, v: usize) -> &Label {
        &self.0[v]
    }
}

impl From<Vec<Label>> for Labeling {
    fn from(labels: Vec<Label>) -> Self {
        Labeling(labels)
    }
}

/// Label counts and total weight `|V_1| + 2|V_2| - |V_-1|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct LabelingStats {
    pub count_minus: usize,
    pub count_one: usize,
    pub count_two: usize,
    pub weight: i64,
}

pub fn stats(f: &Labeling) -> LabelingStats {
    let mut s = LabelingStats::default();
    for &l in f.labels() {
        match l {
            Label::Minus => s.count_minus += 1,
            Label::One => s.count_one += 1,
            Label::Two => s.count_two += 1,
        }
    }
    s.weight = s.count_one as i64 + 2 * s.count_two as i64 - s.count_minus as i64;
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ViolationKind {
    /// A `-1` vertex with no neighbour labelled `2`.
    C1NoGuard,
    /// A `-1` vertex with two or more neighbours labelled `2`.
    C1MultiGuard,
    /// Two `-1` vertices adjacent to the same `2` vertex.
    C2SharedGuard,
    /// A closed neighbourhood summing to less than `1`.
    C3NonpositiveSum,
}

impl ViolationKind {
    pub fn name(self) -> &'static str {
        match self {
            ViolationKind::C1NoGuard => "C1_NoGuard",
            ViolationKind::C1MultiGuard => "C1_MultiGuard",
            ViolationKind::C2SharedGuard => "C2_SharedGuard",
            ViolationKind::C3NonpositiveSum => "C3_NonpositiveSum",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        [Self::C1NoGuard, Self::C1MultiGuard, Self::C2SharedGuard, Self::C3NonpositiveSum]
            .into_iter()
            .find(|k| k.name() == name)
    }
}

/// One failed condition.
///
/// `vertices` is the offending vertex, or the pair of `-1` vertices for
/// [`ViolationKind::C2SharedGuard`]. `detail` carries the guard count (C1),
/// the shared guard's index (C2) or the closed-neighbourhood sum (C3).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Violation {
    pub kind: ViolationKind,
    pub vertices: Vec<usize>,
    pub detail: i64,
}

/// Every violation of a labeling, sorted by kind then vertices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn contains(&self, kind: ViolationKind, vertices: &[usize]) -> bool {
        self.violations.iter().any(|v| v.kind == kind && v.vertices == vertices)
    }
}

fn check_len(g: &Graph, f: &Labeling) -> Result<()> {
    if g.n() != f.len() {
        return Err(Error::LengthMismatch { expected: g.n(), found: f.len() });
    }
    Ok(())
}

/// `f(v) + sum of f over N(v)`.
pub fn closed_neighborhood_sum(g: &Graph, f: &Labeling, v: usize) -> i64 {
    f[v].value() + g.neighbors(v).iter().map(|&u| f[u].value()).sum::<i64>()
}

/// Collects every violation of the three conditions.
pub fn validate(g: &Graph, f: &Labeling) -> Result<ValidationReport> {
    check_len(g, f)?;
    let mut violations = Vec::new();
    for v in 0..g.n() {
        match f[v] {
            Label::Minus => {
                let guards = g.neighbors(v).iter().filter(|&&u| f[u] == Label::Two).count();
                let kind = match guards {
                    1 => None,
                    0 => Some(ViolationKind::C1NoGuard),
                    _ => Some(ViolationKind::C1MultiGuard),
                };
                if let Some(kind) = kind {
                    violations.push(Violation { kind, vertices: alloc::vec![v], detail: guards as i64 });
                }
            }
            Label::Two => {
                let weak: Vec<usize> =
                    g.neighbors(v).iter().copied().filter(|&u| f[u] == Label::Minus).collect();
                for (i, &x) in weak.iter().enumerate() {
                    for &y in &weak[i + 1..] {
                        violations.push(Violation {
                            kind: ViolationKind::C2SharedGuard,
                            vertices: alloc::vec![x, y],
                            detail: v as i64,
                        });
                    }
                }
            }
            Label::One => {}
        }
        let sum = closed_neighborhood_sum(g, f, v);
        if sum < 1 {
            violations.push(Violation {
                kind: ViolationKind::C3NonpositiveSum,
                vertices: alloc::vec![v],
                detail: sum,
            });
        }
    }
    violations.sort();
    Ok(ValidationReport { violations })
}

/// Short-circuiting validity check.
pub fn is_valid(g: &Graph, f: &Labeling) -> bool {
    g.n() == f.len() && is_valid_slice(g, f.labels())
}

pub(crate) fn is_valid_slice(g: &Graph, f: &[Label]) -> bool {
    (0..g.n()).all(|v| {
        let mut sum = f[v].value();
        let mut twos = 0;
        let mut minus = 0;
        for &u in g.neighbors(v) {
            sum += f[u].value();
            match f[u] {
                Label::Two => twos += 1,
                Label::Minus => minus += 1,
                Label::One => {}
            }
        }
        sum >= 1
            && match f[v] {
                Label::Minus => twos == 1,
                Label::Two => minus <= 1,
                Label::One => true,
            }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, FamilySpec};

    fn lab(values: &[i64]) -> Labeling {
        Labeling::from_values(values).unwrap()
    }

    #[test]
    fn validate_examples() {
        let p3 = generate(&FamilySpec::Path(3)).unwrap();
        assert!(validate(&p3, &lab(&[-1, 2, 1])).unwrap().is_valid());

        let c4 = generate(&FamilySpec::Cycle(4)).unwrap();
        assert!(validate(&c4, &lab(&[1, 1, 1, 1])).unwrap().is_valid());

        let report = validate(&c4, &lab(&[2, -1, 1, -1])).unwrap();
        let shared: Vec<_> =
            report.violations.iter().filter(|v| v.kind == ViolationKind::C2SharedGuard).collect();
        assert_eq!(shared.len(), 1);
        assert_eq!(shared[0].vertices, [1, 3]);
        assert_eq!(shared[0].detail, 0);

        let report = validate(&p3, &lab(&[-1, -1, 2])).unwrap();
        assert!(report.contains(ViolationKind::C1NoGuard, &[0]));
        let c3_at_1 = report
            .violations
            .iter()
            .find(|v| v.kind == ViolationKind::C3NonpositiveSum && v.vertices == [1])
            .unwrap();
        assert_eq!(c3_at_1.detail, 0);
    }

    #[test]
    fn multi_guard_and_report_order() {
        let p3 = generate(&FamilySpec::Path(3)).unwrap();
        let report = validate(&p3, &lab(&[2, -1, 2])).unwrap();
        assert_eq!(report.len(), 1);
        assert_eq!(report.violations[0].kind, ViolationKind::C1MultiGuard);
        assert_eq!(report.violations[0].detail, 2);

        let k4 = generate(&FamilySpec::Complete(4)).unwrap();
        let report = validate(&k4, &lab(&[-1, -1, -1, 2])).unwrap();
        let kinds: Vec<_> = report.violations.iter().map(|v| v.kind).collect();
        let mut sorted = kinds.clone();
        sorted.sort();
        assert_eq!(kinds, sorted);
        // One violation per unordered pair sharing guard 3.
        let pairs: Vec<_> = report
            .violations
            .iter()
            .filter(|v| v.kind == ViolationKind::C2SharedGuard)
            .map(|v| v.vertices.clone())
            .collect();
        assert_eq!(pairs, [[0, 1], [0, 2], [1, 2]]);
    }

    #[test]
    fn length_mismatch() {
        let p3 = generate(&FamilySpec::Path(3)).unwrap();
        assert_eq!(
            validate(&p3, &lab(&[1, 1])),
            Err(Error::LengthMismatch { expected: 3, found: 2 })
        );
        assert!(!is_valid(&p3, &lab(&[1, 1])));
    }

    #[test]
    fn stats_examples() {
        let s = stats(&lab(&[-1, 2, 1]));
        assert_eq!((s.count_minus, s.count_one, s.count_two, s.weight), (1, 1, 1, 2));
        let s = stats(&lab(&[1, 1, 1, 1]));
        assert_eq!((s.count_minus, s.count_one, s.count_two, s.weight), (0, 4, 0, 4));
        let s = stats(&lab(&[-1, 2, 2, -1]));
        assert_eq!((s.count_minus, s.count_one, s.count_two, s.weight), (2, 0, 2, 2));
    }

    #[test]
    fn closed_sums() {
        let p3 = generate(&FamilySpec::Path(3)).unwrap();
        assert_eq!(closed_neighborhood_sum(&p3, &lab(&[-1, 2, 1]), 0), 1);
        let k4 = generate(&FamilySpec::Complete(4)).unwrap();
        for v in 0..4 {
            assert_eq!(closed_neighborhood_sum(&k4, &Labeling::all_ones(4), v), 4);
        }
        let s3 = generate(&FamilySpec::Star(3)).unwrap();
        assert_eq!(closed_neighborhood_sum(&s3, &lab(&[2, -1, 1, 1]), 0), 3);
    }

    #[test]
    fn invalid_label_value() {
        assert_eq!(Labeling::from_values(&[1, 0]), Err(Error::InvalidLabel(0)));
    }

    #[test]
    fn kind_names_round_trip() {
        for name in ["C1_NoGuard", "C1_MultiGuard", "C2_SharedGuard", "C3_NonpositiveSum"] {
            assert_eq!(ViolationKind::from_name(name).unwrap().name(), name);
        }
    }
}
