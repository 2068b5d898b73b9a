//! Deterministic upper-bound certificates, one per graph family.
//!
//! Two-row families (ladders, prisms) are assembled from column blocks; the
//! top entry of a column labels `a_i` and the bottom entry labels `b_i`.
//! Every emitted labeling is re-validated before it is returned.

use alloc::vec;
use alloc::vec::Vec;

use crate::bounds::{self, BoundsRecord};
use crate::error::{Error, Result};
use crate::family::{generate, FamilySpec, Snark};
use crate::labeling::{validate, Label, Labeling};

/// A labeling of a family member together with the weight it certifies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionResult {
    pub labeling: Labeling,
    pub claimed_weight: i64,
    pub family: FamilySpec,
}

type Column = [i8; 2];

const BLOCK_X: [Column; 5] = [[-1, 2], [1, 2], [-1, -1], [2, 1], [2, -1]];
const BLOCK_Y: [Column; 5] = [[2, -1], [2, 1], [-1, -1], [1, 2], [-1, 2]];

const LADDER_TAIL: [&[Column]; 5] = [
    &[],
    &[[1, 1]],
    &[[1, 1], [2, -1]],
    &[[1, 2], [-1, -1], [2, 1]],
    &[[1, 2], [-1, -1], [2, 1], [2, -1]],
];

const PRISM_3: [Column; 3] = [[1, 2], [-1, -1], [2, 1]];
const PRISM_Y1: [Column; 6] = [[2, -1], [2, 1], [-1, -1], [1, 2], [1, 1], [-1, 2]];
const PRISM_Y2: [Column; 7] = [[2, -1], [2, 1], [-1, -1], [1, 2], [2, 1], [-1, -1], [1, 2]];
const PRISM_Y3: [Column; 8] =
    [[2, -1], [2, 1], [-1, -1], [1, 2], [2, 1], [-1, -1], [1, 2], [-1, 2]];
const PRISM_Y4: [Column; 4] = [[1, 2], [-1, -1], [2, 1], [1, 1]];
const PRISM_Y5: [Column; 5] = [[-1, 2], [1, 2], [-1, -1], [2, 1], [1, 1]];
const PRISM_Y6: [Column; 1] = [[1, 1]];
const PRISM_Y7: [Column; 2] = [[2, -1], [1, 1]];
const PRISM_Y8: [Column; 3] = [[2, 1], [-1, -1], [1, 2]];
const PRISM_Y9: [Column; 4] = [[2, 1], [-1, -1], [1, 2], [-1, 2]];

fn label(v: i8) -> Label {
    match v {
        -1 => Label::Minus,
        1 => Label::One,
        2 => Label::Two,
        _ => unreachable!("block constants only hold -1, 1, 2"),
    }
}

fn from_columns(columns: &[Column]) -> Vec<Label> {
    let n = columns.len();
    let mut labels = vec![Label::One; 2 * n];
    for (i, col) in columns.iter().enumerate() {
        labels[i] = label(col[0]);
        labels[n + i] = label(col[1]);
    }
    labels
}

fn ladder_columns(n: usize) -> Vec<Column> {
    let k = n / 5;
    let mut cols = Vec::with_capacity(n);
    if k % 2 == 0 {
        for _ in 0..k / 2 {
            cols.extend_from_slice(&BLOCK_X);
            cols.extend_from_slice(&BLOCK_Y);
        }
    } else {
        for _ in 0..(k - 1) / 2 {
            cols.extend_from_slice(&BLOCK_Y);
            cols.extend_from_slice(&BLOCK_X);
        }
        cols.extend_from_slice(&BLOCK_Y);
    }
    cols.extend_from_slice(LADDER_TAIL[n % 5]);
    cols
}

fn prism_columns(n: usize) -> Vec<Column> {
    if n == 3 {
        return PRISM_3.to_vec();
    }
    let q = n / 10;
    let r = n % 10;
    // Residues 1..=3 close with X followed by a longer block, so they use one
    // fewer full X|Y pair.
    let pairs = if (1..=3).contains(&r) { q - 1 } else { q };
    let mut cols = Vec::with_capacity(n);
    for _ in 0..pairs {
        cols.extend_from_slice(&BLOCK_X);
        cols.extend_from_slice(&BLOCK_Y);
    }
    let tail: &[Column] = match r {
        0 => &[],
        1 => &PRISM_Y1,
        2 => &PRISM_Y2,
        3 => &PRISM_Y3,
        4 => &PRISM_Y4,
        5 => &PRISM_Y5,
        6 => &PRISM_Y6,
        7 => &PRISM_Y7,
        8 => &PRISM_Y8,
        _ => &PRISM_Y9,
    };
    if !matches!(r, 0 | 4 | 5) {
        cols.extend_from_slice(&BLOCK_X);
    }
    cols.extend_from_slice(tail);
    cols
}

fn path_like(n: usize, cycle: bool) -> Vec<Label> {
    let (blocks, tail): (usize, &[i8]) = match (n % 3, cycle) {
        (0, _) => (n / 3, &[]),
        (1, false) => (n / 3 - 1, &[-1, 2, 2, -1]),
        (1, true) => (n / 3 - 1, &[-1, 2, 1, 1]),
        (_, false) => (n / 3, &[2, -1]),
        (_, true) => (n / 3, &[1, 1]),
    };
    let mut labels = Vec::with_capacity(n);
    for _ in 0..blocks {
        labels.extend([Label::Minus, Label::Two, Label::One]);
    }
    labels.extend(tail.iter().map(|&v| label(v)));
    labels
}

fn wheel(n: usize) -> Vec<Label> {
    let mut labels = vec![Label::One; n + 1];
    let k = n / 4;
    for i in 0..k {
        let base = 4 * i + 1;
        labels[base] = Label::Two;
        labels[base + 1] = Label::Minus;
        labels[base + 2] = Label::Minus;
        labels[base + 3] = Label::Two;
    }
    if n % 4 == 3 {
        labels[4 * k + 1] = Label::Two;
        labels[4 * k + 2] = Label::Minus;
    }
    labels
}

fn grid3(n: usize) -> Vec<Label> {
    (0..n)
        .flat_map(|j| {
            if j % 2 == 0 {
                [Label::Minus, Label::Two, Label::One]
            } else {
                [Label::One, Label::Two, Label::Minus]
            }
        })
        .collect()
}

fn flower_snark(n: usize) -> Vec<Label> {
    use Label::{Minus, One, Two};
    let s = Snark::new(n);
    let mut f = vec![One; 4 * (2 * n + 1)];
    // Tail labels for a, c and d alternate in runs of two with period four;
    // b stays 1 throughout the tails.
    let tail = |j: usize| if j % 4 <= 1 { (Minus, Two) } else { (Two, Minus) };
    let set_mirrored = |f: &mut Vec<Label>, left: usize, right: usize, j: usize| {
        let (a, cd) = tail(j);
        for (idx_left, idx_right, value) in [
            (s.a(left), s.a(right), a),
            (s.b(left), s.b(right), One),
            (s.c(left), s.c(right), cd),
            (s.d(left), s.d(right), cd),
        ] {
            f[idx_left] = value;
            f[idx_right] = value;
        }
    };
    if n % 2 == 0 {
        f[s.a(n)] = Two;
        f[s.a(n - 1)] = One;
        f[s.a(n + 1)] = One;
        f[s.a(n - 2)] = Minus;
        f[s.a(n + 2)] = Minus;
        f[s.b(n)] = Minus;
        f[s.b(n - 1)] = Minus;
        f[s.b(n + 1)] = Minus;
        f[s.b(n - 2)] = Two;
        f[s.b(n + 2)] = Two;
        f[s.c(n)] = One;
        f[s.c(n - 1)] = Minus;
        f[s.c(n + 1)] = Two;
        f[s.c(n - 2)] = Two;
        f[s.c(n + 2)] = One;
        f[s.d(n)] = One;
        f[s.d(n - 1)] = Two;
        f[s.d(n + 1)] = Minus;
        f[s.d(n - 2)] = One;
        f[s.d(n + 2)] = Two;
        for j in 1..n - 1 {
            set_mirrored(&mut f, n - 2 - j, n + 2 + j, j);
        }
    } else {
        f[s.a(n)] = Two;
        f[s.a(n - 1)] = One;
        f[s.a(n + 1)] = One;
        f[s.b(n)] = Minus;
        f[s.b(n - 1)] = Minus;
        f[s.b(n + 1)] = Minus;
        f[s.c(n)] = One;
        f[s.c(n - 1)] = One;
        f[s.c(n + 1)] = One;
        f[s.d(n)] = One;
        f[s.d(n - 1)] = Two;
        f[s.d(n + 1)] = Two;
        for j in 1..n {
            set_mirrored(&mut f, n - 1 - j, n + 1 + j, j);
        }
    }
    f
}

fn labels_for(spec: &FamilySpec) -> Result<Vec<Label>> {
    use Label::{Minus, One, Two};
    Ok(match *spec {
        FamilySpec::Path(n) => path_like(n, false),
        FamilySpec::Cycle(n) => path_like(n, true),
        FamilySpec::Complete(n) => {
            let mut f = vec![One; n];
            f[0] = Minus;
            f[1] = Two;
            f
        }
        FamilySpec::CompleteBipartite { p, n } => {
            let mut f = vec![One; p + n];
            if p == 2 {
                // Only one -1 fits when a part has two vertices.
                f[0] = Minus;
                f[p] = Two;
            } else {
                f[0] = Minus;
                f[1] = Two;
                f[p] = Minus;
                f[p + 1] = Two;
            }
            f
        }
        FamilySpec::Star(n) => {
            let mut f = vec![One; n + 1];
            f[0] = Two;
            f[1] = Minus;
            f
        }
        FamilySpec::Wheel(n) => wheel(n),
        FamilySpec::Ladder(n) => from_columns(&ladder_columns(n)),
        FamilySpec::Prism(n) => from_columns(&prism_columns(n)),
        FamilySpec::Grid3(n) => grid3(n),
        FamilySpec::FlowerSnark(n) => flower_snark(n),
        FamilySpec::ExplicitTree(_) => return Err(Error::UnsupportedFamily("tree")),
    })
}

/// The value a construction certifies: the exact value where one is known,
/// otherwise the upper bound.
fn certified_value(record: &BoundsRecord) -> i64 {
    record.exact.or(record.upper).expect("every constructible family has an upper value")
}

/// Builds the certificate labeling for `spec`.
///
/// Explicit trees are handled by [`bounds::tree_construction`].
pub fn construct(spec: &FamilySpec) -> Result<ConstructionResult> {
    if let FamilySpec::ExplicitTree(_) = spec {
        return Err(Error::UnsupportedFamily("tree"));
    }
    spec.validate()?;
    let labeling = Labeling::new(labels_for(spec)?);
    let g = generate(spec)?;
    let report = validate(&g, &labeling)?;
    let claimed_weight = certified_value(&bounds::closed_form(spec)?);
    if !report.is_valid() || labeling.weight() != claimed_weight {
        return Err(Error::ConstructionInvalid {
            family: spec.kind().name(),
            violations: report.len(),
        });
    }
    Ok(ConstructionResult { labeling, claimed_weight, family: spec.clone() })
}

/// The closed-form record for `spec`; see [`bounds::closed_form`].
pub fn formula_value(spec: &FamilySpec) -> Result<BoundsRecord> {
    bounds::closed_form(spec)
}
