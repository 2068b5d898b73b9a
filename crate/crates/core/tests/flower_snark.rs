use std::collections::BTreeSet;

use plsrd_core::bounds::{closed_form, cubic_lower_bound};
use plsrd_core::family::Snark;
use plsrd_core::labeling::is_valid;
use plsrd_core::{construct, generate, FamilySpec, Graph, Labeling};

/// `(f(v), |N(v) ∩ V-1|, |N(v) ∩ V1|, |N(v) ∩ V2|, sum over N[v])`.
type Signature = (i64, usize, usize, usize, i64);

fn signature(g: &Graph, f: &Labeling, v: usize) -> Signature {
    let mut counts = [0usize; 3];
    let mut sum = f[v].value();
    for &u in g.neighbors(v) {
        let value = f[u].value();
        sum += value;
        counts[match value {
            -1 => 0,
            1 => 1,
            _ => 2,
        }] += 1;
    }
    (f[v].value(), counts[0], counts[1], counts[2], sum)
}

const EVEN_ROWS: [Signature; 8] = [
    (2, 1, 2, 0, 3),
    (1, 2, 0, 1, 1),
    (-1, 1, 1, 1, 1),
    (2, 1, 1, 1, 4),
    (-1, 0, 2, 1, 3),
    (1, 1, 0, 2, 4),
    (2, 1, 0, 2, 5),
    (1, 0, 0, 3, 7),
];

const ODD_ROWS: [Signature; 8] = [
    (2, 1, 2, 0, 3),
    (1, 2, 0, 1, 1),
    (-1, 1, 1, 1, 1),
    (2, 1, 1, 1, 4),
    (1, 1, 1, 1, 3),
    (-1, 0, 2, 1, 3),
    (1, 1, 0, 2, 4),
    (1, 1, 2, 0, 2),
];

fn snark(n: usize) -> (Graph, Labeling, Snark) {
    let spec = FamilySpec::FlowerSnark(n);
    let g = generate(&spec).unwrap();
    let c = construct(&spec).unwrap();
    assert!(is_valid(&g, &c.labeling));
    (g, c.labeling, Snark::new(n))
}

#[test]
fn construction_weights() {
    for (n, weight) in [(2, 13), (3, 19), (4, 23), (5, 29), (6, 33), (7, 39)] {
        let (g, f, _) = snark(n);
        assert_eq!(f.weight(), weight, "J{}", 2 * n + 1);
        assert_eq!(g.n(), 8 * n + 4);
        assert_eq!(closed_form(&FamilySpec::FlowerSnark(n)).unwrap().upper, Some(weight));
    }
}

#[test]
fn cubic_lower_bounds() {
    for (n, lower) in [(2, 12), (3, 17), (4, 22), (5, 27)] {
        let (g, _, _) = snark(n);
        assert_eq!(cubic_lower_bound(&g).unwrap(), lower);
    }
}

#[test]
fn row_signatures_match_expected_rows() {
    for n in 3..=12 {
        let (g, f, _) = snark(n);
        let expected: BTreeSet<Signature> = if n % 2 == 0 { EVEN_ROWS } else { ODD_ROWS }.into_iter().collect();
        let seen: BTreeSet<Signature> = (0..g.n()).map(|v| signature(&g, &f, v)).collect();
        assert_eq!(seen, expected, "J{}", 2 * n + 1);
    }
}

#[test]
fn named_vertices_even() {
    for n in [4, 6, 8] {
        let (g, f, s) = snark(n);
        let sig = |v| signature(&g, &f, v);
        assert_eq!(sig(s.a(n)), (2, 1, 2, 0, 3));
        assert_eq!(sig(s.b(n)), (-1, 0, 2, 1, 3));
        assert_eq!(sig(s.c(n - 2)), (2, 1, 0, 2, 5));
        assert_eq!(sig(s.d(n + 2)), (2, 1, 0, 2, 5));
        assert_eq!(sig(s.c(n + 2)), (1, 0, 0, 3, 7));
        assert_eq!(sig(s.d(n - 2)), (1, 0, 0, 3, 7));
        for v in [s.a(n - 1), s.a(n + 1), s.c(n), s.d(n)] {
            assert_eq!(sig(v), (1, 2, 0, 1, 1));
        }
    }
}

#[test]
fn named_vertices_odd() {
    for n in [3, 5, 7] {
        let (g, f, s) = snark(n);
        let sig = |v| signature(&g, &f, v);
        for v in [s.a(n), s.c(n - 2), s.c(n + 2)] {
            assert_eq!(sig(v), (2, 1, 2, 0, 3));
        }
        for v in [s.a(n - 2), s.a(n + 2), s.b(n), s.b(n - 1), s.b(n + 1)] {
            assert_eq!(sig(v), (-1, 0, 2, 1, 3));
        }
        assert_eq!(sig(s.c(n - 1)), (1, 1, 1, 1, 3));
        assert_eq!(sig(s.c(n + 1)), (1, 1, 1, 1, 3));
        assert_eq!(sig(s.d(n)), (1, 1, 0, 2, 4));
        assert_eq!(sig(s.c(n)), (1, 1, 2, 0, 2));
    }
}

#[test]
fn smallest_even_case_differs_at_two_vertices() {
    let (g, f, s) = snark(2);
    let special = [s.c(4), s.d(0)];
    for v in 0..g.n() {
        let sig = signature(&g, &f, v);
        if special.contains(&v) {
            assert_eq!(sig, (1, 0, 1, 2, 6));
        } else {
            assert!(EVEN_ROWS.contains(&sig), "vertex {v}: {sig:?}");
        }
    }
}
