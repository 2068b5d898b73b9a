//! Reproducible random graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use plsrd_core::family::tree_from_prufer;
use plsrd_core::{generate, FamilySpec, Graph, Result};

/// Tree on `n >= 2` vertices decoded from a uniform Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Result<FamilySpec> {
    if n < 2 {
        return Err(plsrd_core::Error::InvalidFamilyParams { family: "tree", reason: format!("n = {n}, need n >= 2") });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sequence: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    tree_from_prufer(&sequence)
}

/// Connected graph: a random spanning tree plus each remaining pair with
/// probability `extra_edge_prob`.
pub fn random_connected_graph(n: usize, extra_edge_prob: f64, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tree_seed = rng.gen();
    let FamilySpec::ExplicitTree(mut edges) = random_tree(n, tree_seed)? else {
        unreachable!("random_tree returns an explicit tree")
    };
    for u in 0..n {
        for v in u + 1..n {
            let present = edges.iter().any(|&(a, b)| (a.min(b), a.max(b)) == (u, v));
            if !present && rng.gen_bool(extra_edge_prob) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// The corpus of random connected graphs used by the oracle checks:
/// `count` graphs with orders cycling through `min_n..=max_n`.
pub fn oracle_corpus(count: usize, min_n: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let span = max_n - min_n + 1;
    (0..count)
        .map(|i| {
            let n = min_n + i % span;
            let prob = [0.15, 0.3, 0.5][i % 3];
            random_connected_graph(n, prob, seed.wrapping_add(i as u64)).expect("orders are at least 2")
        })
        .collect()
}

/// `count` random trees with orders cycling through `min_n..=max_n`.
pub fn tree_corpus(count: usize, min_n: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let span = max_n - min_n + 1;
    (0..count)
        .map(|i| {
            let spec = random_tree(min_n + i % span, seed.wrapping_add(i as u64)).expect("orders are at least 2");
            generate(&spec).expect("decoded trees are valid")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trees_are_reproducible_and_valid() {
        for n in 2..30 {
            let a = random_tree(n, 7).unwrap();
            assert_eq!(a, random_tree(n, 7).unwrap());
            let g = generate(&a).unwrap();
            assert_eq!(g.n(), n);
            assert!(g.is_tree());
        }
        assert_ne!(random_tree(12, 1).unwrap(), random_tree(12, 2).unwrap());
        assert!(random_tree(1, 0).is_err());
    }

    #[test]
    fn connected_graphs() {
        for (i, g) in oracle_corpus(30, 4, 12, 99).iter().enumerate() {
            assert_eq!(g.n(), 4 + i % 9);
            assert!(g.is_connected());
        }
        assert_eq!(oracle_corpus(5, 4, 12, 3), oracle_corpus(5, 4, 12, 3));
    }
}
