//! Seeded Erdős-Rényi graphs for property tests and corpus sweeps.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;

/// `G(n, p)`: each of the `n(n-1)/2` pairs is an edge with probability `p`.
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, pairs).expect("random edges are valid")
}

/// Edge probabilities used by [`seeded_corpus`].
pub const CORPUS_PROBABILITIES: [f64; 3] = [0.2, 0.5, 0.8];

/// Deterministic corpus of `count` graphs with `1 <= n <= max_n`, cycling
/// through [`CORPUS_PROBABILITIES`].
pub fn seeded_corpus(seed: u64, count: usize, max_n: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(1..=max_n);
            gnp(
                n,
                CORPUS_PROBABILITIES[i % CORPUS_PROBABILITIES.len()],
                &mut rng,
            )
        })
        .collect()
}
