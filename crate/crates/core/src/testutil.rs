//! Shared fixtures for unit tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::WeightedGraph;

/// Random recursive tree plus `extra` random chords, weights uniform in `[1, w]`.
pub(crate) fn random_connected(n: usize, extra: usize, w: u64, seed: u64) -> WeightedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = WeightedGraph::new(n, w).unwrap();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.insert_edge(u, v, rng.gen_range(1..=w)).unwrap();
    }
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && g.edge_id(u, v).is_none() {
            g.insert_edge(u, v, rng.gen_range(1..=w)).unwrap();
        }
    }
    g
}
