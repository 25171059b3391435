use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::{Vertex, WeightedGraph};

/// Distance reported for vertices not reached (disconnected or beyond a cap).
pub const UNREACHABLE: u64 = u64::MAX;

/// Dijkstra with an edge-weight transform (used for the filtered view) and an
/// inclusive distance cap. Vertices beyond the cap stay `UNREACHABLE`.
pub(crate) fn sssp<F>(g: &WeightedGraph, source: Vertex, cap: u64, effective: F) -> Vec<u64>
where
    F: Fn(u64) -> u64,
{
    let mut dist = vec![UNREACHABLE; g.n()];
    let mut heap = BinaryHeap::new();
    dist[source] = 0;
    heap.push(Reverse((0u64, source)));
    while let Some(Reverse((d, x))) = heap.pop() {
        if d > dist[x] {
            continue;
        }
        for &(y, e) in g.neighbors(x) {
            let nd = d + effective(g.edge(e).weight);
            if nd <= cap && nd < dist[y] {
                dist[y] = nd;
                heap.push(Reverse((nd, y)));
            }
        }
    }
    dist
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::UpdateEvent;
    use crate::testutil::random_connected;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn bellman_ford(g: &WeightedGraph, s: Vertex) -> Vec<u64> {
        let mut dist = vec![UNREACHABLE; g.n()];
        dist[s] = 0;
        for _ in 0..g.n() {
            for e in g.edges() {
                for (a, b) in [(e.u, e.v), (e.v, e.u)] {
                    if dist[a] != UNREACHABLE && dist[a] + e.weight < dist[b] {
                        dist[b] = dist[a] + e.weight;
                    }
                }
            }
        }
        dist
    }

    #[test]
    fn matches_bellman_ford_on_random_graphs() {
        for seed in 0..20 {
            let g = random_connected(20, 25, 9, seed);
            for s in 0..g.n() {
                assert_eq!(g.distances_from(s), bellman_ford(&g, s), "seed {seed} source {s}");
            }
        }
    }

    #[test]
    fn distances_are_monotone_under_increases() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut g = random_connected(30, 40, 20, 3);
        let w = 60;
        g = {
            let edges: Vec<_> = g.edges().iter().map(|e| (e.u, e.v, e.weight)).collect();
            WeightedGraph::from_edges(30, w, &edges).unwrap()
        };
        let mut prev = g.all_pairs();
        let mut applied = 0;
        while applied < 100 {
            let id = rng.gen_range(0..g.m());
            let e = *g.edge(id);
            if e.weight == w {
                continue;
            }
            let nw = rng.gen_range(e.weight + 1..=w);
            g.apply_weight_increase(&UpdateEvent::new(e.u, e.v, nw)).unwrap();
            let cur = g.all_pairs();
            for (a, b) in prev.iter().flatten().zip(cur.iter().flatten()) {
                assert!(b >= a);
            }
            prev = cur;
            applied += 1;
        }
    }

    proptest! {
        #[test]
        fn source_distance_is_zero(seed in 0u64..1000, n in 1usize..25) {
            let g = random_connected(n, n, 7, seed);
            for s in 0..n {
                prop_assert_eq!(g.dijkstra(s, None).unwrap()[s], Some(0));
            }
        }

        #[test]
        fn cap_only_hides_far_vertices(seed in 0u64..1000, cap in 0u64..30) {
            let g = random_connected(15, 10, 9, seed);
            let full = g.dijkstra(0, None).unwrap();
            let capped = g.dijkstra(0, Some(cap)).unwrap();
            for (f, c) in full.iter().zip(&capped) {
                let f = f.unwrap();
                if f <= cap {
                    prop_assert_eq!(*c, Some(f));
                } else {
                    prop_assert_eq!(*c, None);
                }
            }
        }
    }
}
