use super::paths::{self, UNREACHABLE};
use super::{EdgeId, Threshold, Vertex, WeightedGraph};
use crate::error::Result;

/// The graph `G′`: every edge of weight `≤ epsilon` counts as 0, all others
/// keep their weight. Satisfies `d_G′ ≤ d_G ≤ d_G′ + epsilon·n`.
#[derive(Debug, Clone, Copy)]
pub struct FilteredGraph<'a> {
    base: &'a WeightedGraph,
    epsilon: Threshold,
}

impl<'a> FilteredGraph<'a> {
    pub fn new(base: &'a WeightedGraph, epsilon: Threshold) -> Self {
        FilteredGraph { base, epsilon }
    }

    pub fn base(&self) -> &'a WeightedGraph {
        self.base
    }

    pub fn epsilon(&self) -> Threshold {
        self.epsilon
    }

    pub fn effective(&self, w: u64) -> u64 {
        if self.epsilon.admits(w) {
            0
        } else {
            w
        }
    }

    pub fn edge_weight(&self, e: EdgeId) -> u64 {
        self.effective(self.base.edge(e).weight)
    }

    /// Capped single-source distances in `G′`; farther vertices are `UNREACHABLE`.
    pub fn distances_from(&self, source: Vertex, cap: u64) -> Vec<u64> {
        let eps = self.epsilon;
        paths::sssp(self.base, source, cap, move |w| if eps.admits(w) { 0 } else { w })
    }

    pub fn filtered_distance(&self, u: Vertex, v: Vertex) -> Result<u64> {
        self.base.check_vertex(u)?;
        self.base.check_vertex(v)?;
        Ok(self.distances_from(u, UNREACHABLE - 1)[v])
    }

    /// Connected components of the zero-weight edges (the super-vertices).
    pub fn zero_classes(&self) -> super::ContractionMap {
        self.base.contract_below(self.epsilon)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::random_connected;
    use proptest::prelude::*;

    #[test]
    fn large_threshold_collapses_everything() {
        let g = random_connected(12, 10, 5, 1);
        let f = g.filtered(Threshold::integer(5));
        for u in 0..12 {
            for v in 0..12 {
                assert_eq!(f.filtered_distance(u, v).unwrap(), 0);
            }
        }
    }

    #[test]
    fn zero_threshold_is_identity() {
        let g = random_connected(12, 10, 5, 2);
        let f = g.filtered(Threshold::zero());
        let apsp = g.all_pairs();
        for u in 0..12 {
            for v in 0..12 {
                assert_eq!(f.filtered_distance(u, v).unwrap(), apsp[u][v]);
            }
        }
    }

    #[test]
    fn invalid_vertex() {
        let g = random_connected(4, 0, 5, 2);
        assert!(g.filtered(Threshold::zero()).filtered_distance(0, 9).is_err());
    }

    proptest! {
        #[test]
        fn sandwich_bound(seed in 0u64..300, num in 0u64..40, den in 1u64..5) {
            let g = random_connected(20, 25, 12, seed);
            let eps = Threshold::new(num, den);
            let f = g.filtered(eps);
            let n = g.n() as f64;
            for u in 0..g.n() {
                let exact = g.distances_from(u);
                let filt = f.distances_from(u, UNREACHABLE - 1);
                for v in 0..g.n() {
                    prop_assert!(filt[v] <= exact[v]);
                    prop_assert!(exact[v] as f64 <= filt[v] as f64 + eps.as_f64() * n);
                }
            }
        }
    }
}
