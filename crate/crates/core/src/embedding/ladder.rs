use crate::decomposition::{DecompositionParams, Scale};
use crate::graph::{Threshold, WeightedGraph};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Level {
    /// 1-based level number `i`.
    pub index: usize,
    /// `R_i = 2^(i-2)`.
    pub scale: Scale,
    /// `ε_i = R_i / (2n)`.
    pub epsilon: Threshold,
    /// `β_i = c0 · ln(n) / R_i`, kept for diagnostics.
    pub beta: f64,
}

/// The scales `R_1 = 1/2, 1, 2, …, Δ/2`, one per embedding coordinate.
#[derive(Debug, Clone, PartialEq)]
pub struct ScaleLadder {
    n: usize,
    delta: u64,
    levels: Vec<Level>,
}

impl ScaleLadder {
    pub fn new(n: usize, delta: u64, params: &DecompositionParams) -> Self {
        assert!(delta.is_power_of_two(), "Δ must be a power of two");
        let count = delta.trailing_zeros() as usize + 1;
        let levels = (1..=count)
            .map(|i| {
                let scale = Scale::from_half_units(1u64 << (i - 1));
                Level {
                    index: i,
                    scale,
                    epsilon: scale.epsilon(n),
                    beta: params.beta(n, scale),
                }
            })
            .collect();
        ScaleLadder { n, delta, levels }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn delta(&self) -> u64 {
        self.delta
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    /// Level by 0-based position.
    pub fn level(&self, k: usize) -> &Level {
        &self.levels[k]
    }
}

pub fn build_scale_ladder(g: &WeightedGraph, params: &DecompositionParams) -> ScaleLadder {
    ScaleLadder::new(g.n(), g.delta(), params)
}
