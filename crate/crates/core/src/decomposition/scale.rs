use crate::graph::Threshold;

/// A distance scale `R`, stored in half-units so that `R = 1/2` is exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scale {
    half_units: u64,
}

impl Scale {
    /// `R = half_units / 2`.
    pub fn from_half_units(half_units: u64) -> Self {
        Scale { half_units }
    }

    pub fn integer(r: u64) -> Self {
        Scale { half_units: 2 * r }
    }

    pub fn half_units(&self) -> u64 {
        self.half_units
    }

    pub fn value(&self) -> f64 {
        self.half_units as f64 / 2.0
    }

    /// `d ≤ R`.
    pub fn covers(&self, d: u64) -> bool {
        (d as u128) * 2 <= self.half_units as u128
    }

    /// The contraction threshold `R/(2n)`.
    pub fn epsilon(&self, n: usize) -> Threshold {
        Threshold::new(self.half_units, 4 * n.max(1) as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_scale_is_exact() {
        let s = Scale::from_half_units(1);
        assert_eq!(s.value(), 0.5);
        assert!(!s.covers(1));
        assert!(s.covers(0));
        assert!(Scale::integer(4).covers(4));
        assert!(!Scale::integer(4).covers(5));
    }

    #[test]
    fn epsilon_is_r_over_2n() {
        let eps = Scale::integer(16).epsilon(3);
        assert!((eps.as_f64() - 16.0 / 6.0).abs() < 1e-12);
        assert_eq!(eps.floor(), 2);
    }
}
