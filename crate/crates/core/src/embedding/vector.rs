use std::sync::atomic::{AtomicU64, Ordering};

use super::ScaleLadder;
use crate::error::{Error, Result};
use crate::graph::Vertex;

/// Exponent of an `ℓp` norm. `Infinity` is the max-coordinate norm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Lp {
    Finite(f64),
    Infinity,
}

impl Lp {
    pub const L1: Lp = Lp::Finite(1.0);
    pub const L2: Lp = Lp::Finite(2.0);

    pub fn new(p: f64) -> Result<Self> {
        if p == f64::INFINITY {
            Ok(Lp::Infinity)
        } else if p >= 1.0 && p.is_finite() {
            Ok(Lp::Finite(p))
        } else {
            Err(Error::InvalidParameter(format!("p = {p} is not in [1, ∞]")))
        }
    }

    /// Norm of a vector given by its absolute coordinates.
    pub fn norm<I: IntoIterator<Item = f64>>(&self, coords: I) -> f64 {
        match *self {
            Lp::Infinity => coords.into_iter().fold(0.0, f64::max),
            Lp::Finite(1.0) => coords.into_iter().sum(),
            Lp::Finite(p) => {
                let xs: Vec<f64> = coords.into_iter().collect();
                let m = xs.iter().copied().fold(0.0, f64::max);
                if m == 0.0 {
                    return 0.0;
                }
                m * xs.iter().map(|x| (x / m).powf(p)).sum::<f64>().powf(1.0 / p)
            }
        }
    }
}

impl std::str::FromStr for Lp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inf" | "infinity" | "∞" => Ok(Lp::Infinity),
            _ => Lp::new(
                s.parse::<f64>()
                    .map_err(|_| Error::InvalidParameter(format!("bad p: {s:?}")))?,
            ),
        }
    }
}

/// Per-vertex membership bits, one per ladder level. Coordinate `i` of `ρ(v)`
/// is `R_i` when bit `i` is set and 0 otherwise; coordinates are kept as
/// integers in half-units so `R_1 = 1/2` is exact.
#[derive(Debug)]
pub struct MultiScaleEmbedding {
    ladder: ScaleLadder,
    bits: Vec<u64>,
    coordinates_read: AtomicU64,
}

impl Clone for MultiScaleEmbedding {
    fn clone(&self) -> Self {
        MultiScaleEmbedding {
            ladder: self.ladder.clone(),
            bits: self.bits.clone(),
            coordinates_read: AtomicU64::new(0),
        }
    }
}

impl PartialEq for MultiScaleEmbedding {
    fn eq(&self, other: &Self) -> bool {
        self.ladder == other.ladder && self.bits == other.bits
    }
}

impl MultiScaleEmbedding {
    /// All-zero embedding.
    pub fn zeros(ladder: ScaleLadder) -> Self {
        assert!(ladder.len() <= 64, "at most 64 levels");
        let n = ladder.n();
        MultiScaleEmbedding {
            ladder,
            bits: vec![0; n],
            coordinates_read: AtomicU64::new(0),
        }
    }

    pub(crate) fn from_bits(ladder: ScaleLadder, bits: Vec<u64>) -> Self {
        assert_eq!(bits.len(), ladder.n());
        MultiScaleEmbedding {
            ladder,
            bits,
            coordinates_read: AtomicU64::new(0),
        }
    }

    pub fn ladder(&self) -> &ScaleLadder {
        &self.ladder
    }

    pub fn n(&self) -> usize {
        self.bits.len()
    }

    pub fn dimension(&self) -> usize {
        self.ladder.len()
    }

    fn check(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidVertex { v, n: self.n() })
        }
    }

    /// Membership bitmask of `v`; bit `k` is level `k + 1`.
    pub fn membership(&self, v: Vertex) -> u64 {
        self.bits[v]
    }

    pub fn in_side(&self, v: Vertex, level: usize) -> bool {
        self.bits[v] >> level & 1 == 1
    }

    /// Coordinate at 0-based `level`, in half-units.
    pub fn coordinate_half_units(&self, v: Vertex, level: usize) -> u64 {
        if self.in_side(v, level) {
            self.ladder.level(level).scale.half_units()
        } else {
            0
        }
    }

    pub fn coordinate(&self, v: Vertex, level: usize) -> f64 {
        self.coordinate_half_units(v, level) as f64 / 2.0
    }

    pub fn vector(&self, v: Vertex) -> Vec<f64> {
        (0..self.dimension()).map(|k| self.coordinate(v, k)).collect()
    }

    pub(crate) fn set_side(&mut self, v: Vertex, level: usize, inside: bool) {
        if inside {
            self.bits[v] |= 1 << level;
        } else {
            self.bits[v] &= !(1 << level);
        }
    }

    /// `‖ρ(u) − ρ(v)‖_p`, reading every coordinate once.
    pub fn lp_distance(&self, u: Vertex, v: Vertex, p: Lp) -> Result<f64> {
        self.check(u)?;
        self.check(v)?;
        let k = self.dimension();
        let diffs = (0..k).map(|level| {
            let a = self.coordinate_half_units(u, level);
            let b = self.coordinate_half_units(v, level);
            a.abs_diff(b) as f64
        });
        let d = p.norm(diffs) / 2.0;
        self.coordinates_read.fetch_add(k as u64, Ordering::Relaxed);
        Ok(d)
    }

    /// Coordinates of vertex pairs read by `lp_distance` so far.
    pub fn coordinates_read(&self) -> u64 {
        self.coordinates_read.load(Ordering::Relaxed)
    }
}
