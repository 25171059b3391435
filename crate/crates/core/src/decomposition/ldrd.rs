use rand::Rng;

use super::radius::sample_radius;
use super::Scale;
use crate::error::{Error, Result};
use crate::graph::{FilteredGraph, Threshold, Vertex, WeightedGraph, UNREACHABLE};

/// How the sampled ball radius is truncated at scale `R`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RadiusCap {
    /// `⌊(R − k·⌊ε⌋)/2⌋`, where `k` is the number of edges in a spanning
    /// forest of the contracted (`≤ ε`) edges. Ball distances are measured
    /// with contracted edges at 0, and lifting a ball path back to `G` costs at
    /// most `k·⌊ε⌋`, so every cluster has weak diameter `≤ R` in `G`.
    /// Equals `⌊R/2⌋` when nothing is contracted.
    #[default]
    ContractionAware,
    /// `⌊R/2⌋` regardless of contraction.
    HalfScale,
    /// `⌊R⌋`, the literal ball-growing truncation. Allows weak diameter up to `2R`.
    FullScale,
}

impl RadiusCap {
    pub fn value(&self, scale: Scale, n: usize, forest_edges: usize) -> u64 {
        let h = scale.half_units();
        match self {
            RadiusCap::ContractionAware => {
                let slack = 2 * forest_edges as u64 * scale.epsilon(n).floor();
                h.saturating_sub(slack) / 4
            }
            RadiusCap::HalfScale => h / 4,
            RadiusCap::FullScale => h / 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecompositionParams {
    /// `β = c0 · ln(n) / R`.
    pub c0: f64,
    pub radius_cap: RadiusCap,
}

impl Default for DecompositionParams {
    fn default() -> Self {
        DecompositionParams {
            c0: 2.0,
            radius_cap: RadiusCap::ContractionAware,
        }
    }
}

impl DecompositionParams {
    pub fn beta(&self, n: usize, scale: Scale) -> f64 {
        self.c0 * (n.max(2) as f64).ln() / scale.value()
    }
}

/// A partition of the vertex set into clusters, each with a recorded center.
#[derive(Debug, Clone, PartialEq)]
pub struct Clustering {
    scale: Scale,
    beta: f64,
    epsilon: Threshold,
    radius_cap: u64,
    clusters: Vec<Vec<Vertex>>,
    centers: Vec<Vertex>,
    cluster_of: Vec<usize>,
}

impl Clustering {
    /// Assembles a clustering from `(center, members)` pairs covering `0..n`.
    pub fn from_balls(
        n: usize,
        scale: Scale,
        beta: f64,
        epsilon: Threshold,
        radius_cap: u64,
        balls: Vec<(Vertex, Vec<Vertex>)>,
    ) -> Result<Self> {
        let mut cluster_of = vec![usize::MAX; n];
        let mut clusters = Vec::with_capacity(balls.len());
        let mut centers = Vec::with_capacity(balls.len());
        for (id, (center, mut members)) in balls.into_iter().enumerate() {
            members.sort_unstable();
            if members.binary_search(&center).is_err() {
                return Err(Error::Malformed(format!(
                    "cluster {id}: center {center} is not a member"
                )));
            }
            for &v in &members {
                if v >= n {
                    return Err(Error::InvalidVertex { v, n });
                }
                if cluster_of[v] != usize::MAX {
                    return Err(Error::Malformed(format!("vertex {v} in two clusters")));
                }
                cluster_of[v] = id;
            }
            clusters.push(members);
            centers.push(center);
        }
        if let Some(v) = cluster_of.iter().position(|&c| c == usize::MAX) {
            return Err(Error::Malformed(format!("vertex {v} not covered")));
        }
        Ok(Clustering {
            scale,
            beta,
            epsilon,
            radius_cap,
            clusters,
            centers,
            cluster_of,
        })
    }

    pub fn scale(&self) -> Scale {
        self.scale
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn epsilon(&self) -> Threshold {
        self.epsilon
    }

    /// The truncation applied to sampled radii.
    pub fn radius_cap(&self) -> u64 {
        self.radius_cap
    }

    pub fn n(&self) -> usize {
        self.cluster_of.len()
    }

    pub fn len(&self) -> usize {
        self.clusters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clusters.is_empty()
    }

    pub fn clusters(&self) -> &[Vec<Vertex>] {
        &self.clusters
    }

    pub fn members(&self, c: usize) -> &[Vertex] {
        &self.clusters[c]
    }

    pub fn center(&self, c: usize) -> Vertex {
        self.centers[c]
    }

    pub fn centers(&self) -> &[Vertex] {
        &self.centers
    }

    /// `C(v)`.
    pub fn cluster_of(&self, v: Vertex) -> usize {
        self.cluster_of[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.cluster_of
    }

    /// Largest `d_G` between two members of cluster `c`, from an all-pairs matrix.
    pub fn weak_diameter(&self, c: usize, apsp: &[Vec<u64>]) -> u64 {
        let m = &self.clusters[c];
        m.iter()
            .flat_map(|&a| m.iter().map(move |&b| apsp[a][b]))
            .max()
            .unwrap_or(0)
    }
}

fn draw_radius<R: Rng + ?Sized>(beta: f64, cap: u64, rng: &mut R) -> u64 {
    if beta >= 1.0 {
        1.min(cap)
    } else {
        sample_radius(beta, Some(cap), rng).expect("rate checked to be in (0, 1)")
    }
}

/// Ball carving over `candidates` (ascending id order): each uncovered
/// candidate becomes a center, samples a radius, and claims every uncovered
/// candidate within that radius in `fg`. Distances run through the whole
/// graph, not only through candidates.
pub fn carve_balls<R: Rng + ?Sized>(
    fg: &FilteredGraph<'_>,
    candidates: &[Vertex],
    beta: f64,
    cap: u64,
    rng: &mut R,
) -> Vec<(Vertex, Vec<Vertex>)> {
    let n = fg.base().n();
    let mut sorted = candidates.to_vec();
    sorted.sort_unstable();
    let mut open = vec![false; n];
    for &v in &sorted {
        open[v] = true;
    }
    let mut balls = Vec::new();
    for &center in &sorted {
        if !open[center] {
            continue;
        }
        let r = draw_radius(beta, cap, rng);
        let dist = fg.distances_from(center, r);
        let members: Vec<Vertex> = sorted
            .iter()
            .copied()
            .filter(|&v| open[v] && dist[v] != UNREACHABLE)
            .collect();
        for &v in &members {
            open[v] = false;
        }
        balls.push((center, members));
    }
    balls
}

/// Low-diameter randomized decomposition at scale `R`, `1/2 ≤ R ≤ Δ`.
pub fn ldrd<R: Rng + ?Sized>(
    g: &WeightedGraph,
    scale: Scale,
    params: &DecompositionParams,
    rng: &mut R,
) -> Result<Clustering> {
    if scale.half_units() == 0 || scale.half_units() > 2 * g.delta() {
        return Err(Error::InvalidParameter(format!(
            "scale {} outside [1/2, {}]",
            scale.value(),
            g.delta()
        )));
    }
    let n = g.n();
    let epsilon = scale.epsilon(n);
    let fg = g.filtered(epsilon);
    let forest = fg.zero_classes().forest_edges();
    let cap = params.radius_cap.value(scale, n, forest);
    let beta = params.beta(n, scale);
    let all: Vec<Vertex> = (0..n).collect();
    let balls = carve_balls(&fg, &all, beta, cap, rng);
    Clustering::from_balls(n, scale, beta, epsilon, cap, balls)
}
