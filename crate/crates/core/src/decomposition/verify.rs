//! Monte Carlo check of the three distance-preserving-cut properties.

use super::{Cut, Scale};
use crate::error::Result;
use crate::graph::{Threshold, Vertex, WeightedGraph};

/// What a cut at scale `R` is checked against.
#[derive(Debug, Clone, Copy)]
pub struct CutCriteria {
    pub scale: Scale,
    pub epsilon: Threshold,
    /// Slope of the Lipschitz bound `Pr[cut] ≤ beta · d`.
    pub beta: f64,
    /// Number of binomial standard deviations allowed above the Lipschitz bound.
    pub sigmas: f64,
    /// Absolute slack below `1/2` for far pairs.
    pub separation_slack: f64,
}

impl CutCriteria {
    pub fn new(scale: Scale, n: usize, beta: f64) -> Self {
        CutCriteria {
            scale,
            epsilon: scale.epsilon(n),
            beta,
            sigmas: 3.0,
            separation_slack: 0.02,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PairReport {
    pub u: Vertex,
    pub v: Vertex,
    pub distance: u64,
    pub cut_frequency: f64,
    pub lipschitz_bound: f64,
    pub lipschitz_ok: bool,
    /// `Some` only for pairs closer than `epsilon`.
    pub zero_ok: Option<bool>,
    /// `Some` only for pairs farther than `R`.
    pub separation_ok: Option<bool>,
}

impl PairReport {
    pub fn ok(&self) -> bool {
        self.lipschitz_ok && self.zero_ok.unwrap_or(true) && self.separation_ok.unwrap_or(true)
    }
}

#[derive(Debug, Clone)]
pub struct CutReport {
    pub trials: usize,
    pub pairs: Vec<PairReport>,
}

impl CutReport {
    pub fn all_ok(&self) -> bool {
        self.pairs.iter().all(PairReport::ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PairReport> {
        self.pairs.iter().filter(|p| !p.ok())
    }
}

/// Draws `trials` fresh cuts from `sample` and tallies how often each pair is
/// separated.
pub fn verify_cut_properties<F>(
    g: &WeightedGraph,
    mut sample: F,
    pairs: &[(Vertex, Vertex)],
    trials: usize,
    criteria: &CutCriteria,
) -> Result<CutReport>
where
    F: FnMut() -> Result<Cut>,
{
    for &(u, v) in pairs {
        g.check_vertex(u)?;
        g.check_vertex(v)?;
    }
    let trials = trials.max(1);
    let mut counts = vec![0usize; pairs.len()];
    for _ in 0..trials {
        let cut = sample()?;
        for (k, &(u, v)) in pairs.iter().enumerate() {
            if cut.separates(u, v) {
                counts[k] += 1;
            }
        }
    }
    let mut reports = Vec::with_capacity(pairs.len());
    for (k, &(u, v)) in pairs.iter().enumerate() {
        let distance = g.distances_from(u)[v];
        let freq = counts[k] as f64 / trials as f64;
        let bound = criteria.beta * distance as f64;
        let q = bound.clamp(0.0, 1.0);
        let sigma = (q * (1.0 - q) / trials as f64).sqrt();
        reports.push(PairReport {
            u,
            v,
            distance,
            cut_frequency: freq,
            lipschitz_bound: bound,
            lipschitz_ok: freq <= bound + criteria.sigmas * sigma,
            zero_ok: criteria.epsilon.exceeds(distance).then_some(counts[k] == 0),
            separation_ok: (!criteria.scale.covers(distance))
                .then_some(freq >= 0.5 - criteria.separation_slack),
        });
    }
    Ok(CutReport {
        trials,
        pairs: reports,
    })
}
