//! Decremental maintenance of the embedding under edge-weight increases.
//!
//! Each ladder level keeps a [`ScaleMaintainer`]. An update is applied to the
//! graph once, then every level processes it independently against that
//! snapshot. The resulting side flips become one [`EmbeddingDelta`].

mod audit;
mod delta;
mod maintainer;
mod tree;

pub use audit::{audit_state, AuditReport, Violation, ViolationKind};
pub use delta::{parse_delta_log, replay_deltas, write_delta_log, CoordinateChange, EmbeddingDelta};
pub use maintainer::{ClusterState, ScaleMaintainer, SideFlip};
pub use tree::DepthBoundedTree;

use rand::RngCore;
use rayon::prelude::*;

use crate::decomposition::DecompositionParams;
use crate::embedding::{build_scale_ladder, level_rngs, Lp, MultiScaleEmbedding, ScaleLadder};
use crate::error::Result;
use crate::graph::{UpdateEvent, Vertex, WeightedGraph};

#[derive(Debug, Clone)]
pub struct DynamicEmbedding {
    graph: WeightedGraph,
    ladder: ScaleLadder,
    maintainers: Vec<ScaleMaintainer>,
    view: MultiScaleEmbedding,
    deltas: Vec<EmbeddingDelta>,
    t: u64,
}

/// Builds every level from `rng` exactly as the static build does.
pub fn init_dynamic<R: RngCore + ?Sized>(
    g: WeightedGraph,
    params: &DecompositionParams,
    rng: &mut R,
) -> Result<DynamicEmbedding> {
    g.check_connected()?;
    let ladder = build_scale_ladder(&g, params);
    let rngs = level_rngs(rng, ladder.len());
    let maintainers = ladder
        .levels()
        .iter()
        .zip(rngs)
        .map(|(level, r)| ScaleMaintainer::init(&g, level, params, r))
        .collect::<Result<Vec<_>>>()?;
    let mut view = MultiScaleEmbedding::zeros(ladder.clone());
    let mut changes = Vec::new();
    for v in 0..g.n() {
        for (k, m) in maintainers.iter().enumerate() {
            if m.side_of(v) {
                view.set_side(v, k, true);
                changes.push(CoordinateChange {
                    vertex: v,
                    level: k + 1,
                    old: 0,
                    new: ladder.level(k).scale.half_units(),
                });
            }
        }
    }
    Ok(DynamicEmbedding {
        graph: g,
        ladder,
        maintainers,
        view,
        deltas: vec![EmbeddingDelta { t: 0, changes }],
        t: 0,
    })
}

impl DynamicEmbedding {
    pub fn graph(&self) -> &WeightedGraph {
        &self.graph
    }

    pub fn ladder(&self) -> &ScaleLadder {
        &self.ladder
    }

    pub fn view(&self) -> &MultiScaleEmbedding {
        &self.view
    }

    pub fn maintainers(&self) -> &[ScaleMaintainer] {
        &self.maintainers
    }

    /// Number of updates processed.
    pub fn t(&self) -> u64 {
        self.t
    }

    /// Delta log from `t = 0`.
    pub fn deltas(&self) -> &[EmbeddingDelta] {
        &self.deltas
    }

    /// Applies `ev` and returns the coordinates it changed.
    pub fn handle_update(&mut self, ev: &UpdateEvent) -> Result<&EmbeddingDelta> {
        let applied = self.graph.apply_weight_increase(ev)?;
        self.t += 1;
        let g = &self.graph;
        let flips: Vec<Vec<SideFlip>> = self
            .maintainers
            .par_iter_mut()
            .map(|m| m.handle_increase(g, &applied))
            .collect();
        let mut changes = Vec::new();
        for (k, level_flips) in flips.into_iter().enumerate() {
            let r = self.ladder.level(k).scale.half_units();
            for f in level_flips {
                let (old, new) = if f.inside { (0, r) } else { (r, 0) };
                debug_assert_eq!(self.view.in_side(f.vertex, k), !f.inside);
                self.view.set_side(f.vertex, k, f.inside);
                changes.push(CoordinateChange {
                    vertex: f.vertex,
                    level: k + 1,
                    old,
                    new,
                });
            }
        }
        changes.sort_unstable_by_key(|c| (c.vertex, c.level));
        self.deltas.push(EmbeddingDelta { t: self.t, changes });
        Ok(self.deltas.last().expect("just pushed"))
    }

    /// `‖ρ(u) − ρ(v)‖_p` on the current view.
    pub fn query(&self, u: Vertex, v: Vertex, p: Lp) -> Result<f64> {
        self.view.lp_distance(u, v, p)
    }

    /// Largest per-vertex split count over all levels.
    pub fn max_split_count(&self) -> u32 {
        self.maintainers
            .iter()
            .map(ScaleMaintainer::max_split_count)
            .max()
            .unwrap_or(0)
    }

    pub fn audit(&self) -> AuditReport {
        audit_state(self)
    }

    /// The view rebuilt from the maintainers' cluster bits alone.
    pub fn reconstruct_view(&self) -> Result<MultiScaleEmbedding> {
        let cuts = self
            .maintainers
            .iter()
            .map(ScaleMaintainer::to_cut)
            .collect::<Result<Vec<_>>>()?;
        crate::embedding::characteristic_embedding(&cuts, &self.ladder)
    }

    #[cfg(test)]
    pub(crate) fn maintainer_mut_for_test(&mut self, k: usize) -> &mut ScaleMaintainer {
        &mut self.maintainers[k]
    }
}
