//! The multi-scale characteristic embedding and its `ℓp` distance queries.

mod io;
mod ladder;
mod vector;

pub use io::{export_embedding, import_embedding};
pub use ladder::{build_scale_ladder, Level, ScaleLadder};
pub use vector::{Lp, MultiScaleEmbedding};

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decomposition::{build_cut, ldrd, Cut, DecompositionParams};
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

/// One independent generator per level, each seeded from the next 64 bits of
/// `master`. Static and dynamic construction draw them the same way, so equal
/// master seeds give equal initial embeddings.
pub fn level_rngs<R: RngCore + ?Sized>(master: &mut R, levels: usize) -> Vec<ChaCha8Rng> {
    (0..levels)
        .map(|_| ChaCha8Rng::seed_from_u64(master.next_u64()))
        .collect()
}

/// `ρ(v)_i = R_i · 1{v ∈ S_i}` for one cut per ladder level.
pub fn characteristic_embedding(cuts: &[Cut], ladder: &ScaleLadder) -> Result<MultiScaleEmbedding> {
    if cuts.len() != ladder.len() {
        return Err(Error::LevelMismatch {
            expected: ladder.len(),
            found: cuts.len(),
        });
    }
    let n = ladder.n();
    let mut bits = vec![0u64; n];
    for (k, (cut, level)) in cuts.iter().zip(ladder.levels()).enumerate() {
        if cut.scale() != level.scale {
            return Err(Error::InvalidParameter(format!(
                "cut {} has scale {}, level expects {}",
                k + 1,
                cut.scale().value(),
                level.scale.value()
            )));
        }
        if cut.membership().len() != n {
            return Err(Error::InvalidParameter(format!(
                "cut {} covers {} vertices, expected {n}",
                k + 1,
                cut.membership().len()
            )));
        }
        for (v, &inside) in cut.membership().iter().enumerate() {
            if inside {
                bits[v] |= 1 << k;
            }
        }
    }
    Ok(MultiScaleEmbedding::from_bits(ladder.clone(), bits))
}

/// A static build together with the cuts it was made from.
#[derive(Debug, Clone)]
pub struct StaticEmbedding {
    pub embedding: MultiScaleEmbedding,
    pub cuts: Vec<Cut>,
}

/// Runs an independent decomposition and cut at every level of the ladder.
pub fn build_static_embedding<R: RngCore + ?Sized>(
    g: &WeightedGraph,
    params: &DecompositionParams,
    rng: &mut R,
) -> Result<StaticEmbedding> {
    let ladder = build_scale_ladder(g, params);
    let mut rngs = level_rngs(rng, ladder.len());
    let cuts = ladder
        .levels()
        .iter()
        .zip(rngs.iter_mut())
        .map(|(level, lrng)| Ok(build_cut(ldrd(g, level.scale, params, lrng)?, lrng)))
        .collect::<Result<Vec<_>>>()?;
    let embedding = characteristic_embedding(&cuts, &ladder)?;
    Ok(StaticEmbedding { embedding, cuts })
}
