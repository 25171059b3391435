//! Decremental embedding of weighted graphs into `ℓp` space.
//!
//! The embedding stacks one random cut per distance scale `R_i = 2^(i-2)`,
//! `i = 1..=log2(Δ)+1`, and sets coordinate `i` of a vertex to `R_i` when the
//! vertex lies on side `S_i` of cut `i`. Each cut comes from a randomized
//! low-diameter decomposition whose clusters get independent fair side bits.
//! Under edge-weight increases, clusters are only ever split, and only split
//! pieces draw new bits, so every update reports the coordinates that changed.
//!
//! Modules, bottom up:
//! - [`graph`]: weighted graphs, exact shortest paths, contraction, the filtered graph.
//! - [`decomposition`]: ball-carving decompositions and distance-preserving cuts.
//! - [`embedding`]: scale ladder, characteristic embedding, `ℓp` queries, export.
//! - [`dynamic`]: per-scale cluster maintenance under weight increases.
//! - [`harness`]: experiment drivers behind the `dynembed` binary.

pub mod decomposition;
pub mod dynamic;
pub mod embedding;
pub mod error;
pub mod graph;
pub mod harness;

#[cfg(test)]
mod testutil;

pub use error::{Error, Result};
