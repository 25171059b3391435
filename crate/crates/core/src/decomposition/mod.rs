//! Randomized low-diameter decompositions and the distance-preserving cuts
//! built from them.
//!
//! [`ldrd`] contracts edges of weight `≤ R/(2n)` (by carving in the filtered
//! graph where those edges weigh 0) and then grows balls with geometric radii
//! from uncovered vertices in ascending id order. [`build_cut`] assigns every
//! cluster an independent fair side bit.

mod cut;
mod ldrd;
mod radius;
mod scale;
mod verify;

pub use cut::{build_cut, ClusterRecord, Cut};
pub use ldrd::{carve_balls, ldrd, Clustering, DecompositionParams, RadiusCap};
pub use radius::sample_radius;
pub use scale::Scale;
pub use verify::{verify_cut_properties, CutCriteria, CutReport, PairReport};
