//! Experiment drivers: instance generation, static and dynamic distortion
//! runs, the lower-bound demonstration, audit sweeps and CSV output.
//!
//! Every run derives separate generator streams from one seed for the
//! instance, the algorithm and pair sampling. The update stream is fixed
//! before the algorithm draws anything.

mod config;
mod demo;
mod eval;
mod generate;
mod runner;

pub use config::{default_target, ExperimentConfig, GraphSource, Mode};
pub use demo::{certify, run_lower_bound_demo, two_cliques, Certificate, DemoConfig, DemoReport, DemoRound, RoundKind};
pub use eval::{
    all_pairs, embedded_average, emit_csv, exact_average, parse_ratio_csv, ratio_series, sample_pairs,
    static_pair_statistics, write_ratio_csv, write_static_csv, DynamicRun, Moments, PairStatistics, RatioRow,
    RatioSeries,
};
pub use generate::{connected_subgraph, generate_instance, increase_stream, synthetic_graph, Instance};
pub use runner::{run_experiment, stream_rng, RunOutcome, Stream};

use crate::error::{Error, Result};

/// Largest instance `dynamic-eval` accepts; each step runs `n` exact
/// single-source sweeps.
pub const MAX_DYNAMIC_N: usize = 600;

/// Generates the instance for `cfg` and plays it through the dynamic
/// structure, as `dynamic-eval` does, without writing files.
pub fn run_dynamic_eval(cfg: &ExperimentConfig) -> Result<DynamicRun> {
    let inst = generate_instance(cfg, &mut stream_rng(cfg.seed, Stream::Instance))?;
    if inst.graph.n() > MAX_DYNAMIC_N {
        return Err(Error::InvalidParameter(format!(
            "dynamic-eval takes at most {MAX_DYNAMIC_N} vertices, instance has {}",
            inst.graph.n()
        )));
    }
    let pairs = match cfg.pairs_sample {
        Some(k) => sample_pairs(inst.graph.n(), k, &mut stream_rng(cfg.seed, Stream::Pairs)),
        None => all_pairs(inst.graph.n()),
    };
    ratio_series(
        inst.graph,
        &inst.updates,
        &pairs,
        &cfg.decomposition,
        cfg.p,
        cfg.normalize_4,
        &mut stream_rng(cfg.seed, Stream::Algorithm),
    )
}

/// Per-pair statistics over `cfg.samples` static builds, as `static-eval` does.
pub fn run_static_eval(cfg: &ExperimentConfig) -> Result<Vec<PairStatistics>> {
    let inst = generate_instance(cfg, &mut stream_rng(cfg.seed, Stream::Instance))?;
    let pairs = match cfg.pairs_sample {
        Some(k) => sample_pairs(inst.graph.n(), k, &mut stream_rng(cfg.seed, Stream::Pairs)),
        None => all_pairs(inst.graph.n()),
    };
    static_pair_statistics(
        &inst.graph,
        &pairs,
        cfg.samples,
        &cfg.decomposition,
        cfg.p,
        &mut stream_rng(cfg.seed, Stream::Algorithm),
    )
}
