use std::fs::File;
use std::io::BufReader;
use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use dynembed::decomposition::{build_cut, ldrd, verify_cut_properties, CutCriteria, DecompositionParams, Scale};
use dynembed::dynamic::{init_dynamic, parse_delta_log, replay_deltas, write_delta_log};
use dynembed::embedding::{build_static_embedding, export_embedding, Lp, MultiScaleEmbedding};
use dynembed::graph::{load_edge_list, EdgeListOptions, WeightedGraph};
use dynembed::harness::{
    default_target, generate_instance, run_dynamic_eval, run_lower_bound_demo, stream_rng, synthetic_graph,
    DemoConfig, ExperimentConfig, Mode, Stream,
};

/// Lipschitz constant in `Pr[cut] ≤ c · (ln² n / R) · w + 3σ`.
const LIPSCHITZ_C: f64 = 0.7;
/// Global constant in `E‖ρ(u) − ρ(v)‖₁ ≤ C · ln³ n · d`.
const EXPANSION_C: f64 = 0.75;
/// Embedded/exact average-distance band for the n = 150, Q = 2000 run.
const BAND: (f64, f64) = (0.7, 35.0);
const SEPARATION_SLACK: f64 = 0.02;
const SIGMAS: f64 = 3.0;
const CUT_TRIALS: usize = 10_000;
const FIXTURE_SCALE: u64 = 64;
const STATIC_SAMPLES: usize = 300;
const SPLIT_FACTOR: f64 = 2.0;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn within(limit_secs: u64, elapsed: Duration, mut o: Outcome) -> Outcome {
    if elapsed > Duration::from_secs(limit_secs) {
        o.pass = false;
        o.detail = format!("{}; exceeded {limit_secs} s", o.detail);
    }
    o
}

fn random_instances() -> Vec<(WeightedGraph, Scale)> {
    (0..100u64)
        .map(|seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = rng.gen_range(2..=100);
            let w = rng.gen_range(1..=32);
            let extra = rng.gen_range(0..=n);
            let init = rng.gen_range(1..=w);
            let g = synthetic_graph(n, extra, w, init, &mut rng).unwrap();
            let top = (2 * g.delta()).ilog2();
            let hi = 1u64 << rng.gen_range(0..=top);
            let scale = Scale::from_half_units(rng.gen_range(hi / 2 + 1..=hi));
            (g, scale)
        })
        .collect()
}

/// Criteria 1 and 2 share one pass over the instances.
fn decomposition_sweep() -> (Outcome, Outcome) {
    let start = Instant::now();
    let params = DecompositionParams::default();
    let results: Vec<(usize, usize, usize)> = random_instances()
        .into_par_iter()
        .enumerate()
        .map(|(i, (g, scale))| {
            let apsp = g.all_pairs();
            let c = ldrd(&g, scale, &params, &mut ChaCha8Rng::seed_from_u64(10_000 + i as u64)).unwrap();
            let mut seen = vec![0usize; g.n()];
            let mut partition_bad = 0;
            for (id, members) in c.clusters().iter().enumerate() {
                for &v in members {
                    seen[v] += 1;
                    if c.cluster_of(v) != id {
                        partition_bad += 1;
                    }
                }
            }
            partition_bad += seen.iter().filter(|&&k| k != 1).count();
            let diameter_bad = (0..c.len()).filter(|&id| !scale.covers(c.weak_diameter(id, &apsp))).count();
            let eps = scale.epsilon(g.n());
            let (mut close, mut split) = (0, 0);
            for u in 0..g.n() {
                for v in u + 1..g.n() {
                    if eps.exceeds(apsp[u][v]) {
                        close += 1;
                        if c.cluster_of(u) != c.cluster_of(v) {
                            split += 1;
                        }
                    }
                }
            }
            (partition_bad + diameter_bad, close, split)
        })
        .collect();
    let elapsed = start.elapsed();
    let violations: usize = results.iter().map(|r| r.0).sum();
    let close: usize = results.iter().map(|r| r.1).sum();
    let split: usize = results.iter().map(|r| r.2).sum();
    let c1 = within(
        60,
        elapsed,
        outcome(
            violations == 0,
            format!("100 instances, {violations} partition/diameter violations, {elapsed:.1?}"),
        ),
    );
    let c2 = outcome(
        split == 0 && close > 0,
        format!("{close} pairs closer than R/(2n), {split} separated"),
    );
    (c1, c2)
}

fn load_fixture() -> WeightedGraph {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/cut20.txt");
    let opts = EdgeListOptions {
        max_weight: Some(32),
        ..Default::default()
    };
    load_edge_list(BufReader::new(File::open(path).unwrap()), &opts).unwrap()
}

/// Criteria 3, 4 and 5 share one batch of cuts on the n = 20 fixture.
fn cut_sweep() -> (Outcome, Outcome, Outcome) {
    let start = Instant::now();
    let g = load_fixture();
    let n = g.n();
    let scale = Scale::integer(FIXTURE_SCALE);
    let params = DecompositionParams::default();
    let slope = LIPSCHITZ_C * (n as f64).ln().powi(2) / FIXTURE_SCALE as f64;
    let criteria = CutCriteria {
        scale,
        epsilon: scale.epsilon(n),
        beta: slope,
        sigmas: SIGMAS,
        separation_slack: SEPARATION_SLACK,
    };
    let pairs: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let report = verify_cut_properties(
        &g,
        || Ok(build_cut(ldrd(&g, scale, &params, &mut rng)?, &mut rng)),
        &pairs,
        CUT_TRIALS,
        &criteria,
    )
    .unwrap();
    let elapsed = start.elapsed();

    let far: Vec<_> = report.pairs.iter().filter(|p| p.separation_ok.is_some()).collect();
    let min_far = far.iter().map(|p| p.cut_frequency).fold(1.0, f64::min);
    let c3 = within(
        30,
        elapsed,
        outcome(
            !far.is_empty() && far.iter().all(|p| p.separation_ok == Some(true)),
            format!("{} pairs with d > {FIXTURE_SCALE}, min frequency {min_far:.4}, {elapsed:.1?}", far.len()),
        ),
    );

    let near: Vec<_> = report.pairs.iter().filter(|p| p.zero_ok.is_some()).collect();
    let cut_near: usize = near.iter().filter(|p| p.cut_frequency > 0.0).count();
    let c4 = outcome(
        !near.is_empty() && cut_near == 0,
        format!("{} pairs with d < ε, {cut_near} ever cut", near.len()),
    );

    let mut worst = 0.0f64;
    let mut bad = 0;
    for e in g.edges() {
        let p = report.pairs.iter().find(|p| (p.u, p.v) == (e.u.min(e.v), e.u.max(e.v))).unwrap();
        let q = (slope * e.weight as f64).clamp(0.0, 1.0);
        let sigma = (q * (1.0 - q) / CUT_TRIALS as f64).sqrt();
        if p.cut_frequency > slope * e.weight as f64 + SIGMAS * sigma {
            bad += 1;
        }
        worst = worst.max(p.cut_frequency / (slope / LIPSCHITZ_C * e.weight as f64));
    }
    let c5 = outcome(
        bad == 0,
        format!("{} edges, {bad} above bound, largest freq/(ln²n·w/R) {worst:.3} vs c = {LIPSCHITZ_C}", g.m()),
    );
    (c3, c4, c5)
}

struct PairMeans {
    d: u64,
    l1: f64,
    linf: f64,
    linf_se: f64,
}

fn static_means(g: &WeightedGraph, seed: u64) -> Vec<PairMeans> {
    let params = DecompositionParams::default();
    let embeddings: Vec<MultiScaleEmbedding> = (0..STATIC_SAMPLES)
        .into_par_iter()
        .map(|s| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(s as u64);
            build_static_embedding(g, &params, &mut rng).unwrap().embedding
        })
        .collect();
    let apsp = g.all_pairs();
    let k = STATIC_SAMPLES as f64;
    let mut out = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let l1 = embeddings.iter().map(|e| e.lp_distance(u, v, Lp::L1).unwrap()).sum::<f64>() / k;
            let xs: Vec<f64> = embeddings
                .iter()
                .map(|e| e.lp_distance(u, v, Lp::Infinity).unwrap())
                .collect();
            let linf = xs.iter().sum::<f64>() / k;
            let var = xs.iter().map(|x| (x - linf).powi(2)).sum::<f64>() / (k - 1.0);
            out.push(PairMeans {
                d: apsp[u][v],
                l1,
                linf,
                linf_se: (var / k).sqrt(),
            });
        }
    }
    out
}

/// Criteria 6 and 7 share one sweep of static builds.
fn static_sweep() -> (Outcome, Outcome) {
    let start = Instant::now();
    let (mut contracted, mut expanded, mut pairs) = (0, 0, 0);
    let (mut max_ratio, mut max_c) = (0.0f64, 0.0f64);
    for n in [32usize, 64] {
        for seed in 0..3u64 {
            let g = synthetic_graph(n, n, 16, 16, &mut ChaCha8Rng::seed_from_u64(600 + seed)).unwrap();
            let l3 = (n as f64).ln().powi(3);
            for m in static_means(&g, 700 + seed) {
                let d = m.d as f64;
                pairs += 1;
                if m.linf < d / 4.0 - SIGMAS * m.linf_se {
                    contracted += 1;
                }
                if m.l1 > EXPANSION_C * l3 * d {
                    expanded += 1;
                }
                max_ratio = max_ratio.max(m.l1 / d);
                max_c = max_c.max(m.l1 / (l3 * d));
            }
        }
    }
    let elapsed = start.elapsed();
    let c6 = within(
        300,
        elapsed,
        outcome(
            contracted == 0,
            format!("{pairs} pairs over 6 graphs, {contracted} with mean ℓ∞ below d/4 − 3σ, {elapsed:.1?}"),
        ),
    );
    let c7 = outcome(
        expanded == 0,
        format!(
            "{expanded} pairs above C·ln³n·d with C = {EXPANSION_C}; largest mean ℓ1/d {max_ratio:.2}, implied C {max_c:.3}"
        ),
    );
    (c6, c7)
}

/// Criteria 8 and 9 share one seeded dynamic run.
fn dynamic_run() -> (Outcome, Outcome) {
    let start = Instant::now();
    let cfg = ExperimentConfig {
        n: 30,
        updates: 200,
        seed: 8,
        ..Default::default()
    };
    let inst = generate_instance(&cfg, &mut stream_rng(cfg.seed, Stream::Instance)).unwrap();
    let mut state = init_dynamic(inst.graph, &cfg.decomposition, &mut stream_rng(cfg.seed, Stream::Algorithm)).unwrap();
    let mut dirty = Vec::new();
    let first = state.audit();
    if !first.is_clean() {
        dirty.push(first.to_string());
    }
    for ev in &inst.updates {
        state.handle_update(ev).unwrap();
        let report = state.audit();
        if !report.is_clean() {
            dirty.push(report.to_string());
        }
    }
    let elapsed = start.elapsed();
    let c8 = within(
        120,
        elapsed,
        outcome(
            dirty.is_empty(),
            match dirty.first() {
                None => format!("{} audits clean, {elapsed:.1?}", inst.updates.len() + 1),
                Some(d) => format!("{} dirty audits, first {d}", dirty.len()),
            },
        ),
    );

    let mut log = Vec::new();
    write_delta_log(state.deltas(), &mut log).unwrap();
    let parsed = parse_delta_log(&log[..]).unwrap();
    let replayed = replay_deltas(&parsed, state.ladder()).unwrap();
    let same = export_embedding(&replayed) == export_embedding(state.view());
    let changes: usize = state.deltas().iter().map(|d| d.len()).sum();
    let c9 = outcome(
        same,
        format!("{changes} coordinate changes over {} deltas, replay identical: {same}", state.deltas().len()),
    );
    (c8, c9)
}

fn split_budget() -> Outcome {
    let mut parts = Vec::new();
    let mut pass = true;
    for n in [40usize, 80] {
        let cfg = ExperimentConfig {
            n,
            updates: 20 * n,
            seed: 10,
            ..Default::default()
        };
        let inst = generate_instance(&cfg, &mut stream_rng(cfg.seed, Stream::Instance)).unwrap();
        let mut state =
            init_dynamic(inst.graph, &cfg.decomposition, &mut stream_rng(cfg.seed, Stream::Algorithm)).unwrap();
        for ev in &inst.updates {
            state.handle_update(ev).unwrap();
        }
        let budget = SPLIT_FACTOR * (n as f64).log2();
        let max = state.max_split_count();
        pass &= f64::from(max) <= budget;
        parts.push(format!("n={n}: max {max} ≤ {budget:.2}"));
    }
    outcome(pass, parts.join(", "))
}

fn ratio_band() -> Outcome {
    let start = Instant::now();
    let cfg = ExperimentConfig {
        mode: Mode::DynamicEval,
        n: 150,
        max_weight: 100,
        updates: 2000,
        seed: 0,
        ..Default::default()
    };
    let run = run_dynamic_eval(&cfg).unwrap();
    let elapsed = start.elapsed();
    let (lo, hi) = (run.series.min_ratio(), run.series.max_ratio());
    let mono = run.series.exact_monotone();
    within(
        600,
        elapsed,
        outcome(
            lo >= BAND.0 && hi <= BAND.1 && mono && BAND.1 / BAND.0 <= 50.0,
            format!(
                "{} steps, ratio in [{lo:.3}, {hi:.3}] vs band [{}, {}], exact average monotone: {mono}, {elapsed:.1?}",
                run.series.rows.len(),
                BAND.0,
                BAND.1
            ),
        ),
    )
}

fn lower_bound() -> Outcome {
    let w = 10_000;
    let cfg = DemoConfig {
        clique: 50,
        low: 1,
        high: w,
        rounds: 4,
        target: default_target(w),
        p: Lp::L2,
    };
    let report = run_lower_bound_demo(&cfg, &DecompositionParams::default(), &mut ChaCha8Rng::seed_from_u64(12)).unwrap();
    let path = Path::new(env!("CARGO_TARGET_TMPDIR")).join("demo.csv");
    std::fs::write(&path, report.to_csv()).unwrap();
    let certified: Vec<usize> = report
        .rounds
        .iter()
        .filter(|r| r.certificate.is_some_and(|c| c.passes()))
        .map(|r| r.moved)
        .collect();
    outcome(
        report.holds() && !certified.is_empty() && path.exists(),
        format!(
            "{} of {} raises certified, moved {:?}, report {}",
            certified.len(),
            report.rounds.len(),
            certified,
            path.display()
        ),
    )
}

fn main() -> ExitCode {
    let (c1, c2) = decomposition_sweep();
    let (c3, c4, c5) = cut_sweep();
    let (c6, c7) = static_sweep();
    let (c8, c9) = dynamic_run();
    let results = [
        ("partition and weak diameter", c1),
        ("contraction", c2),
        ("cut separation", c3),
        ("cut zero probability", c4),
        ("cut Lipschitz", c5),
        ("static contraction", c6),
        ("static expansion", c7),
        ("dynamic audit", c8),
        ("delta replay", c9),
        ("split budget", split_budget()),
        ("average-distance band", ratio_band()),
        ("lower-bound demo", lower_bound()),
    ];
    let mut failed = 0;
    for (i, (name, o)) in results.iter().enumerate() {
        println!("{} criterion {:>2} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, i + 1, o.detail);
        failed += usize::from(!o.pass);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
