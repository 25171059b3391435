use std::io::{Read, Write};
use std::path::Path;

use rand::seq::index::sample;
use rand::{Rng, RngCore};
use rayon::prelude::*;

use crate::decomposition::DecompositionParams;
use crate::dynamic::{init_dynamic, DynamicEmbedding};
use crate::embedding::{build_static_embedding, Lp, MultiScaleEmbedding};
use crate::error::{Error, Result};
use crate::graph::{UpdateEvent, Vertex, WeightedGraph};

/// Running sums for a sample mean and its standard error.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Moments {
    count: u64,
    sum: f64,
    sum_sq: f64,
}

impl Moments {
    pub fn push(&mut self, x: f64) {
        self.count += 1;
        self.sum += x;
        self.sum_sq += x * x;
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn mean(&self) -> f64 {
        if self.count == 0 {
            0.0
        } else {
            self.sum / self.count as f64
        }
    }

    /// Standard error of the mean, from the unbiased sample variance.
    pub fn std_err(&self) -> f64 {
        if self.count < 2 {
            return 0.0;
        }
        let n = self.count as f64;
        let var = ((self.sum_sq - self.sum * self.sum / n) / (n - 1.0)).max(0.0);
        (var / n).sqrt()
    }
}

/// Embedded-distance samples of one pair over independent static builds.
#[derive(Debug, Clone, PartialEq)]
pub struct PairStatistics {
    pub u: Vertex,
    pub v: Vertex,
    pub distance: u64,
    pub l1: Moments,
    pub linf: Moments,
    pub lp: Moments,
}

impl PairStatistics {
    pub fn lp_ratio(&self) -> f64 {
        self.lp.mean() / self.distance as f64
    }
}

/// Every unordered pair `u < v`.
pub fn all_pairs(n: usize) -> Vec<(Vertex, Vertex)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// `k` distinct unordered pairs chosen uniformly, sorted.
pub fn sample_pairs<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Vec<(Vertex, Vertex)> {
    let total = n * n.saturating_sub(1) / 2;
    if k >= total {
        return all_pairs(n);
    }
    let mut idx = sample(rng, total, k).into_vec();
    idx.sort_unstable();
    // pair index i enumerates (0,1), (0,2), ..., (1,2), ...
    let mut out = Vec::with_capacity(k);
    let (mut u, mut start) = (0usize, 0usize);
    for i in idx {
        while i >= start + (n - 1 - u) {
            start += n - 1 - u;
            u += 1;
        }
        out.push((u, u + 1 + (i - start)));
    }
    out
}

/// Draws `samples` independent static embeddings and records each pair's
/// `ℓ1`, `ℓ∞` and `ℓp` distances.
pub fn static_pair_statistics<R: RngCore + ?Sized>(
    g: &WeightedGraph,
    pairs: &[(Vertex, Vertex)],
    samples: usize,
    params: &DecompositionParams,
    p: Lp,
    rng: &mut R,
) -> Result<Vec<PairStatistics>> {
    for &(u, v) in pairs {
        g.check_vertex(u)?;
        g.check_vertex(v)?;
    }
    let apsp = g.all_pairs();
    let mut stats: Vec<PairStatistics> = pairs
        .iter()
        .map(|&(u, v)| PairStatistics {
            u,
            v,
            distance: apsp[u][v],
            l1: Moments::default(),
            linf: Moments::default(),
            lp: Moments::default(),
        })
        .collect();
    for _ in 0..samples {
        let e = build_static_embedding(g, params, rng)?.embedding;
        for s in &mut stats {
            s.l1.push(e.lp_distance(s.u, s.v, Lp::L1)?);
            s.linf.push(e.lp_distance(s.u, s.v, Lp::Infinity)?);
            s.lp.push(e.lp_distance(s.u, s.v, p)?);
        }
    }
    Ok(stats)
}

pub fn write_static_csv<W: Write>(stats: &[PairStatistics], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["u", "v", "d", "mean_l1", "mean_linf", "mean_lp", "se_lp", "ratio_lp"])
        .map_err(csv_err)?;
    for s in stats {
        w.write_record([
            s.u.to_string(),
            s.v.to_string(),
            s.distance.to_string(),
            format!("{:.6}", s.l1.mean()),
            format!("{:.6}", s.linf.mean()),
            format!("{:.6}", s.lp.mean()),
            format!("{:.6}", s.lp.std_err()),
            format!("{:.6}", s.lp_ratio()),
        ])
        .map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioRow {
    pub t: u64,
    pub exact_avg: f64,
    pub embed_avg: f64,
    pub ratio: f64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct RatioSeries {
    pub rows: Vec<RatioRow>,
}

impl RatioSeries {
    pub fn min_ratio(&self) -> f64 {
        self.rows.iter().map(|r| r.ratio).fold(f64::INFINITY, f64::min)
    }

    pub fn max_ratio(&self) -> f64 {
        self.rows.iter().map(|r| r.ratio).fold(f64::NEG_INFINITY, f64::max)
    }

    /// Exact averages never decrease.
    pub fn exact_monotone(&self) -> bool {
        self.rows.windows(2).all(|w| w[1].exact_avg >= w[0].exact_avg)
    }
}

/// Average exact distance over `pairs`, one Dijkstra per distinct source.
pub fn exact_average(g: &WeightedGraph, pairs: &[(Vertex, Vertex)]) -> f64 {
    let mut sources: Vec<Vertex> = pairs.iter().map(|p| p.0).collect();
    sources.sort_unstable();
    sources.dedup();
    let dist: Vec<Vec<u64>> = sources.par_iter().map(|&s| g.distances_from(s)).collect();
    let mut total = 0u128;
    for &(u, v) in pairs {
        let k = sources.binary_search(&u).expect("source collected above");
        total += dist[k][v] as u128;
    }
    total as f64 / pairs.len() as f64
}

pub fn embedded_average(e: &MultiScaleEmbedding, pairs: &[(Vertex, Vertex)], p: Lp) -> Result<f64> {
    let mut total = 0.0;
    for &(u, v) in pairs {
        total += e.lp_distance(u, v, p)?;
    }
    Ok(total / pairs.len() as f64)
}

/// Output of a dynamic run: the ratio series and the final state.
#[derive(Debug, Clone)]
pub struct DynamicRun {
    pub series: RatioSeries,
    pub state: DynamicEmbedding,
}

/// Plays `updates` on a fresh dynamic embedding and records one row before
/// the first update and one after each.
pub fn ratio_series<R: RngCore + ?Sized>(
    g: WeightedGraph,
    updates: &[UpdateEvent],
    pairs: &[(Vertex, Vertex)],
    params: &DecompositionParams,
    p: Lp,
    normalize_4: bool,
    rng: &mut R,
) -> Result<DynamicRun> {
    if pairs.is_empty() {
        return Err(Error::InvalidParameter("no vertex pairs to average over".into()));
    }
    let scale = if normalize_4 { 4.0 } else { 1.0 };
    let mut state = init_dynamic(g, params, rng)?;
    let mut rows = Vec::with_capacity(updates.len() + 1);
    let row = |state: &DynamicEmbedding| -> Result<RatioRow> {
        let exact_avg = exact_average(state.graph(), pairs);
        let embed_avg = scale * embedded_average(state.view(), pairs, p)?;
        Ok(RatioRow {
            t: state.t(),
            exact_avg,
            embed_avg,
            ratio: embed_avg / exact_avg,
        })
    };
    rows.push(row(&state)?);
    for ev in updates {
        state.handle_update(ev)?;
        rows.push(row(&state)?);
    }
    Ok(DynamicRun {
        series: RatioSeries { rows },
        state,
    })
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}

/// Header `t,exact_avg,embed_avg,ratio`, values with six decimals.
pub fn write_ratio_csv<W: Write>(series: &RatioSeries, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["t", "exact_avg", "embed_avg", "ratio"]).map_err(csv_err)?;
    for r in &series.rows {
        w.write_record([
            r.t.to_string(),
            format!("{:.6}", r.exact_avg),
            format!("{:.6}", r.embed_avg),
            format!("{:.6}", r.ratio),
        ])
        .map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

pub fn emit_csv(series: &RatioSeries, path: &Path) -> Result<()> {
    let file = std::fs::File::create(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    write_ratio_csv(series, std::io::BufWriter::new(file))
}

pub fn parse_ratio_csv<R: Read>(input: R) -> Result<RatioSeries> {
    let mut r = csv::Reader::from_reader(input);
    let header = r.headers().map_err(csv_err)?;
    if header != vec!["t", "exact_avg", "embed_avg", "ratio"] {
        return Err(Error::Malformed(format!("unexpected header {header:?}")));
    }
    let mut rows = Vec::new();
    for rec in r.records() {
        let rec = rec.map_err(csv_err)?;
        let f = |i: usize| -> Result<f64> {
            rec[i]
                .parse::<f64>()
                .map_err(|_| Error::Malformed(format!("bad value {:?}", &rec[i])))
        };
        rows.push(RatioRow {
            t: rec[0]
                .parse()
                .map_err(|_| Error::Malformed(format!("bad step {:?}", &rec[0])))?,
            exact_avg: f(1)?,
            embed_avg: f(2)?,
            ratio: f(3)?,
        });
    }
    Ok(RatioSeries { rows })
}
