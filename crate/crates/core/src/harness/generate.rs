use std::collections::HashSet;
use std::fs::File;
use std::io::BufReader;

use rand::seq::SliceRandom;
use rand::Rng;

use super::{ExperimentConfig, GraphSource};
use crate::error::{Error, Result};
use crate::graph::{load_edge_list, EdgeListOptions, UpdateEvent, Vertex, WeightedGraph};

/// A graph and the update stream fixed before the run starts.
#[derive(Debug, Clone)]
pub struct Instance {
    pub graph: WeightedGraph,
    pub updates: Vec<UpdateEvent>,
}

/// Random recursive spanning tree on a shuffled vertex order, plus `extra`
/// distinct non-tree edges chosen uniformly. Weights are uniform on
/// `[1, initial_max]`.
pub fn synthetic_graph<R: Rng + ?Sized>(
    n: usize,
    extra: usize,
    max_weight: u64,
    initial_max: u64,
    rng: &mut R,
) -> Result<WeightedGraph> {
    if initial_max == 0 || initial_max > max_weight {
        return Err(Error::InvalidParameter(format!(
            "initial weights [1, {initial_max}] not within [1, {max_weight}]"
        )));
    }
    let mut g = WeightedGraph::new(n, max_weight)?;
    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        g.insert_edge(parent, order[i], rng.gen_range(1..=initial_max))?;
    }
    let free = (n * n.saturating_sub(1) / 2).saturating_sub(n.saturating_sub(1));
    let extra = extra.min(free);
    let mut added = 0;
    while added < extra {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && g.edge_id(u, v).is_none() {
            g.insert_edge(u, v, rng.gen_range(1..=initial_max))?;
            added += 1;
        }
    }
    Ok(g)
}

/// Grows a random connected vertex set of size `k` from a random start by
/// repeatedly adding a uniformly chosen frontier vertex, and returns its
/// induced subgraph with vertices renumbered in order of selection.
pub fn connected_subgraph<R: Rng + ?Sized>(g: &WeightedGraph, k: usize, rng: &mut R) -> Result<WeightedGraph> {
    if k > g.n() {
        return Err(Error::InvalidParameter(format!("cannot sample {k} of {} vertices", g.n())));
    }
    let mut new_id = vec![usize::MAX; g.n()];
    let mut chosen = Vec::with_capacity(k);
    let mut frontier: Vec<Vertex> = Vec::new();
    let mut seen = HashSet::new();
    if k > 0 {
        let s = rng.gen_range(0..g.n());
        frontier.push(s);
        seen.insert(s);
    }
    while chosen.len() < k {
        if frontier.is_empty() {
            return Err(Error::Disconnected {
                components: g.components(),
            });
        }
        let x = frontier.swap_remove(rng.gen_range(0..frontier.len()));
        new_id[x] = chosen.len();
        chosen.push(x);
        for &(y, _) in g.neighbors(x) {
            if seen.insert(y) {
                frontier.push(y);
            }
        }
    }
    let mut sub = WeightedGraph::new(k, g.max_weight())?;
    for e in g.edges() {
        let (a, b) = (new_id[e.u], new_id[e.v]);
        if a != usize::MAX && b != usize::MAX {
            sub.insert_edge(a, b, e.weight)?;
        }
    }
    sub.check_connected()?;
    Ok(sub)
}

/// `q` increases: each picks an edge uniformly among those below `W`, and at
/// step `t` (1-based) raises it by a uniform draw from `[1, 1 + ⌊k·t/q⌋]`,
/// capped at `W`.
pub fn increase_stream<R: Rng + ?Sized>(
    g: &WeightedGraph,
    q: usize,
    k: u64,
    rng: &mut R,
) -> Result<Vec<UpdateEvent>> {
    let w_max = g.max_weight();
    let mut weights: Vec<u64> = g.edges().iter().map(|e| e.weight).collect();
    let mut open = weights.iter().filter(|&&w| w < w_max).count();
    let mut out = Vec::with_capacity(q);
    for t in 1..=q {
        if open == 0 {
            return Err(Error::Infeasible(format!(
                "every edge reached W = {w_max} after {} of {q} updates",
                t - 1
            )));
        }
        let id = loop {
            let id = rng.gen_range(0..weights.len());
            if weights[id] < w_max {
                break id;
            }
        };
        let hi = 1 + (k as u128 * t as u128 / q as u128) as u64;
        let w = (weights[id] + rng.gen_range(1..=hi)).min(w_max);
        weights[id] = w;
        if w == w_max {
            open -= 1;
        }
        let e = g.edge(id);
        out.push(UpdateEvent::new(e.u, e.v, w));
    }
    Ok(out)
}

/// Builds the graph and update stream for `cfg` from the instance generator.
pub fn generate_instance<R: Rng + ?Sized>(cfg: &ExperimentConfig, rng: &mut R) -> Result<Instance> {
    cfg.validate()?;
    let graph = match &cfg.graph {
        GraphSource::Synthetic => synthetic_graph(
            cfg.n,
            cfg.resolved_extra_edges(),
            cfg.max_weight,
            cfg.resolved_initial_max(),
            rng,
        )?,
        GraphSource::File { path, one_indexed } => {
            let file = File::open(path)
                .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            let opts = EdgeListOptions {
                one_indexed: *one_indexed,
                max_weight: Some(cfg.max_weight),
                vertex_count: None,
            };
            let full = load_edge_list(BufReader::new(file), &opts)?;
            if cfg.n < full.n() {
                connected_subgraph(&full, cfg.n, rng)?
            } else {
                full
            }
        }
    };
    let updates = increase_stream(&graph, cfg.updates, cfg.resolved_increment_k(), rng)?;
    Ok(Instance { graph, updates })
}
