//! Two unit-weight cliques `H`, `H′` on `k` vertices each, joined by a bridge
//! `(0, k)` whose weight toggles between `low` and `high`.
//!
//! Before a raise every cross pair is within 3; after it, every cross pair is
//! at least `high` apart. If the pre-raise embedding expands no cross pair by
//! more than `T` and the post-raise embedding contracts none by more than `T`,
//! with `3T² < high`, then any cross pair whose two endpoints both kept their
//! vectors would satisfy `high/T ≤ ‖ρ(u) − ρ(v)‖ ≤ 3T`, which is impossible.
//! So the unmoved vertices lie inside one clique and at least `k` vertices
//! moved. Lowering the bridge is not a decremental update; each round rebuilds
//! from scratch at weight `low`.

use std::fmt::Write as _;

use rand::RngCore;

use crate::decomposition::DecompositionParams;
use crate::dynamic::init_dynamic;
use crate::embedding::{Lp, MultiScaleEmbedding};
use crate::error::{Error, Result};
use crate::graph::{UpdateEvent, WeightedGraph};

#[derive(Debug, Clone, PartialEq)]
pub struct DemoConfig {
    pub clique: usize,
    pub low: u64,
    pub high: u64,
    pub rounds: usize,
    pub target: f64,
    pub p: Lp,
}

/// Worst cross-pair expansion before and contraction after a raise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Certificate {
    pub max_expansion: f64,
    pub max_contraction: f64,
    pub target: f64,
}

impl Certificate {
    pub fn passes(&self) -> bool {
        self.max_expansion <= self.target && self.max_contraction <= self.target
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RoundKind {
    /// Bridge raised through the dynamic structure.
    Increase,
    /// Bridge weight equal on both ends; nothing to apply.
    Unchanged,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DemoRound {
    pub round: usize,
    pub kind: RoundKind,
    pub bridge_before: u64,
    pub bridge_after: u64,
    pub moved: usize,
    pub certificate: Option<Certificate>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DemoReport {
    pub config: DemoConfig,
    pub rounds: Vec<DemoRound>,
}

impl DemoReport {
    /// Every certified raise moved at least a full clique.
    pub fn holds(&self) -> bool {
        self.rounds.iter().all(|r| {
            r.certificate
                .is_none_or(|c| !c.passes() || r.moved >= self.config.clique)
        })
    }

    /// CSV with one row per raise and one per rebuild.
    pub fn to_csv(&self) -> String {
        let mut out =
            String::from("round,kind,bridge_before,bridge_after,moved,max_expansion,max_contraction,certified\n");
        for r in &self.rounds {
            let kind = match r.kind {
                RoundKind::Increase => "increase",
                RoundKind::Unchanged => "unchanged",
            };
            let (e, c, ok) = match r.certificate {
                Some(c) => (format!("{:.6}", c.max_expansion), format!("{:.6}", c.max_contraction), c.passes()),
                None => (String::new(), String::new(), false),
            };
            writeln!(
                out,
                "{},{kind},{},{},{},{e},{c},{}",
                r.round, r.bridge_before, r.bridge_after, r.moved, u8::from(ok)
            )
            .unwrap();
            if r.kind == RoundKind::Increase {
                writeln!(out, "{},rebuild,{},{},,,,", r.round, r.bridge_after, r.bridge_before).unwrap();
            }
        }
        out
    }
}

pub fn two_cliques(k: usize, bridge: u64, max_weight: u64) -> Result<WeightedGraph> {
    let mut g = WeightedGraph::new(2 * k, max_weight)?;
    for side in [0, k] {
        for a in 0..k {
            for b in a + 1..k {
                g.insert_edge(side + a, side + b, 1)?;
            }
        }
    }
    g.insert_edge(0, k, bridge)?;
    g.check_connected()?;
    Ok(g)
}

/// Cross-pair certificate for a raise from `(g_pre, e_pre)` to `(g_post, e_post)`.
pub fn certify(
    g_pre: &WeightedGraph,
    e_pre: &MultiScaleEmbedding,
    g_post: &WeightedGraph,
    e_post: &MultiScaleEmbedding,
    clique: usize,
    target: f64,
    p: Lp,
) -> Result<Certificate> {
    let (mut max_expansion, mut max_contraction) = (0.0f64, 0.0f64);
    for u in 0..clique {
        let d_pre = g_pre.distances_from(u);
        let d_post = g_post.distances_from(u);
        for v in clique..2 * clique {
            let a = e_pre.lp_distance(u, v, p)?;
            max_expansion = max_expansion.max(a / d_pre[v] as f64);
            let b = e_post.lp_distance(u, v, p)?;
            let c = if b == 0.0 { f64::INFINITY } else { d_post[v] as f64 / b };
            max_contraction = max_contraction.max(c);
        }
    }
    Ok(Certificate {
        max_expansion,
        max_contraction,
        target,
    })
}

fn moved_between(a: &MultiScaleEmbedding, b: &MultiScaleEmbedding) -> usize {
    (0..a.n()).filter(|&v| a.membership(v) != b.membership(v)).count()
}

pub fn run_lower_bound_demo<R: RngCore + ?Sized>(
    cfg: &DemoConfig,
    params: &DecompositionParams,
    rng: &mut R,
) -> Result<DemoReport> {
    if cfg.low == 0 || cfg.high < cfg.low {
        return Err(Error::InvalidParameter(format!(
            "bridge weights must satisfy 1 ≤ low ≤ high, got {} and {}",
            cfg.low, cfg.high
        )));
    }
    let mut rounds = Vec::with_capacity(cfg.rounds);
    for round in 0..cfg.rounds {
        let g = two_cliques(cfg.clique, cfg.low, cfg.high)?;
        let mut state = init_dynamic(g.clone(), params, rng)?;
        if cfg.high == cfg.low {
            rounds.push(DemoRound {
                round,
                kind: RoundKind::Unchanged,
                bridge_before: cfg.low,
                bridge_after: cfg.high,
                moved: 0,
                certificate: None,
            });
            continue;
        }
        let before = state.view().clone();
        let delta = state.handle_update(&UpdateEvent::new(0, cfg.clique, cfg.high))?;
        let moved = delta.moved_vertices().len();
        debug_assert_eq!(moved, moved_between(&before, state.view()));
        let cert = certify(&g, &before, state.graph(), state.view(), cfg.clique, cfg.target, cfg.p)?;
        rounds.push(DemoRound {
            round,
            kind: RoundKind::Increase,
            bridge_before: cfg.low,
            bridge_after: cfg.high,
            moved,
            certificate: Some(cert),
        });
    }
    Ok(DemoReport {
        config: cfg.clone(),
        rounds,
    })
}
