use std::path::PathBuf;
use std::str::FromStr;

use crate::decomposition::DecompositionParams;
use crate::embedding::Lp;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    StaticEval,
    DynamicEval,
    LowerBoundDemo,
    Audit,
}

impl Mode {
    pub const ALL: [Mode; 4] = [Mode::StaticEval, Mode::DynamicEval, Mode::LowerBoundDemo, Mode::Audit];

    pub fn name(&self) -> &'static str {
        match self {
            Mode::StaticEval => "static-eval",
            Mode::DynamicEval => "dynamic-eval",
            Mode::LowerBoundDemo => "lower-bound-demo",
            Mode::Audit => "audit",
        }
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Mode::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown mode {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSource {
    /// Random spanning tree plus uniformly chosen extra edges.
    Synthetic,
    /// `u v w` edge list; a connected sample of `n` vertices is taken when
    /// the file is larger.
    File { path: PathBuf, one_indexed: bool },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub mode: Mode,
    pub graph: GraphSource,
    pub n: usize,
    /// Weight bound `W`.
    pub max_weight: u64,
    pub seed: u64,
    /// Number of updates `Q`.
    pub updates: usize,
    /// Non-tree edges of a synthetic graph; defaults to `n`.
    pub extra_edges: Option<usize>,
    /// Initial weights are uniform on `[1, initial_max]`; defaults to `max(1, W/10)`.
    pub initial_max: Option<u64>,
    /// Step `t` of `Q` draws its increment uniformly from `[1, 1 + ⌊K·t/Q⌋]`;
    /// `K` defaults to `W/10`.
    pub increment_k: Option<u64>,
    pub p: Lp,
    pub out_dir: PathBuf,
    /// Multiply embedded distances by 4.
    pub normalize_4: bool,
    /// Average over this many uniformly sampled pairs instead of all pairs.
    pub pairs_sample: Option<usize>,
    /// Independent embeddings drawn by `static-eval`.
    pub samples: usize,
    /// Clique size of the lower-bound instance.
    pub clique: usize,
    /// Increase/rebuild rounds of the lower-bound demo.
    pub toggles: usize,
    /// Distortion target of the lower-bound certificate; defaults to the
    /// largest integer `T` with `3T² < W`.
    pub target: Option<f64>,
    /// Audit after every this many updates.
    pub audit_every: usize,
    pub decomposition: DecompositionParams,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            mode: Mode::DynamicEval,
            graph: GraphSource::Synthetic,
            n: 150,
            max_weight: 100,
            seed: 0,
            updates: 0,
            extra_edges: None,
            initial_max: None,
            increment_k: None,
            p: Lp::L2,
            out_dir: PathBuf::from("out"),
            normalize_4: false,
            pairs_sample: None,
            samples: 100,
            clique: 50,
            toggles: 4,
            target: None,
            audit_every: 1,
            decomposition: DecompositionParams::default(),
        }
    }
}

impl ExperimentConfig {
    /// The three dynamic instance shapes: `n = 150, 300, 600` with
    /// `Q = 10000, 5000, 1000`, `W = 1000` and `m ≈ 3n`. The increment range
    /// for `n = 150` is narrowed to `K = 20` so ten thousand increases do not
    /// saturate its edges.
    pub fn preset(n: usize) -> Result<Self> {
        let (updates, k) = match n {
            150 => (10_000, 20),
            300 => (5_000, 100),
            600 => (1_000, 100),
            _ => return Err(Error::InvalidParameter(format!("no preset for n = {n}"))),
        };
        Ok(ExperimentConfig {
            n,
            max_weight: 1000,
            updates,
            extra_edges: Some(2 * n),
            increment_k: Some(k),
            ..ExperimentConfig::default()
        })
    }

    pub fn resolved_extra_edges(&self) -> usize {
        self.extra_edges.unwrap_or(self.n)
    }

    pub fn resolved_initial_max(&self) -> u64 {
        self.initial_max.unwrap_or((self.max_weight / 10).max(1))
    }

    pub fn resolved_increment_k(&self) -> u64 {
        self.increment_k.unwrap_or(self.max_weight / 10)
    }

    pub fn resolved_target(&self) -> f64 {
        self.target.unwrap_or_else(|| default_target(self.max_weight))
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidParameter(m));
        if self.max_weight == 0 {
            return bad("W must be at least 1".into());
        }
        if self.resolved_initial_max() > self.max_weight {
            return bad(format!(
                "initial weights up to {} exceed W = {}",
                self.resolved_initial_max(),
                self.max_weight
            ));
        }
        if self.audit_every == 0 {
            return bad("audit interval must be positive".into());
        }
        if self.mode == Mode::LowerBoundDemo && self.clique < 1 {
            return bad("clique size must be positive".into());
        }
        if self.mode != Mode::LowerBoundDemo && self.n < 2 {
            return bad(format!("n = {} leaves no vertex pairs", self.n));
        }
        Ok(())
    }
}

/// Largest integer `T` with `3T² < W`, at least 1.
pub fn default_target(w: u64) -> f64 {
    let mut t = ((w as f64 / 3.0).sqrt().floor() as u64).max(1);
    while t > 1 && 3 * t * t >= w {
        t -= 1;
    }
    t as f64
}
