use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use dynembed::decomposition::{DecompositionParams, RadiusCap};
use dynembed::embedding::Lp;
use dynembed::harness::{run_experiment, ExperimentConfig, GraphSource, Mode};

#[derive(Debug, Parser)]
#[command(name = "dynembed", version, about = "Dynamic lp embedding experiments")]
struct Cli {
    /// static-eval, dynamic-eval, lower-bound-demo or audit
    mode: Mode,
    /// Edge list `u v w`; a synthetic graph is generated when omitted
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Vertex ids in --graph start at 1
    #[arg(long)]
    one_indexed: bool,
    #[arg(long, default_value_t = 150)]
    n: usize,
    /// Weight bound W (bridge weight in lower-bound-demo)
    #[arg(long, default_value_t = 100)]
    w: u64,
    /// Number of weight increases
    #[arg(long, default_value_t = 0)]
    q: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Norm exponent, a number >= 1 or `inf`
    #[arg(long, default_value = "2")]
    p: Lp,
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// Multiply embedded distances by 4
    #[arg(long = "normalize-4")]
    normalize_4: bool,
    /// Average over K sampled pairs instead of all pairs
    #[arg(long)]
    pairs_sample: Option<usize>,
    /// Use one of the n = 150, 300, 600 instance shapes (overrides --n, --w, --q)
    #[arg(long)]
    preset: Option<usize>,
    /// Extra non-tree edges of a synthetic graph [default: n]
    #[arg(long)]
    extra_edges: Option<usize>,
    /// Initial weights are uniform on [1, this] [default: max(1, W/10)]
    #[arg(long)]
    init_max: Option<u64>,
    /// Increment range growth K [default: W/10]
    #[arg(long)]
    increment_k: Option<u64>,
    /// Embeddings sampled by static-eval
    #[arg(long, default_value_t = 100)]
    samples: usize,
    /// Clique size for lower-bound-demo
    #[arg(long, default_value_t = 50)]
    clique: usize,
    /// Raise/rebuild rounds for lower-bound-demo
    #[arg(long, default_value_t = 4)]
    toggles: usize,
    /// Distortion target of the lower-bound certificate
    #[arg(long)]
    target: Option<f64>,
    /// Audit every k-th update
    #[arg(long, default_value_t = 1)]
    audit_every: usize,
    /// beta = c0 ln n / R
    #[arg(long, default_value_t = 2.0)]
    c0: f64,
    /// Radius truncation: contraction-aware, half or full
    #[arg(long, default_value = "contraction-aware")]
    radius_cap: String,
}

fn radius_cap(s: &str) -> Result<RadiusCap, String> {
    match s {
        "contraction-aware" => Ok(RadiusCap::ContractionAware),
        "half" => Ok(RadiusCap::HalfScale),
        "full" => Ok(RadiusCap::FullScale),
        _ => Err(format!("unknown radius cap {s:?}")),
    }
}

fn config(cli: Cli) -> Result<ExperimentConfig, String> {
    let base = match cli.preset {
        Some(n) => ExperimentConfig::preset(n).map_err(|e| e.to_string())?,
        None => ExperimentConfig {
            n: cli.n,
            max_weight: cli.w,
            updates: cli.q,
            extra_edges: cli.extra_edges,
            increment_k: cli.increment_k,
            ..ExperimentConfig::default()
        },
    };
    Ok(ExperimentConfig {
        mode: cli.mode,
        graph: match cli.graph {
            Some(path) => GraphSource::File {
                path,
                one_indexed: cli.one_indexed,
            },
            None => GraphSource::Synthetic,
        },
        seed: cli.seed,
        initial_max: cli.init_max,
        p: cli.p,
        out_dir: cli.out,
        normalize_4: cli.normalize_4,
        pairs_sample: cli.pairs_sample,
        samples: cli.samples,
        clique: cli.clique,
        toggles: cli.toggles,
        target: cli.target,
        audit_every: cli.audit_every,
        decomposition: DecompositionParams {
            c0: cli.c0,
            radius_cap: radius_cap(&cli.radius_cap)?,
        },
        ..base
    })
}

fn main() -> ExitCode {
    let cfg = match config(Cli::parse()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match run_experiment(&cfg) {
        Ok(out) => {
            for line in &out.summary {
                println!("{line}");
            }
            for f in &out.files {
                println!("wrote {}", f.display());
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
