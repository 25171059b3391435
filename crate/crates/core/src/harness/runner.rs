use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::demo::{run_lower_bound_demo, DemoConfig};
use super::eval::{emit_csv, write_static_csv};
use super::generate::generate_instance;
use super::{run_dynamic_eval, run_static_eval, ExperimentConfig, Mode};
use crate::dynamic::{init_dynamic, write_delta_log};
use crate::error::{Error, Result};

/// Independent generator streams under one seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stream {
    Instance = 1,
    Algorithm = 2,
    Pairs = 3,
}

pub fn stream_rng(seed: u64, stream: Stream) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream as u64);
    rng
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunOutcome {
    pub files: Vec<PathBuf>,
    /// One-line human summary per finding.
    pub summary: Vec<String>,
    /// False when audit mode found a violation.
    pub ok: bool,
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Runs `cfg.mode` and writes its outputs into `cfg.out_dir`.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<RunOutcome> {
    cfg.validate()?;
    fs::create_dir_all(&cfg.out_dir).map_err(|e| Error::Io(format!("{}: {e}", cfg.out_dir.display())))?;
    let mut alg = stream_rng(cfg.seed, Stream::Algorithm);
    let mut files = Vec::new();
    let mut summary = Vec::new();
    let mut ok = true;
    match cfg.mode {
        Mode::StaticEval => {
            let stats = run_static_eval(cfg)?;
            let path = cfg.out_dir.join("static.csv");
            write_static_csv(&stats, create(&path)?)?;
            files.push(path);
            let ratios: Vec<f64> = stats.iter().map(|s| s.lp_ratio()).collect();
            let max = ratios.iter().copied().fold(0.0, f64::max);
            let min = ratios.iter().copied().fold(f64::INFINITY, f64::min);
            let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
            summary.push(format!(
                "{} pairs, {} samples: mean embedded/exact {mean:.4}, min {min:.4}, max {max:.4}",
                stats.len(),
                cfg.samples
            ));
        }
        Mode::DynamicEval => {
            let run = run_dynamic_eval(cfg)?;
            let path = cfg.out_dir.join("ratios.csv");
            emit_csv(&run.series, &path)?;
            files.push(path);
            let path = cfg.out_dir.join("deltas.log");
            let mut w = create(&path)?;
            write_delta_log(run.state.deltas(), &mut w)?;
            w.flush()?;
            files.push(path);
            summary.push(format!(
                "{} updates: ratio in [{:.4}, {:.4}], exact average monotone: {}",
                run.state.t(),
                run.series.min_ratio(),
                run.series.max_ratio(),
                run.series.exact_monotone()
            ));
        }
        Mode::LowerBoundDemo => {
            let demo = DemoConfig {
                clique: cfg.clique,
                low: 1,
                high: cfg.max_weight,
                rounds: cfg.toggles,
                target: cfg.resolved_target(),
                p: cfg.p,
            };
            let report = run_lower_bound_demo(&demo, &cfg.decomposition, &mut alg)?;
            let path = cfg.out_dir.join("demo.csv");
            fs::write(&path, report.to_csv()).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            files.push(path);
            for r in &report.rounds {
                let cert = match r.certificate {
                    Some(c) if c.passes() => "certified",
                    Some(_) => "not certified",
                    None => "no update",
                };
                summary.push(format!("round {}: {} vertices moved ({cert})", r.round, r.moved));
            }
            ok = report.holds();
        }
        Mode::Audit => {
            let inst = generate_instance(cfg, &mut stream_rng(cfg.seed, Stream::Instance))?;
            let mut state = init_dynamic(inst.graph, &cfg.decomposition, &mut alg)?;
            let path = cfg.out_dir.join("audit.txt");
            let mut w = create(&path)?;
            let first = state.audit();
            writeln!(w, "{first}")?;
            ok = first.is_clean();
            for ev in &inst.updates {
                if !ok {
                    break;
                }
                state.handle_update(ev)?;
                if state.t() % cfg.audit_every as u64 == 0 || state.t() == inst.updates.len() as u64 {
                    let report = state.audit();
                    writeln!(w, "{report}")?;
                    for v in report.violations.iter().skip(1) {
                        writeln!(w, "  {v}")?;
                    }
                    ok = report.is_clean();
                }
            }
            w.flush()?;
            files.push(path);
            summary.push(if ok {
                format!("audit clean through t={}", state.t())
            } else {
                format!("audit violation at t={}", state.t())
            });
        }
    }
    Ok(RunOutcome { files, summary, ok })
}
