//! Average embedded distance over average exact distance along a long
//! increase stream, on one of the n = 150, 300, 600 instance shapes.
//!
//! `cargo run --release --example preset_run -- 150 2000`

use dynembed::harness::{emit_csv, run_dynamic_eval, ExperimentConfig, Mode};

fn main() -> dynembed::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(150, |s| s.parse().expect("n"));
    let mut cfg = ExperimentConfig::preset(n)?;
    if let Some(q) = args.next() {
        cfg.updates = q.parse().expect("q");
    }
    cfg.mode = Mode::DynamicEval;
    cfg.pairs_sample = Some(2000);

    let run = run_dynamic_eval(&cfg)?;
    let path = std::env::temp_dir().join(format!("ratios-{n}.csv"));
    emit_csv(&run.series, &path)?;
    for row in run.series.rows.iter().step_by((cfg.updates / 10).max(1)) {
        println!("t={:>6} exact {:>9.3} embedded {:>10.3} ratio {:.3}", row.t, row.exact_avg, row.embed_avg, row.ratio);
    }
    println!(
        "ratio range [{:.3}, {:.3}], wrote {}",
        run.series.min_ratio(),
        run.series.max_ratio(),
        path.display()
    );
    Ok(())
}
