//! Two cliques joined by a bridge that jumps from weight 1 to W. Any
//! embedding that keeps distortion low on both sides of the jump has to move
//! a whole clique.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use dynembed::decomposition::DecompositionParams;
use dynembed::embedding::Lp;
use dynembed::harness::{default_target, run_lower_bound_demo, DemoConfig};

fn main() -> dynembed::Result<()> {
    let w = 10_000;
    let cfg = DemoConfig {
        clique: 50,
        low: 1,
        high: w,
        rounds: 6,
        target: default_target(w),
        p: Lp::L2,
    };
    let report = run_lower_bound_demo(&cfg, &DecompositionParams::default(), &mut ChaCha8Rng::seed_from_u64(0))?;
    print!("{}", report.to_csv());
    println!("every certified raise moved a full clique: {}", report.holds());
    Ok(())
}
