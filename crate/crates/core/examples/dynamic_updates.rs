//! Feed weight increases to the dynamic embedding, print what each one
//! changed, audit the state, and replay the change log.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use dynembed::decomposition::DecompositionParams;
use dynembed::dynamic::{init_dynamic, replay_deltas};
use dynembed::embedding::{export_embedding, Lp};
use dynembed::harness::{increase_stream, synthetic_graph};

fn main() -> dynembed::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let g = synthetic_graph(30, 30, 100, 10, &mut rng)?;
    let updates = increase_stream(&g, 60, 30, &mut rng)?;
    let mut state = init_dynamic(g, &DecompositionParams::default(), &mut rng)?;
    println!("{} levels, initial audit: {}", state.ladder().len(), state.audit());

    for ev in &updates {
        let before = state.query(ev.u, ev.v, Lp::L2)?;
        let delta = state.handle_update(ev)?;
        if !delta.is_empty() {
            let (t, len, moved) = (delta.t, delta.len(), delta.moved_vertices());
            println!(
                "t={t:>2} ({},{})→{:>3}: {len} coordinates moved on vertices {moved:?}, ‖ρ(u) − ρ(v)‖ {before:.1} → {:.1}",
                ev.u,
                ev.v,
                ev.new_weight,
                state.query(ev.u, ev.v, Lp::L2)?
            );
        }
    }
    println!("final audit: {}", state.audit());
    println!("largest per-level split count: {}", state.max_split_count());

    let replayed = replay_deltas(state.deltas(), state.ladder())?;
    println!("replay matches: {}", export_embedding(&replayed) == export_embedding(state.view()));
    Ok(())
}
