//! Average embedded distance over many independent static builds, compared
//! with the exact shortest-path distance for each pair.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use dynembed::decomposition::DecompositionParams;
use dynembed::embedding::{build_static_embedding, Lp};
use dynembed::harness::{all_pairs, static_pair_statistics, synthetic_graph, PairStatistics};

fn main() -> dynembed::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let g = synthetic_graph(40, 40, 20, 20, &mut rng)?;
    let params = DecompositionParams::default();

    let one = build_static_embedding(&g, &params, &mut rng)?;
    println!("dimension {}, vector of vertex 0: {:?}", one.embedding.dimension(), one.embedding.vector(0));

    let stats = static_pair_statistics(&g, &all_pairs(g.n()), 200, &params, Lp::L2, &mut rng)?;
    let range = |f: &dyn Fn(&PairStatistics) -> f64| {
        stats
            .iter()
            .map(|s| f(s) / s.distance as f64)
            .fold((f64::INFINITY, 0.0f64), |(lo, hi), r| (lo.min(r), hi.max(r)))
    };
    for (name, (lo, hi)) in [
        ("l1", range(&|s| s.l1.mean())),
        ("linf", range(&|s| s.linf.mean())),
        ("l2", range(&|s| s.lp.mean())),
    ] {
        println!("{name:>4}: mean embedded / exact in [{lo:.3}, {hi:.3}]");
    }
    Ok(())
}
