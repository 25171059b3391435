//! Low-diameter decompositions and random cuts of one graph at a range of
//! scales, with a quick Monte Carlo look at the cut properties.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use dynembed::decomposition::{build_cut, ldrd, verify_cut_properties, CutCriteria, DecompositionParams, Scale};
use dynembed::harness::synthetic_graph;

fn main() -> dynembed::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let g = synthetic_graph(24, 24, 32, 32, &mut rng)?;
    let apsp = g.all_pairs();
    let params = DecompositionParams::default();

    for r in [4, 16, 64, 256] {
        let scale = Scale::integer(r);
        let c = ldrd(&g, scale, &params, &mut rng)?;
        let widest = (0..c.len()).map(|id| c.weak_diameter(id, &apsp)).max().unwrap_or(0);
        println!(
            "R = {r:>3}: {:>2} clusters, widest weak diameter {widest}, β = {:.3}, radius cap {}",
            c.len(),
            c.beta(),
            c.radius_cap()
        );
    }

    let scale = Scale::integer(32);
    let cut = build_cut(ldrd(&g, scale, &params, &mut rng)?, &mut rng);
    println!("\none cut at R = 32:\n{}", cut.to_text());

    let pairs: Vec<_> = (0..g.n()).flat_map(|u| (u + 1..g.n()).map(move |v| (u, v))).collect();
    let beta = params.beta(g.n(), scale);
    let report = verify_cut_properties(
        &g,
        || Ok(build_cut(ldrd(&g, scale, &params, &mut rng)?, &mut rng)),
        &pairs,
        10_000,
        &CutCriteria::new(scale, g.n(), beta),
    )?;
    println!(
        "{} pairs over {} cuts, {} outside the expected envelope",
        report.pairs.len(),
        report.trials,
        report.failures().count()
    );
    for p in report.failures() {
        println!("  ({}, {}) at distance {}: cut in {:.4} of trials", p.u, p.v, p.distance, p.cut_frequency);
    }
    Ok(())
}
