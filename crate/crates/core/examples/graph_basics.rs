//! Load a weighted edge list, query exact distances, and look at the graph
//! with light edges treated as free.

use std::io::Cursor;

use dynembed::graph::{load_edge_list, EdgeListOptions, Threshold, UpdateEvent};

const EDGES: &str = "\
# a 6-cycle with one chord
0 1 1
1 2 4
2 3 1
3 4 6
4 5 2
5 0 3
1 4 5
";

fn main() -> dynembed::Result<()> {
    let opts = EdgeListOptions {
        max_weight: Some(16),
        ..Default::default()
    };
    let mut g = load_edge_list(Cursor::new(EDGES), &opts)?;
    println!("n = {}, m = {}, W = {}, Δ = {}", g.n(), g.m(), g.max_weight(), g.delta());
    println!("distances from 0: {:?}", g.distances_from(0));

    // edges of weight ≤ 2 cost nothing in the filtered view
    let eps = Threshold::integer(2);
    let fg = g.filtered(eps);
    println!("filtered d(0, 3) = {}", fg.filtered_distance(0, 3)?);
    let classes = g.contract_below(eps);
    println!("{} zero-weight classes, representatives {:?}", classes.class_count(), classes.representatives());

    let applied = g.apply_weight_increase(&UpdateEvent::new(1, 4, 12))?;
    println!("raised edge {:?}; distances from 0 now {:?}", applied, g.distances_from(0));
    Ok(())
}
