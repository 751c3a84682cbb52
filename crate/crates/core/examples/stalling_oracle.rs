//! An oracle reply that leaves the player with no force to make.

use zq_forcing::stalling::frontier;
use zq_forcing::structure::star_graph;
use zq_forcing::{closure, components, stalling_response, VertexSet};

fn main() -> zq_forcing::Result<()> {
    // centre 0 filled; every leaf is its own unfilled component
    let g = star_graph(4);
    let filled = VertexSet::from_vertices(5, [0]);
    let front = frontier(&g, &filled);
    let announced = components(&g, &filled.complement());
    println!("frontier {front:?}, announced {announced:?}");

    let reply = stalling_response(&g, &front, &announced)?;
    println!("oracle returns {reply:?}");
    let mut active = VertexSet::new(5);
    for c in &reply {
        active.union_with(c);
    }
    let after = zq_forcing::induced_closure(&g, &filled, &active)?;
    println!("filling inside the reply reaches {after:?}");
    assert_eq!(closure(&g, &filled), after);
    Ok(())
}
