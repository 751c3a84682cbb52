//! Two stars joined at their centres: the oracle saves one token.

use zq_forcing::structure::gen_double_star;
use zq_forcing::tree::z1_tree;
use zq_forcing::{z0_number, z_number, zq_number, zq_static, GameSolver, SolverConfig, VertexSet, Q};

fn main() -> zq_forcing::Result<()> {
    let g = gen_double_star(3, 3)?;
    println!("double star with 3 + 3 leaves, {} vertices", g.n());
    println!("Z   = {}", z_number(&g)?);
    println!("Z_0 = {}", z0_number(&g)?);
    for q in 1..=3 {
        println!("Z_{q} = {}  (static spending: {})", zq_number(&g, Q::Finite(q))?, zq_static(&g, q)?);
    }
    println!("tree recursion gives {}", z1_tree(&g)?);

    let mut solver = GameSolver::new(&g, SolverConfig::new(Q::Finite(1)))?;
    let (value, mv) = solver.best_move(&VertexSet::new(g.n()))?;
    println!("optimal opening for value {value}: {mv}");
    println!("{} states explored", solver.memo().len());
    Ok(())
}
