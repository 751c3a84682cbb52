//! Grafting a path or zigzag onto a comb keeps Z_1 at two.

use zq_forcing::structure::{comb_decompose, gen_comb, gen_pick_comb, Attachment, CombSpec};
use zq_forcing::{z_number, zq_number, Q};

fn main() -> zq_forcing::Result<()> {
    let spec = CombSpec { spine: 5, teeth: vec![(1, 2), (2, 1), (3, 2)] };
    let comb = gen_comb(&spec)?;
    let d = comb_decompose(&comb)?.expect("a comb");
    println!("spine {:?}, initial pairs {:?}", d.spine, d.initial_pairs);
    println!("comb alone: Z_1 = {}, Z = {}", zq_number(&comb, Q::Finite(1))?, z_number(&comb)?);
    let pair = d.initial_pairs[0];
    for attach in [Attachment::Path(3), Attachment::Zigzag(4)] {
        let g = gen_pick_comb(&spec, pair, attach)?;
        println!(
            "{attach:?} at {pair:?}: n = {}, Z_1 = {}, Z = {}",
            g.n(),
            zq_number(&g, Q::Finite(1))?,
            z_number(&g)?
        );
    }
    Ok(())
}
