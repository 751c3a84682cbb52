//! Complete binary trees: Z_1 equals the depth while the path cover number
//! roughly doubles per level.

use zq_forcing::structure::gen_complete_binary;
use zq_forcing::tree::{path_cover_number, z1_tree};

fn main() -> zq_forcing::Result<()> {
    println!("{:>5} {:>6} {:>4} {:>11}", "depth", "n", "Z_1", "path cover");
    for d in 1..=12 {
        let t = gen_complete_binary(d)?;
        println!("{d:>5} {:>6} {:>4} {:>11}", t.n(), z1_tree(&t)?, path_cover_number(&t)?);
    }
    Ok(())
}
