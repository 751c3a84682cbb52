//! Spiders where Z_k stays at k + 1 even though Z = k + 2.

use zq_forcing::structure::gen_spider;
use zq_forcing::{z_number, zq_number, Q};

fn main() -> zq_forcing::Result<()> {
    println!("{:>2} {:>3} {:>3} {:>5} {:>7}", "k", "n", "Z", "Z_k", "Z_(k+1)");
    for k in 1..=5 {
        let g = gen_spider(k)?;
        let zk = zq_number(&g, Q::Finite(k as u32))?;
        let next = zq_number(&g, Q::Finite(k as u32 + 1))?;
        println!("{k:>2} {:>3} {:>3} {zk:>5} {next:>7}", g.n(), z_number(&g)?);
    }
    Ok(())
}
