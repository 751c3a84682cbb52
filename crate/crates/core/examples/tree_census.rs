//! Histogram of Z_1 over every tree on n vertices.
//!
//! `cargo run --release --example tree_census -- 14`

use zq_forcing::census::census;

fn main() -> zq_forcing::Result<()> {
    let n_max = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(12);
    let rows = census(3, n_max)?;
    let width = rows.iter().flat_map(|r| r.counts.keys()).max().copied().unwrap_or(1);
    print!("{:>3}", "n");
    for k in 1..=width {
        print!(" {k:>6}");
    }
    println!(" {:>8}", "total");
    for row in &rows {
        print!("{:>3}", row.n);
        for k in 1..=width {
            match row.get(k) {
                0 => print!(" {:>6}", ""),
                c => print!(" {c:>6}"),
            }
        }
        println!(" {:>8}", row.total());
    }
    Ok(())
}
