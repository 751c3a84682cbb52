//! Labels every connected graph on five vertices by its Z_1 family.

use std::collections::BTreeMap;

use zq_forcing::census::connected_graphs;
use zq_forcing::io::to_graph6;
use zq_forcing::structure::classify;
use zq_forcing::Q;

fn main() -> zq_forcing::Result<()> {
    let mut by_label: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for g in connected_graphs(5)? {
        let c = classify(&g, Q::Finite(1))?;
        by_label
            .entry(format!("{:?} (value {})", c.label, c.value))
            .or_default()
            .push(to_graph6(&g));
    }
    for (label, graphs) in &by_label {
        println!("{label}: {}", graphs.join(" "));
    }

    let c = classify(&zq_forcing::structure::gen_spider(1)?, Q::Finite(1))?;
    println!("\nspider with one long leg:\n{c}");
    Ok(())
}
