//! Census of one-oracle forcing numbers over all free trees of each order.

mod canonical;
mod trees;

use std::collections::BTreeMap;
use std::io::{self, Write};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::tree::z1_tree;

pub use canonical::{
    all_graphs, canonical_code, centroids, connected_graphs, rooted_code, MAX_GRAPH_ORDER,
};
pub use trees::{enumerate_trees, enumerate_trees_capped, FreeTrees, MAX_TREE_ORDER};

/// Number of non-isomorphic trees on `n` vertices for each value `k`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CensusRow {
    pub n: usize,
    pub counts: BTreeMap<u32, u64>,
}

impl CensusRow {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn get(&self, k: u32) -> u64 {
        self.counts.get(&k).copied().unwrap_or(0)
    }

    fn merge(mut self, other: CensusRow) -> CensusRow {
        for (k, c) in other.counts {
            *self.counts.entry(k).or_default() += c;
        }
        self
    }
}

/// Histogram of `value` over every free tree on `n` vertices.
///
/// Trees are evaluated in parallel on the current rayon pool; per-worker
/// histograms are summed, so the result does not depend on scheduling.
pub fn tree_histogram<F>(n: usize, value: F) -> Result<CensusRow>
where
    F: Fn(&Graph) -> Result<u32> + Sync,
{
    let trees = enumerate_trees(n)?;
    let rows: Vec<&[u8]> = trees.parent_rows().collect();
    rows.par_iter()
        .map(|row| {
            let g = trees::tree_from_parents(row);
            let k = value(&g)?;
            Ok(CensusRow {
                n,
                counts: BTreeMap::from([(k, 1)]),
            })
        })
        .try_reduce(|| CensusRow { n, counts: BTreeMap::new() }, |a, b| Ok(a.merge(b)))
}

/// One-oracle forcing number histograms for every `n` in `n_min..=n_max`.
pub fn census(n_min: usize, n_max: usize) -> Result<Vec<CensusRow>> {
    if n_min < 3 || n_min > n_max {
        return Err(Error::contract(format!(
            "census range must satisfy 3 <= n_min <= n_max, got {n_min}..={n_max}"
        )));
    }
    if n_max > MAX_TREE_ORDER {
        return Err(Error::resource(format!(
            "census is capped at {MAX_TREE_ORDER} vertices, got {n_max}"
        )));
    }
    (n_min..=n_max).map(|n| tree_histogram(n, z1_tree)).collect()
}

/// [`census`] on a dedicated pool of `workers` threads.
pub fn census_with_workers(n_min: usize, n_max: usize, workers: usize) -> Result<Vec<CensusRow>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::resource(format!("cannot start worker pool: {e}")))?;
    pool.install(|| census(n_min, n_max))
}

/// Writes rows as CSV with header `n,k,count`, sorted by `(n, k)`.
pub fn write_csv<W: Write>(rows: &[CensusRow], mut out: W) -> io::Result<()> {
    writeln!(out, "n,k,count")?;
    let mut sorted: Vec<&CensusRow> = rows.iter().collect();
    sorted.sort_by_key(|r| r.n);
    for row in sorted {
        for (k, c) in &row.counts {
            writeln!(out, "{},{},{}", row.n, k, c)?;
        }
    }
    Ok(())
}
