//! Cross-validation suite: independent computations that must agree.
//!
//! Every check walks its graphs in increasing order, so the first mismatch
//! reported is a smallest counterexample.

use rayon::prelude::*;

use crate::census::{connected_graphs, enumerate_trees};
use crate::error::Result;
use crate::graph::Graph;
use crate::io::to_graph6;
use crate::solver::{z0_number, z_number, zq_number, Q};
use crate::structure::comb_decompose;
use crate::tree::{eq1_direct, leafpair_formula, path_cover_number, z1_tree};

/// Tree-valued function under test, e.g. [`z1_tree`].
pub type TreeValueFn = dyn Fn(&Graph) -> Result<u32> + Sync;

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Largest tree order for the game-solver and comb checks.
    pub tree_max: usize,
    /// Largest tree order for the closed-form formula checks.
    pub formula_max: usize,
    /// Largest order of the exhaustive connected-graph theorem checks.
    pub graph_max: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            tree_max: 10,
            formula_max: 9,
            graph_max: 7,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Mismatch {
    pub graph: Graph,
    pub detail: String,
}

impl Mismatch {
    pub fn graph6(&self) -> String {
        to_graph6(&self.graph)
    }
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: &'static str,
    pub cases: usize,
    pub mismatch: Option<Mismatch>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<CheckReport>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckReport::passed)
    }

    pub fn first_mismatch(&self) -> Option<(&'static str, &Mismatch)> {
        self.checks
            .iter()
            .find_map(|c| c.mismatch.as_ref().map(|m| (c.name, m)))
    }
}

/// Runs every check.
pub fn verify(config: &VerifyConfig) -> Result<Report> {
    Ok(Report {
        checks: vec![
            check_tree_oracle(config.tree_max, &z1_tree)?,
            check_tree_formulas(config.formula_max)?,
            check_path_cover(config.tree_max)?,
            check_comb_characterization(config.tree_max)?,
            check_graph_theorems(config.graph_max)?,
        ],
    })
}

fn first_failure<I, F>(name: &'static str, families: I, check: F) -> Result<CheckReport>
where
    I: IntoIterator<Item = Result<Vec<Graph>>>,
    F: Fn(&Graph) -> Result<Option<String>> + Sync,
{
    let mut cases = 0;
    for graphs in families {
        let graphs = graphs?;
        let hit = graphs
            .par_iter()
            .enumerate()
            .map(|(i, g)| check(g).map(|m| m.map(|d| (i, d))))
            .find_first(|r| !matches!(r, Ok(None)));
        match hit {
            Some(Err(e)) => return Err(e),
            Some(Ok(Some((i, detail)))) => {
                return Ok(CheckReport {
                    name,
                    cases: cases + i + 1,
                    mismatch: Some(Mismatch {
                        graph: graphs[i].clone(),
                        detail,
                    }),
                })
            }
            _ => cases += graphs.len(),
        }
    }
    Ok(CheckReport {
        name,
        cases,
        mismatch: None,
    })
}

fn trees_up_to(lo: usize, hi: usize) -> impl Iterator<Item = Result<Vec<Graph>>> {
    (lo..=hi).map(|n| enumerate_trees(n).map(|t| t.iter().collect()))
}

/// `z1` against the exact one-oracle game value on every tree of order
/// `3..=max_n`.
pub fn check_tree_oracle(max_n: usize, z1: &TreeValueFn) -> Result<CheckReport> {
    first_failure("tree-oracle", trees_up_to(3, max_n), |t| {
        let fast = z1(t)?;
        let game = zq_number(t, Q::Finite(1))?;
        Ok((fast != game).then(|| format!("tree value {fast}, game value {game}")))
    })
}

/// The subtree-path formula and the leaf-pair formula against the recursion
/// on every tree of order `3..=max_n` (leaf-pair on non-paths only).
pub fn check_tree_formulas(max_n: usize) -> Result<CheckReport> {
    first_failure("tree-formulas", trees_up_to(3, max_n), |t| {
        let z1 = z1_tree(t)? as i64;
        let direct = eq1_direct(t)?;
        if direct != z1 {
            return Ok(Some(format!("subtree formula {direct}, recursion {z1}")));
        }
        if !t.is_path() {
            let lp = leafpair_formula(t)?;
            if lp != z1 {
                return Ok(Some(format!("leaf-pair formula {lp}, recursion {z1}")));
            }
        }
        Ok(None)
    })
}

/// Path cover number against the exact zero forcing number on trees.
pub fn check_path_cover(max_n: usize) -> Result<CheckReport> {
    first_failure("path-cover", trees_up_to(1, max_n), |t| {
        let pc = path_cover_number(t)?;
        let z = z_number(t)?;
        Ok((pc != z).then(|| format!("path cover {pc}, zero forcing {z}")))
    })
}

/// One-oracle value 2 exactly on non-path combs.
pub fn check_comb_characterization(max_n: usize) -> Result<CheckReport> {
    first_failure("comb-characterization", trees_up_to(3, max_n), |t| {
        let two = z1_tree(t)? == 2;
        let comb = !t.is_path() && comb_decompose(t)?.is_some();
        Ok((two != comb).then(|| format!("value-2 is {two}, non-path comb is {comb}")))
    })
}

/// Exhaustive theorem checks on connected graphs of order `1..=max_n`:
/// the chain `Z_0 <= Z_1 <= Z_2 <= Z_3 <= Z`, `Z_k <= k => Z_k = Z`,
/// `Z_k = k => Z_{k-1} = k`, `Z_0 = 1` iff tree, `Z_q = 1` iff path, and for
/// `q >= 2`, `Z_q = 2` iff `Z = 2`.
pub fn check_graph_theorems(max_n: usize) -> Result<CheckReport> {
    let families = (1..=max_n).map(connected_graphs);
    first_failure("graph-theorems", families, graph_theorem_violation)
}

fn graph_theorem_violation(g: &Graph) -> Result<Option<String>> {
    let z = z_number(g)?;
    let mut zs = vec![z0_number(g)?];
    for q in 1..=3 {
        zs.push(zq_number(g, Q::Finite(q))?);
    }
    let chain: Vec<u32> = zs.iter().copied().chain([z]).collect();
    if chain.windows(2).any(|w| w[0] > w[1]) {
        return Ok(Some(format!("chain Z_0..Z_3, Z = {chain:?} is not monotone")));
    }
    for k in 1..=3u32 {
        let zk = zs[k as usize];
        if zk <= k && zk != z {
            return Ok(Some(format!("Z_{k} = {zk} <= {k} but Z = {z}")));
        }
        if zk == k && zs[k as usize - 1] != k {
            return Ok(Some(format!("Z_{k} = {k} but Z_{} = {}", k - 1, zs[k as usize - 1])));
        }
    }
    if (zs[0] == 1) != g.is_tree() {
        return Ok(Some(format!("Z_0 = {} on a graph with tree = {}", zs[0], g.is_tree())));
    }
    for (q, &zq) in zs.iter().enumerate().take(4).skip(1) {
        if (zq == 1) != g.is_path() {
            return Ok(Some(format!("Z_{q} = {zq} on a graph with path = {}", g.is_path())));
        }
    }
    for (q, &zq) in zs.iter().enumerate().take(4).skip(2) {
        if (zq == 2) != (z == 2) {
            return Ok(Some(format!("Z_{q} = {zq} but Z = {z}")));
        }
    }
    Ok(None)
}
