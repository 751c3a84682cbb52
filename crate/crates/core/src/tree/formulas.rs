//! Closed-form evaluations of the one-oracle forcing number on trees.
//!
//! Both formulas score a subtree `S` and a vertex `v` of `S` by the
//! cheapest maximal path of `S` starting at `v`, where a path costs
//! `Σ (deg_S(w) − 2)` over its vertices. They are exponential or high-degree
//! polynomial and exist as independent checks on [`super::z1_tree`].

use crate::error::{Error, Result};
use crate::forcing::{bits, Masks};
use crate::graph::Graph;

/// Default vertex cap for [`eq1_direct`].
pub const EQ1_DEFAULT_CAP: usize = 12;

/// Vertex cap for [`leafpair_formula`], whose subtree enumeration only runs
/// inside the pieces hanging off a leaf-to-leaf path.
pub const LEAFPAIR_CAP: usize = 16;

/// Minimum of `Σ (deg_S(w) − 2)` over the maximal paths of `S` that start at
/// `v`. For `S = {v}` the trivial path contributes `deg_S(v) − 2 = −2`.
fn min_path_cost(masks: &Masks, s: u64, v: usize) -> i64 {
    fn walk(masks: &Masks, s: u64, w: usize, came_from: u64) -> i64 {
        let nbrs = masks.adj[w] & s;
        let here = nbrs.count_ones() as i64 - 2;
        let onward = bits(nbrs & !came_from)
            .map(|x| walk(masks, s, x, 1 << w))
            .min();
        here + onward.unwrap_or(0)
    }
    walk(masks, s, v, 0)
}

/// Calls `f` once for every connected vertex set inside `allowed` that
/// contains `seed`.
fn for_each_connected_superset(masks: &Masks, seed: usize, allowed: u64, f: &mut impl FnMut(u64)) {
    fn grow(masks: &Masks, current: u64, frontier: u64, excluded: u64, f: &mut impl FnMut(u64)) {
        if frontier == 0 {
            f(current);
            return;
        }
        let x = frontier & frontier.wrapping_neg();
        let xi = x.trailing_zeros() as usize;
        let with = current | x;
        grow(masks, with, (frontier | masks.adj[xi]) & !with & !excluded, excluded, f);
        grow(masks, current, frontier & !x, excluded | x, f);
    }
    let start = 1u64 << seed;
    grow(masks, start, masks.adj[seed] & allowed, !allowed, f);
}

/// Direct evaluation of
/// `2 + max_v max_{S ∋ v} min_{P} Σ_{w ∈ P} (deg_S(w) − 2)` over all subtrees
/// `S` and maximal paths `P` of `S` starting at `v`.
pub fn eq1_direct(t: &Graph) -> Result<i64> {
    eq1_direct_capped(t, EQ1_DEFAULT_CAP)
}

pub fn eq1_direct_capped(t: &Graph, cap: usize) -> Result<i64> {
    t.require_tree("eq1_direct")?;
    if t.n() < 3 {
        return Err(Error::contract("eq1_direct needs at least three vertices"));
    }
    if t.n() > cap.min(64) {
        return Err(Error::resource(format!(
            "subtree enumeration is capped at {cap} vertices, got {}",
            t.n()
        )));
    }
    let masks = Masks::new(t).expect("n <= 64");
    Ok((0..t.n())
        .map(|v| vertex_value(&masks, v, masks.full))
        .max()
        .expect("nonempty"))
}

/// `2 + max_{S ∋ v} min_P Σ (deg_S(w) − 2)` over the subtrees `S` of the tree
/// induced on `allowed`.
fn vertex_value(masks: &Masks, v: usize, allowed: u64) -> i64 {
    let mut best = i64::MIN;
    for_each_connected_superset(masks, v, allowed, &mut |s| {
        best = best.max(min_path_cost(masks, s, v));
    });
    2 + best
}

/// Vertices of the path from `a` to `b`, both included.
fn tree_path(t: &Graph, a: usize, b: usize) -> Vec<usize> {
    let mut parent = vec![usize::MAX; t.n()];
    parent[a] = a;
    let mut stack = vec![a];
    while let Some(u) = stack.pop() {
        for &w in t.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                stack.push(w);
            }
        }
    }
    let mut path = vec![b];
    let mut cur = b;
    while cur != a {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    path
}

/// Leaf-pair evaluation for a tree that is not a path.
///
/// For each pair of leaves `u1, u2` and each interior vertex `v` of their
/// path, `S_v` is `T` with the branches at `v` containing `u1` and `u2`
/// removed. The value is `2 + min_{u1,u2} max_v g(v)`, where `g(v)` is the
/// subtree-path score of `v` within `S_v`: the largest
/// `2 + min_P Σ (deg_S(w) − 2)` over subtrees `S` of `S_v` containing `v`.
/// Scoring `S_v` alone, without the maximum over its subtrees and the
/// leading 2, undercounts (it gives 0 on the claw).
pub fn leafpair_formula(t: &Graph) -> Result<i64> {
    t.require_tree("leafpair_formula")?;
    if t.is_path() {
        return Err(Error::contract("leafpair_formula is undefined on paths"));
    }
    if t.n() > LEAFPAIR_CAP {
        return Err(Error::resource(format!(
            "subtree enumeration is capped at {LEAFPAIR_CAP} vertices, got {}",
            t.n()
        )));
    }
    let masks = Masks::new(t).expect("n <= 64");
    let leaves: Vec<usize> = (0..t.n()).filter(|&v| t.degree(v) == 1).collect();
    let mut best = i64::MAX;
    for (i, &u1) in leaves.iter().enumerate() {
        for &u2 in &leaves[i + 1..] {
            let path = tree_path(t, u1, u2);
            let mut worst = i64::MIN;
            for w in 1..path.len() - 1 {
                let v = path[w];
                let cut = (1u64 << path[w - 1]) | (1u64 << path[w + 1]);
                // component of T - v through v's remaining neighbours
                let mut s = 1u64 << v;
                let mut frontier = masks.adj[v] & !cut;
                while frontier != 0 {
                    s |= frontier;
                    let mut grow = 0;
                    for x in bits(frontier) {
                        grow |= masks.adj[x];
                    }
                    frontier = grow & !s & !cut;
                }
                worst = worst.max(vertex_value(&masks, v, s));
            }
            best = best.min(worst);
        }
    }
    Ok(2 + best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    fn double_star() -> Graph {
        Graph::new(8, [(0, 3), (1, 3), (2, 3), (3, 4), (4, 5), (4, 6), (4, 7)]).unwrap()
    }

    #[test]
    fn connected_supersets_of_star_center() {
        let g = star(4);
        let masks = Masks::new(&g).unwrap();
        let mut seen = Vec::new();
        for_each_connected_superset(&masks, 0, masks.full, &mut |s| seen.push(s));
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), 16);
        let mut from_leaf = 0;
        for_each_connected_superset(&masks, 1, masks.full, &mut |_| from_leaf += 1);
        // {1} plus {1,0} with any subset of the other three leaves
        assert_eq!(from_leaf, 9);
    }

    #[test]
    fn eq1_small_trees() {
        assert_eq!(eq1_direct(&path(5)).unwrap(), 1);
        assert_eq!(eq1_direct(&star(3)).unwrap(), 2);
        assert_eq!(eq1_direct(&double_star()).unwrap(), 3);
        assert!(matches!(eq1_direct(&path(13)), Err(Error::Resource(_))));
        assert!(matches!(eq1_direct(&path(2)), Err(Error::Contract(_))));
    }

    #[test]
    fn leafpair_small_trees() {
        assert_eq!(leafpair_formula(&double_star()).unwrap(), 3);
        assert_eq!(leafpair_formula(&star(3)).unwrap(), 2);
        assert!(matches!(leafpair_formula(&path(4)), Err(Error::Contract(_))));
    }
}
