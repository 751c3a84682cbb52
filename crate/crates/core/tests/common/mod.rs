#![allow(dead_code)]

use rand::Rng;
use zq_forcing::{Graph, VertexSet};

/// Random labelled tree from a uniformly random Prüfer sequence.
pub fn random_tree(rng: &mut impl Rng, n: usize) -> Graph {
    if n <= 2 {
        return Graph::new(n, (1..n).map(|i| (0, i))).unwrap();
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges).unwrap()
}

/// Erdős–Rényi graph with edge probability `p`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Applies the filling rule one random force at a time until none applies.
pub fn random_order_closure(rng: &mut impl Rng, g: &Graph, filled: &VertexSet) -> VertexSet {
    let mut f = filled.clone();
    loop {
        let forces: Vec<usize> = f
            .iter()
            .filter_map(|u| {
                let open: Vec<usize> = g.neighbors(u).iter().copied().filter(|&w| !f.contains(w)).collect();
                (open.len() == 1).then(|| open[0])
            })
            .collect();
        if forces.is_empty() {
            return f;
        }
        f.insert(forces[rng.gen_range(0..forces.len())]);
    }
}

pub fn random_subset(rng: &mut impl Rng, n: usize, p: f64) -> VertexSet {
    VertexSet::from_vertices(n, (0..n).filter(|_| rng.gen_bool(p)))
}

/// Number of non-isomorphic free trees on `n` vertices, n = 1..=20.
pub const FREE_TREE_COUNTS: [u64; 20] = [
    1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320, 48629, 123867, 317955,
    823065,
];
