use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A simple undirected graph on the vertices `0..n`.
///
/// Adjacency lists are kept sorted. Construction rejects self-loops,
/// duplicate edges and out-of-range endpoints instead of repairing them.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::validation(format!(
                    "edge ({u}, {v}) refers to a vertex outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::validation(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
            edge_count += 1;
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::validation(format!(
                    "duplicate edge ({}, {})",
                    u.min(w[0]),
                    u.max(w[0])
                )));
            }
        }
        Ok(Graph { adj, edge_count })
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.bfs_order(0).len() == self.n()
    }

    pub fn is_tree(&self) -> bool {
        self.n() > 0 && self.edge_count + 1 == self.n() && self.is_connected()
    }

    pub fn is_path(&self) -> bool {
        self.is_tree() && self.max_degree() <= 2
    }

    /// Vertices reachable from `start`, in breadth-first order.
    pub fn bfs_order(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n()];
        let mut order = Vec::with_capacity(self.n());
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        order
    }

    /// The induced subgraph on `keep`, relabelled to `0..keep.len()` in
    /// increasing vertex order. The second value maps new labels back to old.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = keep.iter().collect();
        let mut new_of = vec![usize::MAX; self.n()];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let adj: Vec<Vec<usize>> = old
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| new_of[w] != usize::MAX)
                    .map(|&w| new_of[w])
                    .collect()
            })
            .collect();
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        (Graph { adj, edge_count }, old)
    }

    /// Per-vertex neighbourhood bitmasks, available for graphs on at most 64
    /// vertices.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.n() > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|list| list.iter().fold(0u64, |m, &w| m | 1 << w))
                .collect(),
        )
    }

    pub(crate) fn require_tree(&self, op: &str) -> Result<()> {
        if self.is_tree() {
            Ok(())
        } else {
            Err(Error::contract(format!("{op} requires a tree")))
        }
    }
}
