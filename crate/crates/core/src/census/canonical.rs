use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Centroid vertices of a tree (one or two).
pub fn centroids(t: &Graph) -> Result<Vec<usize>> {
    t.require_tree("centroids")?;
    let n = t.n();
    let order = t.bfs_order(0);
    let mut parent = vec![usize::MAX; n];
    for &u in &order {
        for &w in t.neighbors(u) {
            if w != parent[u] {
                parent[w] = u;
            }
        }
    }
    let mut size = vec![1usize; n];
    for &u in order.iter().rev() {
        if parent[u] != usize::MAX {
            size[parent[u]] += size[u];
        }
    }
    let heaviest = |v: usize| {
        t.neighbors(v)
            .iter()
            .map(|&w| if w == parent[v] { n - size[v] } else { size[w] })
            .max()
            .unwrap_or(0)
    };
    let best = (0..n).map(heaviest).min().expect("nonempty");
    Ok((0..n).filter(|&v| heaviest(v) == best).collect())
}

/// AHU code of `t` rooted at `root`: a leaf is `()`, an internal vertex
/// wraps its sorted child codes.
pub fn rooted_code(t: &Graph, root: usize) -> String {
    let order = t.bfs_order(root);
    let mut parent = vec![usize::MAX; t.n()];
    parent[root] = root;
    for &u in &order {
        for &w in t.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
            }
        }
    }
    let mut codes: Vec<String> = vec![String::new(); t.n()];
    for &u in order.iter().rev() {
        let mut kids: Vec<String> = t
            .neighbors(u)
            .iter()
            .filter(|&&w| parent[w] == u && w != u)
            .map(|&w| std::mem::take(&mut codes[w]))
            .collect();
        kids.sort_unstable();
        codes[u] = format!("({})", kids.concat());
    }
    std::mem::take(&mut codes[root])
}

/// Isomorphism invariant string for a free tree: the smallest AHU code over
/// its centroids.
pub fn canonical_code(t: &Graph) -> Result<String> {
    Ok(centroids(t)?
        .into_iter()
        .map(|c| rooted_code(t, c))
        .min()
        .expect("a tree has a centroid"))
}

/// Largest order accepted by [`connected_graphs`].
pub const MAX_GRAPH_ORDER: usize = 8;

/// Canonical adjacency code of a small graph: the largest upper-triangle
/// bit string over all relabelings that respect a degree-based vertex
/// refinement.
fn graph_code(adj: &[u64]) -> u64 {
    let n = adj.len();
    let deg: Vec<u32> = adj.iter().map(|m| m.count_ones()).collect();
    let key = |v: usize| {
        let mut nd: Vec<u32> = (0..n).filter(|&w| adj[v] >> w & 1 == 1).map(|w| deg[w]).collect();
        nd.sort_unstable();
        (deg[v], nd)
    };
    let keys: Vec<_> = (0..n).map(key).collect();
    let mut slots: Vec<usize> = (0..n).collect();
    slots.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    let slot_key: Vec<_> = slots.iter().map(|&v| keys[v].clone()).collect();

    let mut best = 0u64;
    let mut perm = Vec::with_capacity(n);
    let mut used = 0u64;
    fn go(
        pos: usize,
        adj: &[u64],
        keys: &[(u32, Vec<u32>)],
        slot_key: &[(u32, Vec<u32>)],
        perm: &mut Vec<usize>,
        used: &mut u64,
        best: &mut u64,
    ) {
        let n = adj.len();
        if pos == n {
            let mut code = 0u64;
            let mut bit = 0;
            for j in 1..n {
                for i in 0..j {
                    if adj[perm[i]] >> perm[j] & 1 == 1 {
                        code |= 1 << bit;
                    }
                    bit += 1;
                }
            }
            *best = (*best).max(code);
            return;
        }
        for v in 0..n {
            if *used >> v & 1 == 0 && keys[v] == slot_key[pos] {
                *used |= 1 << v;
                perm.push(v);
                go(pos + 1, adj, keys, slot_key, perm, used, best);
                perm.pop();
                *used &= !(1 << v);
            }
        }
    }
    go(0, adj, &keys, &slot_key, &mut perm, &mut used, &mut best);
    best
}

fn graph_from_code(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> bit & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::new(n, edges).expect("simple")
}

/// One graph per isomorphism class on `n` vertices (connected or not),
/// in increasing canonical-code order.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_GRAPH_ORDER {
        return Err(Error::resource(format!(
            "graph enumeration is capped at {MAX_GRAPH_ORDER} vertices, got {n}"
        )));
    }
    let mut level: Vec<Vec<u64>> = vec![Vec::new()];
    for k in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for adj in &level {
            for nbrs in 0..1u64 << (k - 1) {
                let mut a = adj.clone();
                for (v, m) in a.iter_mut().enumerate() {
                    if nbrs >> v & 1 == 1 {
                        *m |= 1 << (k - 1);
                    }
                }
                a.push(nbrs);
                if seen.insert(graph_code(&a)) {
                    next.push(a);
                }
            }
        }
        level = next;
    }
    let mut codes: Vec<u64> = level.iter().map(|a| graph_code(a)).collect();
    codes.sort_unstable();
    Ok(codes.into_iter().map(|c| graph_from_code(n, c)).collect())
}

/// One connected graph per isomorphism class on `n` vertices.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(all_graphs(n)?.into_iter().filter(Graph::is_connected).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_counts() {
        let all: Vec<usize> = (1..=6).map(|n| all_graphs(n).unwrap().len()).collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34, 156]);
        let conn: Vec<usize> = (1..=6).map(|n| connected_graphs(n).unwrap().len()).collect();
        assert_eq!(conn, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn centroid_of_path() {
        let p = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(centroids(&p).unwrap(), vec![1, 2]);
        let p = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(centroids(&p).unwrap(), vec![2]);
    }

    #[test]
    fn codes_ignore_labels() {
        let a = Graph::new(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let b = Graph::new(5, [(4, 3), (3, 2), (3, 0), (0, 1)]).unwrap();
        assert_eq!(canonical_code(&a).unwrap(), canonical_code(&b).unwrap());
        let c = Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_ne!(canonical_code(&a).unwrap(), canonical_code(&c).unwrap());
    }
}
