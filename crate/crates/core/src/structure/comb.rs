use crate::error::{Error, Result};
use crate::graph::Graph;

/// A pendant path hanging off a spine vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tooth {
    pub anchor: usize,
    /// Tooth vertices, starting next to the anchor.
    pub vertices: Vec<usize>,
}

/// Structure of a comb: a tree of maximum degree three whose degree-three
/// vertices all lie on one path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombDecomposition {
    /// Path between the two outermost degree-three vertices, or the whole
    /// tree when it is a path.
    pub spine: Vec<usize>,
    pub teeth: Vec<Tooth>,
    /// Every pair `(u, v)`, `u < v`, whose connecting path has all
    /// degree-three vertices as interior vertices.
    pub initial_pairs: Vec<(usize, usize)>,
}

/// Parent pointers of a BFS tree rooted at `root`.
fn parents_from(t: &Graph, root: usize) -> Vec<usize> {
    let mut parent = vec![usize::MAX; t.n()];
    parent[root] = root;
    for u in t.bfs_order(root) {
        for &w in t.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
            }
        }
    }
    parent
}

fn path_to(parent: &[usize], root: usize, target: usize) -> Vec<usize> {
    let mut path = vec![target];
    let mut cur = target;
    while cur != root {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    path
}

fn farthest(t: &Graph, from: usize, among: &[usize]) -> usize {
    let mut dist = vec![usize::MAX; t.n()];
    dist[from] = 0;
    for u in t.bfs_order(from) {
        for &w in t.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
            }
        }
    }
    *among.iter().max_by_key(|&&v| (dist[v], std::cmp::Reverse(v))).expect("nonempty")
}

/// Whether every degree-three vertex of `t` is an interior vertex of the
/// `u`–`v` path.
pub fn is_initial_pair(t: &Graph, u: usize, v: usize) -> Result<bool> {
    t.require_tree("is_initial_pair")?;
    if u == v {
        return Ok(false);
    }
    let parent = parents_from(t, u);
    let path = path_to(&parent, u, v);
    let mut interior = vec![false; t.n()];
    for &w in &path[1..path.len() - 1] {
        interior[w] = true;
    }
    Ok((0..t.n()).filter(|&w| t.degree(w) >= 3).all(|w| interior[w]))
}

/// The comb structure of `t`, or `None` if `t` is not a comb.
pub fn comb_decompose(t: &Graph) -> Result<Option<CombDecomposition>> {
    t.require_tree("comb_decompose")?;
    if t.max_degree() > 3 {
        return Ok(None);
    }
    let branch: Vec<usize> = (0..t.n()).filter(|&v| t.degree(v) == 3).collect();

    let spine = if branch.is_empty() {
        let ends: Vec<usize> = (0..t.n()).filter(|&v| t.degree(v) <= 1).collect();
        let start = ends[0];
        path_to(&parents_from(t, start), start, *ends.last().unwrap())
    } else {
        let a = farthest(t, branch[0], &branch);
        let b = farthest(t, a, &branch);
        let (a, b) = (a.min(b), a.max(b));
        let spine = path_to(&parents_from(t, a), a, b);
        let mut on = vec![false; t.n()];
        spine.iter().for_each(|&v| on[v] = true);
        if branch.iter().any(|&v| !on[v]) {
            return Ok(None);
        }
        spine
    };

    let mut on_spine = vec![false; t.n()];
    spine.iter().for_each(|&v| on_spine[v] = true);
    let mut teeth = Vec::new();
    for &s in &spine {
        for &first in t.neighbors(s) {
            if on_spine[first] {
                continue;
            }
            let mut vertices = vec![first];
            let (mut prev, mut cur) = (s, first);
            while let Some(&next) = t.neighbors(cur).iter().find(|&&w| w != prev) {
                vertices.push(next);
                prev = cur;
                cur = next;
            }
            teeth.push(Tooth { anchor: s, vertices });
        }
    }

    let mut initial_pairs = Vec::new();
    for u in 0..t.n() {
        let parent = parents_from(t, u);
        for v in u + 1..t.n() {
            let path = path_to(&parent, u, v);
            let interior_branches = path[1..path.len() - 1]
                .iter()
                .filter(|&&w| t.degree(w) == 3)
                .count();
            if interior_branches == branch.len() {
                initial_pairs.push((u, v));
            }
        }
    }

    Ok(Some(CombDecomposition {
        spine,
        teeth,
        initial_pairs,
    }))
}

impl CombDecomposition {
    pub fn is_initial_pair(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        self.initial_pairs.binary_search(&key).is_ok()
    }
}

pub(crate) fn require_connected(g: &Graph, op: &str) -> Result<()> {
    if g.n() > 0 && g.is_connected() {
        Ok(())
    } else {
        Err(Error::contract(format!("{op} requires a connected graph")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::generators::{gen_spider, path_graph, star_graph};

    #[test]
    fn star_is_comb_with_leaf_pairs() {
        let d = comb_decompose(&star_graph(3)).unwrap().unwrap();
        assert_eq!(d.spine, vec![0]);
        assert_eq!(d.teeth.len(), 3);
        assert_eq!(d.initial_pairs, vec![(1, 2), (1, 3), (2, 3)]);
        assert!(comb_decompose(&star_graph(4)).unwrap().is_none());
    }

    #[test]
    fn spider_one_is_comb() {
        let g = gen_spider(1).unwrap();
        let d = comb_decompose(&g).unwrap().unwrap();
        assert_eq!(d.spine, vec![1, 0, 4]);
        assert_eq!(d.initial_pairs, vec![(2, 5), (2, 6), (3, 5), (3, 6)]);
        assert!(comb_decompose(&gen_spider(2).unwrap()).unwrap().is_none());
    }

    #[test]
    fn path_is_comb_with_every_pair() {
        let d = comb_decompose(&path_graph(4)).unwrap().unwrap();
        assert_eq!(d.spine, vec![0, 1, 2, 3]);
        assert!(d.teeth.is_empty());
        assert_eq!(d.initial_pairs.len(), 6);
    }

    #[test]
    fn off_path_branch_vertex() {
        // spine 0-1-2-3-4 with teeth at 1 and 3, and a branch vertex 6 hanging off 2
        let g = Graph::new(
            10,
            [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (3, 9), (2, 6), (6, 7), (6, 8)],
        )
        .unwrap();
        assert!(comb_decompose(&g).unwrap().is_none());
    }
}
