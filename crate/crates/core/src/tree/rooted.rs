use crate::error::{Error, Result};
use crate::graph::Graph;

/// A tree together with a chosen root.
#[derive(Clone, Debug)]
pub struct RootedTree<'g> {
    tree: &'g Graph,
    root: usize,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    /// Breadth-first order from the root.
    order: Vec<usize>,
}

impl<'g> RootedTree<'g> {
    pub fn new(tree: &'g Graph, root: usize) -> Result<Self> {
        tree.require_tree("rooting")?;
        if root >= tree.n() {
            return Err(Error::contract(format!("root {root} is not a vertex")));
        }
        let order = tree.bfs_order(root);
        let mut parent = vec![None; tree.n()];
        let mut children = vec![Vec::new(); tree.n()];
        let mut seen = vec![false; tree.n()];
        seen[root] = true;
        for &u in &order {
            for &w in tree.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(u);
                    children[u].push(w);
                }
            }
        }
        Ok(RootedTree {
            tree,
            root,
            parent,
            children,
            order,
        })
    }

    pub fn tree(&self) -> &'g Graph {
        self.tree
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// Vertices in breadth-first order from the root.
    pub fn order(&self) -> &[usize] {
        &self.order
    }
}

/// Per-vertex costs `f(w)` for a rooted tree: the fewest further tokens
/// needed in the one-oracle game once only the descendants of `w` are
/// unfilled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FTable {
    pub root: usize,
    pub values: Vec<u32>,
}

impl FTable {
    pub fn at(&self, v: usize) -> u32 {
        self.values[v]
    }

    pub fn root_value(&self) -> u32 {
        self.values[self.root]
    }
}

/// Combines child costs: with `c_0 ≥ c_1 ≥ …` sorted descending, the cost is
/// `max_i (i + c_i)`, or 0 with no children.
pub fn combine_children(child_values: &mut [u32]) -> u32 {
    child_values.sort_unstable_by(|a, b| b.cmp(a));
    child_values
        .iter()
        .enumerate()
        .map(|(i, &c)| i as u32 + c)
        .max()
        .unwrap_or(0)
}

pub fn f_values(t: &RootedTree<'_>) -> FTable {
    let mut values = vec![0u32; t.tree.n()];
    let mut scratch = Vec::new();
    for &w in t.order.iter().rev() {
        scratch.clear();
        scratch.extend(t.children[w].iter().map(|&c| values[c]));
        values[w] = combine_children(&mut scratch);
    }
    FTable {
        root: t.root,
        values,
    }
}

/// `f` evaluated at the root, for every choice of root.
pub fn root_values(t: &Graph) -> Result<Vec<u32>> {
    t.require_tree("root_values")?;
    let n = t.n();
    let mut out = Vec::with_capacity(n);
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    let mut values = vec![0u32; n];
    let mut scratch = Vec::new();
    for root in 0..n {
        order.clear();
        order.push(root);
        parent[root] = root;
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in t.neighbors(u) {
                if w != parent[u] {
                    parent[w] = u;
                    order.push(w);
                }
            }
        }
        for &w in order.iter().rev() {
            scratch.clear();
            scratch.extend(
                t.neighbors(w)
                    .iter()
                    .filter(|&&c| c != parent[w])
                    .map(|&c| values[c]),
            );
            values[w] = combine_children(&mut scratch);
        }
        out.push(values[root]);
    }
    Ok(out)
}

/// The one-oracle forcing number of a tree, `max_v f_{T,v}(v)`; 1 on trees
/// with at most two vertices.
pub fn z1_tree(t: &Graph) -> Result<u32> {
    t.require_tree("z1_tree")?;
    if t.n() <= 2 {
        return Ok(1);
    }
    Ok(root_values(t)?.into_iter().max().expect("nonempty"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn path_rooted_at_endpoint() {
        let g = path(5);
        let f = f_values(&RootedTree::new(&g, 0).unwrap());
        assert_eq!(f.values, vec![0; 5]);
        assert_eq!(root_values(&g).unwrap(), vec![0, 1, 1, 1, 0]);
    }

    #[test]
    fn binary_depth_two() {
        let g = Graph::new(7, (1..7).map(|i| ((i - 1) / 2, i))).unwrap();
        let f = f_values(&RootedTree::new(&g, 0).unwrap());
        assert_eq!(f.root_value(), 2);
        assert_eq!(f.at(1), 1);
        assert_eq!(f.at(6), 0);
    }

    #[test]
    fn combine_is_order_invariant() {
        assert_eq!(combine_children(&mut [0, 3, 1, 3]), 4);
        assert_eq!(combine_children(&mut [3, 3, 1, 0]), 4);
        assert_eq!(combine_children(&mut []), 0);
    }

    #[test]
    fn rejects_non_trees() {
        let c = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(matches!(z1_tree(&c), Err(Error::Contract(_))));
        assert!(RootedTree::new(&Graph::empty(2), 0).is_err());
        assert_eq!(z1_tree(&Graph::empty(1)).unwrap(), 1);
    }
}
