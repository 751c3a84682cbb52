//! Non-isomorphic free trees.
//!
//! Every free tree has either one centroid, whose branches all have fewer
//! than `n / 2` vertices, or two adjacent centroids splitting the tree into
//! two halves of `n / 2` vertices. Unicentroidal trees are generated as
//! multisets of rooted branches of bounded size, bicentroidal ones as
//! unordered pairs of rooted halves. Rooted trees themselves are multisets of
//! smaller rooted trees, each generated once in a canonical order, so every
//! isomorphism class appears exactly once.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`enumerate_trees`].
pub const MAX_TREE_ORDER: usize = 20;

/// All rooted trees up to a size, indexed by size then generation order.
struct RootedCatalog {
    size: Vec<usize>,
    children: Vec<Vec<usize>>,
    /// `first[s]` is the index of the first rooted tree with `s` vertices.
    first: Vec<usize>,
}

impl RootedCatalog {
    fn new(max_size: usize) -> Self {
        let mut cat = RootedCatalog {
            size: Vec::new(),
            children: Vec::new(),
            first: vec![0; max_size + 2],
        };
        for s in 1..=max_size {
            cat.first[s] = cat.size.len();
            let mut found = Vec::new();
            cat.multisets(s - 1, cat.first[s], &mut Vec::new(), &mut |m| found.push(m.to_vec()));
            for kids in found {
                cat.size.push(s);
                cat.children.push(kids);
            }
        }
        cat.first[max_size + 1] = cat.size.len();
        cat
    }

    /// Non-increasing index sequences below `hi` whose sizes sum to
    /// `remaining`.
    fn multisets(&self, remaining: usize, hi: usize, cur: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
        if remaining == 0 {
            emit(cur);
            return;
        }
        let fits = self.end_of_size(remaining).min(hi);
        for idx in (0..fits).rev() {
            cur.push(idx);
            self.multisets(remaining - self.size[idx], idx + 1, cur, emit);
            cur.pop();
        }
    }

    /// One past the last index with size at most `s`.
    fn end_of_size(&self, s: usize) -> usize {
        let s = s.min(self.first.len() - 2);
        self.first[s + 1]
    }

    /// Appends the tree `idx` in preorder, writing parent labels.
    fn emit(&self, idx: usize, parent: u8, out: &mut Vec<u8>) {
        let me = out.len() as u8;
        out.push(parent);
        for &c in &self.children[idx] {
            self.emit(c, me, out);
        }
    }
}

/// Representatives of the isomorphism classes of free trees on `n`
/// vertices, stored as parent arrays.
#[derive(Clone, Debug)]
pub struct FreeTrees {
    n: usize,
    /// Row-major parent arrays, `n` entries per tree; entry 0 is the root.
    parents: Vec<u8>,
}

impl FreeTrees {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.parents.len().checked_div(self.n).unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, i: usize) -> Graph {
        tree_from_parents(&self.parents[i * self.n..(i + 1) * self.n])
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = Graph> + '_ {
        (0..self.len()).map(move |i| self.get(i))
    }

    pub(crate) fn parent_rows(&self) -> std::slice::ChunksExact<'_, u8> {
        self.parents.chunks_exact(self.n)
    }
}

pub(crate) fn tree_from_parents(row: &[u8]) -> Graph {
    Graph::new(row.len(), (1..row.len()).map(|i| (row[i] as usize, i))).expect("valid tree")
}

/// One tree per isomorphism class on `n` vertices.
pub fn enumerate_trees(n: usize) -> Result<FreeTrees> {
    enumerate_trees_capped(n, MAX_TREE_ORDER)
}

pub fn enumerate_trees_capped(n: usize, cap: usize) -> Result<FreeTrees> {
    if n == 0 {
        return Err(Error::contract("trees need at least one vertex"));
    }
    if n > cap || n > u8::MAX as usize {
        return Err(Error::resource(format!(
            "tree enumeration is capped at {cap} vertices, got {n}"
        )));
    }
    let half = n / 2;
    let cat = RootedCatalog::new(half.max(1));
    let mut parents = Vec::new();

    // one centroid: branches of at most (n - 1) / 2 vertices
    let branch_cap = (n - 1) / 2;
    let mut row = Vec::with_capacity(n);
    if n == 1 {
        parents.push(0);
    } else if branch_cap > 0 {
        let hi = cat.end_of_size(branch_cap);
        cat.multisets(n - 1, hi, &mut Vec::new(), &mut |branches| {
            row.clear();
            row.push(0);
            for &b in branches {
                cat.emit(b, 0, &mut row);
            }
            parents.extend_from_slice(&row);
        });
    }
    // two centroids joined by an edge; the second half's root lands at
    // label `half` with parent 0
    if n.is_multiple_of(2) {
        let (lo, hi) = (cat.first[half], cat.first[half + 1]);
        for i in lo..hi {
            for j in i..hi {
                row.clear();
                cat.emit(i, 0, &mut row);
                cat.emit(j, 0, &mut row);
                parents.extend_from_slice(&row);
            }
        }
    }
    Ok(FreeTrees { n, parents })
}

