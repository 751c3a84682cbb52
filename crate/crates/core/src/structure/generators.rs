//! Deterministically labelled members of the graph families used throughout
//! the crate.

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::comb::is_initial_pair;

pub fn path_graph(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
}

/// Cycle on `n >= 3` vertices.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::contract("a cycle needs at least three vertices"));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `K_{1,leaves}` with centre 0.
pub fn star_graph(leaves: usize) -> Graph {
    Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star is simple")
}

pub fn complete_graph(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).expect("simple")
}

/// `k + 1` copies of `K_{1,3}` glued on a leaf: a centre 0 adjacent to the
/// branch vertices `1 + 3i`, each carrying leaves `2 + 3i` and `3 + 3i`.
/// Has `3k + 4` vertices.
pub fn gen_spider(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::contract("spider needs k >= 1"));
    }
    let mut edges = Vec::with_capacity(3 * k + 3);
    for i in 0..=k {
        let b = 1 + 3 * i;
        edges.extend([(0, b), (b, b + 1), (b, b + 2)]);
    }
    Graph::new(3 * k + 4, edges)
}

/// Two adjacent centres: leaves `0..a` on centre `a`, centre `a + 1`
/// carrying leaves `a + 2 .. a + 2 + b`. For `(3, 3)` this is the eight-vertex
/// example with every label shifted down by one.
pub fn gen_double_star(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::contract("double star needs at least one leaf per centre"));
    }
    let (c1, c2) = (a, a + 1);
    let edges = (0..a)
        .map(|l| (l, c1))
        .chain(std::iter::once((c1, c2)))
        .chain((0..b).map(|l| (c2, a + 2 + l)));
    Graph::new(a + b + 2, edges)
}

/// Complete binary tree of depth `d` in heap order: `2^(d+1) − 1` vertices,
/// children of `i` are `2i + 1` and `2i + 2`.
pub fn gen_complete_binary(d: u32) -> Result<Graph> {
    if d > 20 {
        return Err(Error::resource("binary tree depth is limited to 20"));
    }
    let n = (1usize << (d + 1)) - 1;
    Graph::new(n, (1..n).map(|i| ((i - 1) / 2, i)))
}

/// A comb built from a spine path and pendant teeth.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombSpec {
    /// Number of spine vertices, labelled `0..spine`.
    pub spine: usize,
    /// `(spine vertex, tooth length)`; tooth vertices are labelled after the
    /// spine in the order given.
    pub teeth: Vec<(usize, usize)>,
}

pub fn gen_comb(spec: &CombSpec) -> Result<Graph> {
    if spec.spine == 0 {
        return Err(Error::contract("comb spine must be nonempty"));
    }
    let mut edges: Vec<(usize, usize)> = (1..spec.spine).map(|i| (i - 1, i)).collect();
    let mut next = spec.spine;
    for &(anchor, len) in &spec.teeth {
        if anchor >= spec.spine || len == 0 {
            return Err(Error::contract(format!(
                "tooth ({anchor}, {len}) must hang from the spine with positive length"
            )));
        }
        let mut prev = anchor;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    let g = Graph::new(next, edges)?;
    if g.max_degree() > 3 {
        return Err(Error::contract("comb vertices have degree at most three"));
    }
    Ok(g)
}

/// What is attached between the two initial vertices of a pick comb.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Attachment {
    /// A path with this many new interior vertices joined to both ends.
    Path(usize),
    /// A triangle strip on this many vertices (edges `i ~ i+1`, `i ~ i+2`)
    /// whose last two vertices are identified with the initial pair.
    Zigzag(usize),
}

/// A comb with `attachment` joined at the initial pair `(u, v)`.
///
/// New vertices are labelled after the comb's vertices.
pub fn gen_pick_comb(comb: &CombSpec, pair: (usize, usize), attachment: Attachment) -> Result<Graph> {
    let base = gen_comb(comb)?;
    let (u, v) = pair;
    if u >= base.n() || v >= base.n() || !is_initial_pair(&base, u, v)? {
        return Err(Error::contract(format!(
            "({u}, {v}) is not a pair of initial vertices of the comb"
        )));
    }
    let mut edges: Vec<(usize, usize)> = base.edges().collect();
    let mut n = base.n();
    match attachment {
        Attachment::Path(len) => {
            let mut prev = u;
            for _ in 0..len {
                edges.push((prev, n));
                prev = n;
                n += 1;
            }
            edges.push((prev, v));
        }
        Attachment::Zigzag(m) => {
            if m < 3 {
                return Err(Error::contract("a triangle strip needs at least three vertices"));
            }
            let fresh = n;
            let label = |i: usize| match i {
                i if i == m - 2 => u,
                i if i == m - 1 => v,
                i => fresh + i,
            };
            for i in 0..m {
                for j in [i + 1, i + 2] {
                    if j < m {
                        edges.push((label(i), label(j)));
                    }
                }
            }
            n += m - 2;
        }
    }
    Graph::new(n, edges)
}
