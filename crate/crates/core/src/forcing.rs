//! Connected components, the filling rule and forts.
//!
//! The public functions work on [`VertexSet`]s of any size. The solvers use
//! the word-sized [`Masks`] view, which implements the same rules on `u64`
//! bitmasks for graphs with at most 64 vertices.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Upper bound on `n` for [`find_unfilled_fort`].
pub const FORT_SEARCH_LIMIT: usize = 16;

/// Connected components of `g[active]`, ordered by smallest member.
pub fn components(g: &Graph, active: &VertexSet) -> Vec<VertexSet> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in active.iter() {
        if seen[start] {
            continue;
        }
        let mut comp = VertexSet::new(n);
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(u) = stack.pop() {
            comp.insert(u);
            for &w in g.neighbors(u) {
                if !seen[w] && active.contains(w) {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// Applies the filling rule inside `g[filled ∪ active]` until nothing changes.
///
/// Vertices outside `filled ∪ active` are invisible: they neither count as
/// unfilled neighbours nor perform forces. Returns the final filled set.
pub fn induced_closure(g: &Graph, filled: &VertexSet, active: &VertexSet) -> Result<VertexSet> {
    if !filled.is_disjoint(active) {
        return Err(Error::contract("filled and active sets overlap"));
    }
    let n = g.n();
    let mut result = filled.clone();
    // unfilled[v]: number of neighbours of v that are still unfilled and active
    let mut unfilled = vec![0usize; n];
    let mut queue = Vec::new();
    for v in filled.iter() {
        unfilled[v] = g.neighbors(v).iter().filter(|&&w| active.contains(w)).count();
        if unfilled[v] == 1 {
            queue.push(v);
        }
    }
    while let Some(v) = queue.pop() {
        if unfilled[v] != 1 {
            continue;
        }
        let Some(&u) = g
            .neighbors(v)
            .iter()
            .find(|&&w| active.contains(w) && !result.contains(w))
        else {
            continue;
        };
        result.insert(u);
        unfilled[u] = g
            .neighbors(u)
            .iter()
            .filter(|&&w| active.contains(w) && !result.contains(w))
            .count();
        if unfilled[u] == 1 {
            queue.push(u);
        }
        for &w in g.neighbors(u) {
            if result.contains(w) && w != u {
                unfilled[w] -= 1;
                if unfilled[w] == 1 {
                    queue.push(w);
                }
            }
        }
    }
    Ok(result)
}

/// The filling rule applied to the whole graph.
pub fn closure(g: &Graph, filled: &VertexSet) -> VertexSet {
    induced_closure(g, filled, &filled.complement()).expect("complement is disjoint")
}

/// A fort: `g[w]` has at most two components and every vertex outside `w`
/// has zero or at least two neighbours in `w`.
pub fn is_fort(g: &Graph, w: &VertexSet) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::contract("a fort must be nonempty"));
    }
    if components(g, w).len() > 2 {
        return Ok(false);
    }
    let outside_ok = (0..g.n())
        .filter(|&v| !w.contains(v))
        .all(|v| g.neighbors(v).iter().filter(|&&x| w.contains(x)).count() != 1);
    Ok(outside_ok)
}

/// Some fort disjoint from `filled`, smallest first, or `None`.
///
/// Exhaustive; refuses graphs with more than [`FORT_SEARCH_LIMIT`] vertices.
pub fn find_unfilled_fort(g: &Graph, filled: &VertexSet) -> Result<Option<VertexSet>> {
    if g.n() > FORT_SEARCH_LIMIT {
        return Err(Error::resource(format!(
            "fort search is exhaustive and limited to {FORT_SEARCH_LIMIT} vertices, got {}",
            g.n()
        )));
    }
    let masks = Masks::new(g).expect("n <= 64");
    let unfilled = masks.full & !filled.to_mask().expect("n <= 64");
    let mut candidates: Vec<u64> = submasks(unfilled).filter(|&m| m != 0).collect();
    candidates.sort_by_key(|&m| (m.count_ones(), m));
    Ok(candidates
        .into_iter()
        .find(|&m| masks.is_fort(m))
        .map(|m| VertexSet::from_mask(g.n(), m)))
}

/// All submasks of `mask`, including 0 and `mask` itself.
pub(crate) fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & mask) };
        Some(cur)
    })
}

/// Iterator over set bit positions of a word.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

/// Bitmask view of a graph with at most 64 vertices.
#[derive(Clone, Debug)]
pub(crate) struct Masks {
    pub adj: Vec<u64>,
    pub full: u64,
}

impl Masks {
    pub fn new(g: &Graph) -> Option<Self> {
        let adj = g.adjacency_masks()?;
        let full = if g.n() == 64 { !0 } else { (1u64 << g.n()) - 1 };
        Some(Masks { adj, full })
    }

    /// Components of the subgraph induced by `active`, ordered by lowest bit.
    pub fn components(&self, active: u64) -> Vec<u64> {
        let mut rest = active;
        let mut out = Vec::new();
        while rest != 0 {
            let mut comp = rest & rest.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let mut grow = 0;
                for v in bits(frontier) {
                    grow |= self.adj[v];
                }
                frontier = grow & active & !comp;
                comp |= frontier;
            }
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    /// Filling rule restricted to `filled | active`.
    pub fn closure(&self, filled: u64, active: u64) -> u64 {
        let mut f = filled;
        loop {
            let before = f;
            for v in bits(f) {
                let open = self.adj[v] & active & !f;
                if open.count_ones() == 1 {
                    f |= open;
                }
            }
            if f == before {
                return f;
            }
        }
    }

    /// First available single force `(from, to)` in the whole graph.
    pub fn first_force(&self, filled: u64) -> Option<(usize, usize)> {
        bits(filled).find_map(|v| {
            let open = self.adj[v] & !filled & self.full;
            (open.count_ones() == 1).then(|| (v, open.trailing_zeros() as usize))
        })
    }

    /// Positive semidefinite closure: a filled vertex forces `u` when `u` is
    /// its only unfilled neighbour inside `u`'s unfilled component.
    pub fn psd_closure(&self, filled: u64) -> u64 {
        let mut f = filled;
        loop {
            let before = f;
            for comp in self.components(self.full & !f) {
                for v in bits(f) {
                    let open = self.adj[v] & comp & !f;
                    if open.count_ones() == 1 {
                        f |= open;
                    }
                }
            }
            if f == before {
                return f;
            }
        }
    }

    pub fn is_fort(&self, w: u64) -> bool {
        if w == 0 || self.components(w).len() > 2 {
            return false;
        }
        bits(self.full & !w).all(|v| (self.adj[v] & w).count_ones() != 1)
    }
}
