use crate::error::Result;
use crate::graph::Graph;

/// Minimum number of vertex-disjoint paths covering a tree.
///
/// Leaves-up greedy: a vertex joins up to two children that are still path
/// ends, and is itself a path end for its parent while it has joined fewer
/// than two. The cover size is `n` minus the number of joins.
pub fn path_cover_number(t: &Graph) -> Result<u32> {
    t.require_tree("path_cover_number")?;
    let order = t.bfs_order(0);
    let mut parent = vec![usize::MAX; t.n()];
    for &u in &order {
        for &w in t.neighbors(u) {
            if w != parent[u] {
                parent[w] = u;
            }
        }
    }
    let mut open_end = vec![false; t.n()];
    let mut joins = 0;
    for &v in order.iter().rev() {
        let linked = t
            .neighbors(v)
            .iter()
            .filter(|&&c| c != parent[v] && open_end[c])
            .take(2)
            .count();
        joins += linked;
        open_end[v] = linked < 2;
    }
    Ok((t.n() - joins) as u32)
}
