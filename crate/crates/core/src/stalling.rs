//! An oracle strategy that stalls the player while few tokens are spent.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Picks announced components to return so that no force becomes available.
///
/// `frontier` lists filled vertices that touch unfilled vertices and
/// `announced` the announced components; at least `frontier.len() + 1`
/// components are required. A component with no frontier neighbour is
/// returned on its own. Otherwise the frontier/component incidence array is
/// reduced by repeatedly deleting a row with a single 1 together with that
/// 1's column; the surviving columns are returned. Each surviving row then
/// touches zero or at least two returned components, and each deleted row
/// touches none of them.
pub fn stalling_response(
    g: &Graph,
    frontier: &[usize],
    announced: &[VertexSet],
) -> Result<Vec<VertexSet>> {
    if announced.len() <= frontier.len() {
        return Err(Error::contract(format!(
            "stalling needs more announced components ({}) than frontier vertices ({})",
            announced.len(),
            frontier.len()
        )));
    }
    let incidence: Vec<Vec<bool>> = frontier
        .iter()
        .map(|&f| {
            announced
                .iter()
                .map(|c| g.neighbors(f).iter().any(|&w| c.contains(w)))
                .collect()
        })
        .collect();

    if let Some(j) = (0..announced.len()).find(|&j| incidence.iter().all(|row| !row[j])) {
        return Ok(vec![announced[j].clone()]);
    }

    let mut row_alive = vec![true; frontier.len()];
    let mut col_alive = vec![true; announced.len()];
    loop {
        let single = (0..frontier.len()).find_map(|i| {
            if !row_alive[i] {
                return None;
            }
            let mut hits = (0..announced.len()).filter(|&j| col_alive[j] && incidence[i][j]);
            match (hits.next(), hits.next()) {
                (Some(j), None) => Some((i, j)),
                _ => None,
            }
        });
        match single {
            Some((i, j)) => {
                row_alive[i] = false;
                col_alive[j] = false;
            }
            None => break,
        }
    }

    Ok(announced
        .iter()
        .zip(&col_alive)
        .filter(|(_, &alive)| alive)
        .map(|(c, _)| c.clone())
        .collect())
}

/// Filled vertices with at least one unfilled neighbour, ascending.
pub fn frontier(g: &Graph, filled: &VertexSet) -> Vec<usize> {
    filled
        .iter()
        .filter(|&v| g.neighbors(v).iter().any(|&w| !filled.contains(w)))
        .collect()
}
