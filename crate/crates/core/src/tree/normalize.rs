use crate::error::{Error, Result};
use crate::forcing::{closure, components, induced_closure};
use crate::graph::Graph;
use crate::solver::{GameSolver, SolverConfig, Q};
use crate::vertex_set::VertexSet;

/// Trees up to this size let the oracle pick responses by exact game value.
pub const EXACT_ADVERSARY_LIMIT: usize = 20;

/// How the oracle answers an announcement during normalisation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Adversary {
    /// Choose the response with the largest remaining one-oracle game value.
    Exact,
    /// Choose the response leaving the most vertices unfilled.
    MostUnfilled,
}

/// Advances a one-oracle game on a tree using free moves only, until either
/// everything is filled or exactly one filled vertex touches two or more
/// unfilled vertices and no force is available.
///
/// The player announces the first pair of unfilled components that share no
/// filled neighbour; every response to such a pair fills something. The
/// oracle is [`Adversary::Exact`] for trees up to
/// [`EXACT_ADVERSARY_LIMIT`] vertices and [`Adversary::MostUnfilled`] above.
pub fn normalize_tree_state(t: &Graph, filled: &VertexSet) -> Result<VertexSet> {
    let adversary = if t.n() <= EXACT_ADVERSARY_LIMIT {
        Adversary::Exact
    } else {
        Adversary::MostUnfilled
    };
    normalize_tree_state_with(t, filled, adversary)
}

pub fn normalize_tree_state_with(
    t: &Graph,
    filled: &VertexSet,
    adversary: Adversary,
) -> Result<VertexSet> {
    t.require_tree("normalize_tree_state")?;
    if filled.is_empty() {
        return Err(Error::contract("normalisation needs a filled vertex"));
    }
    if filled.universe() != t.n() {
        return Err(Error::contract("filled set is over a different vertex range"));
    }
    let mut solver = match adversary {
        Adversary::Exact => Some(GameSolver::new(t, SolverConfig::new(Q::Finite(1)))?),
        Adversary::MostUnfilled => None,
    };
    let mut state = closure(t, filled);
    while !state.is_full() {
        let comps = components(t, &state.complement());
        let touching: Vec<VertexSet> = comps
            .iter()
            .map(|c| {
                VertexSet::from_vertices(
                    t.n(),
                    c.iter()
                        .flat_map(|v| t.neighbors(v).iter().copied())
                        .filter(|&w| state.contains(w)),
                )
            })
            .collect();
        let pair = (0..comps.len()).find_map(|i| {
            (i + 1..comps.len())
                .find(|&j| touching[i].is_disjoint(&touching[j]))
                .map(|j| (i, j))
        });
        let Some((i, j)) = pair else { break };

        let responses = [
            comps[i].clone(),
            comps[j].clone(),
            comps[i].union(&comps[j]),
        ];
        let mut chosen: Option<(u32, VertexSet)> = None;
        for returned in &responses {
            let next = closure(t, &induced_closure(t, &state, returned)?);
            let score = match solver.as_mut() {
                Some(s) => s.value(&next)?,
                None => (t.n() - next.len()) as u32,
            };
            if chosen.as_ref().is_none_or(|(best, _)| score > *best) {
                chosen = Some((score, next));
            }
        }
        let (_, next) = chosen.expect("three responses");
        debug_assert!(next.len() > state.len());
        state = next;
    }
    Ok(state)
}

/// All filled, or no force available and exactly one filled vertex with at
/// least two unfilled neighbours.
pub fn is_normalized(t: &Graph, filled: &VertexSet) -> bool {
    if filled.is_full() {
        return true;
    }
    let open = |v: usize| t.neighbors(v).iter().filter(|&&w| !filled.contains(w)).count();
    let counts: Vec<usize> = filled.iter().map(open).collect();
    !counts.contains(&1) && counts.iter().filter(|&&c| c >= 2).count() == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_star_from_one_leaf_each_side() {
        let g = Graph::new(8, [(0, 3), (1, 3), (2, 3), (3, 4), (4, 5), (4, 6), (4, 7)]).unwrap();
        let start = VertexSet::from_vertices(8, [0, 5]);
        for adv in [Adversary::Exact, Adversary::MostUnfilled] {
            let out = normalize_tree_state_with(&g, &start, adv).unwrap();
            assert!(is_normalized(&g, &out));
            assert!(!out.is_full());
            let centers_open = [3, 4]
                .iter()
                .filter(|&&c| g.neighbors(c).iter().filter(|&&w| !out.contains(w)).count() >= 2)
                .count();
            assert_eq!(centers_open, 1);
        }
    }

    #[test]
    fn empty_start_is_contract_error() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        assert!(normalize_tree_state(&g, &VertexSet::new(2)).is_err());
    }
}
