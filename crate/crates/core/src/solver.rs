//! Exact game values for the classic, positive semidefinite and q-oracle
//! forcing games.
//!
//! [`GameSolver`] evaluates the minimax recursion over filled sets. A state
//! `F` has value 0 once every vertex is filled; otherwise the player picks
//! the cheapest of
//!
//! * a token move, `1 + V(F ∪ {v})`;
//! * a free force, `V(F ∪ {u})`;
//! * an oracle announcement of at least `q + 1` unfilled components, worth
//!   the maximum of `V(F')` over the oracle's nonempty responses, where `F'`
//!   is the filling rule applied inside `F` plus the returned components.
//!
//! An announcement is admissible only when every response strictly enlarges
//! `F`. A response that fills nothing leaves the player in the same state, so
//! excluding such announcements does not change any value and keeps the
//! recursion well founded.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::forcing::{bits, components, Masks};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Oracle parameter: a finite `q`, or infinity for the classic game.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Q {
    Finite(u32),
    Infinite,
}

impl Q {
    /// Minimum number of components an announcement must contain.
    pub fn announcement_size(self) -> Option<usize> {
        match self {
            Q::Finite(q) => Some(q as usize + 1),
            Q::Infinite => None,
        }
    }
}

impl From<u32> for Q {
    fn from(q: u32) -> Self {
        Q::Finite(q)
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Q::Finite(q) => write!(f, "{q}"),
            Q::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Q {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(Q::Infinite),
            t => t
                .parse::<u32>()
                .map(Q::Finite)
                .map_err(|_| Error::parse(0, format!("expected a non-negative integer or `inf`, got `{t}`"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolverConfig {
    pub q: Q,
    /// Maximum number of memoised states.
    pub state_limit: usize,
    /// Maximum number of unfilled components for which oracle announcements
    /// are enumerated.
    pub announcement_limit: usize,
    /// Jump straight to the filling-rule closure instead of enumerating
    /// single forces. Game values are monotone under inclusion, so this
    /// keeps the value.
    pub closure_jump: bool,
    /// Only announce exactly `q + 1` components. Adding components to an
    /// announcement only widens the oracle's choice, so larger announcements
    /// never lower the value; this flag turns off their enumeration.
    pub minimal_announcements: bool,
}

impl SolverConfig {
    pub fn new(q: Q) -> Self {
        SolverConfig {
            q,
            state_limit: 1 << 22,
            announcement_limit: 24,
            closure_jump: true,
            minimal_announcements: true,
        }
    }

    /// Enumerates every single force and every announcement of at least
    /// `q + 1` components.
    pub fn literal(q: Q) -> Self {
        SolverConfig {
            closure_jump: false,
            minimal_announcements: false,
            ..Self::new(q)
        }
    }

    pub fn with_state_limit(mut self, limit: usize) -> Self {
        self.state_limit = limit;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.state_limit == 0 || self.announcement_limit == 0 {
            return Err(Error::contract("solver limits must be positive"));
        }
        Ok(())
    }
}

/// A player move, as reported for the optimal first move of a state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Move {
    /// Every vertex is already filled.
    Done,
    Token(usize),
    Force { from: usize, to: usize },
    /// Announce these unfilled components to the oracle.
    Announce(Vec<VertexSet>),
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Done => f.write_str("done"),
            Move::Token(v) => write!(f, "token {v}"),
            Move::Force { from, to } => write!(f, "force {from} -> {to}"),
            Move::Announce(comps) => {
                f.write_str("announce")?;
                for c in comps {
                    write!(f, " {c:?}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum MoveTag {
    Done,
    Token(u8),
    Force(u8, u8),
    Announce(u64),
}

#[derive(Clone, Copy, Debug)]
struct Entry {
    value: u32,
    best: MoveTag,
}

/// Exact values of the states visited by a [`GameSolver`], keyed by filled
/// set.
#[derive(Clone, Debug, Default)]
pub struct MemoTable {
    entries: HashMap<u64, Entry>,
}

impl MemoTable {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn value(&self, filled: u64) -> Option<u32> {
        self.entries.get(&filled).map(|e| e.value)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.entries.iter().map(|(&k, e)| (k, e.value))
    }

    /// Pairs `(F, F')` with `F ⊂ F'` but `V(F) < V(F')`.
    pub fn monotonicity_violations(&self) -> Vec<(u64, u64)> {
        let mut out = Vec::new();
        for (&a, ea) in &self.entries {
            for (&b, eb) in &self.entries {
                if a != b && a & !b == 0 && ea.value < eb.value {
                    out.push((a, b));
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// One admissible announcement and the filled sets its responses lead to.
struct Announcement {
    union: u64,
    outcomes: Vec<u64>,
}

/// Memoised minimax solver for one connected or disconnected graph on at
/// most 64 vertices.
pub struct GameSolver<'g> {
    graph: &'g Graph,
    config: SolverConfig,
    masks: Masks,
    memo: MemoTable,
    free_memo: HashMap<u64, bool>,
}

impl<'g> GameSolver<'g> {
    pub fn new(graph: &'g Graph, config: SolverConfig) -> Result<Self> {
        config.validate()?;
        let masks = Masks::new(graph).ok_or_else(|| {
            Error::resource(format!(
                "game search supports at most 64 vertices, got {}",
                graph.n()
            ))
        })?;
        Ok(GameSolver {
            graph,
            config,
            masks,
            memo: MemoTable::default(),
            free_memo: HashMap::new(),
        })
    }

    pub fn config(&self) -> &SolverConfig {
        &self.config
    }

    pub fn memo(&self) -> &MemoTable {
        &self.memo
    }

    /// Minimum further tokens that guarantee a win from `filled`.
    pub fn value(&mut self, filled: &VertexSet) -> Result<u32> {
        let f = self.mask_of(filled)?;
        self.solve(f)
    }

    /// Value and an optimal first move from `filled`.
    ///
    /// Ties prefer free moves (forces, then announcements) over tokens, then
    /// the lowest vertex or the lowest announcement mask.
    pub fn best_move(&mut self, filled: &VertexSet) -> Result<(u32, Move)> {
        let f = self.mask_of(filled)?;
        let value = self.solve(f)?;
        let best = if f == self.masks.full {
            MoveTag::Done
        } else {
            self.memo.entries[&f].best
        };
        let n = self.graph.n();
        let mv = match best {
            MoveTag::Done => Move::Done,
            MoveTag::Token(v) => Move::Token(v as usize),
            MoveTag::Force(a, b) => Move::Force {
                from: a as usize,
                to: b as usize,
            },
            MoveTag::Announce(union) => Move::Announce(
                self.masks
                    .components(self.masks.full & !f)
                    .into_iter()
                    .filter(|c| c & union != 0)
                    .map(|c| VertexSet::from_mask(n, c))
                    .collect(),
            ),
        };
        Ok((value, mv))
    }

    /// Whether the player can finish from `filled` without spending another
    /// token, using only forces and admissible announcements.
    pub fn wins_without_tokens(&mut self, filled: &VertexSet) -> Result<bool> {
        let f = self.mask_of(filled)?;
        self.free_win(f)
    }

    fn mask_of(&self, filled: &VertexSet) -> Result<u64> {
        if filled.universe() != self.graph.n() {
            return Err(Error::contract("filled set is over a different vertex range"));
        }
        Ok(filled.to_mask().expect("n <= 64"))
    }

    fn solve(&mut self, f: u64) -> Result<u32> {
        if f == self.masks.full {
            return Ok(0);
        }
        if let Some(e) = self.memo.entries.get(&f) {
            return Ok(e.value);
        }
        if self.memo.entries.len() >= self.config.state_limit {
            return Err(Error::resource(format!(
                "state limit of {} exceeded",
                self.config.state_limit
            )));
        }

        let mut best = u32::MAX;
        let mut tag = MoveTag::Done;

        if self.config.closure_jump {
            let closed = self.masks.closure(f, self.masks.full & !f);
            if closed != f {
                let value = self.solve(closed)?;
                let (a, b) = self.masks.first_force(f).expect("closure grew");
                self.store(f, value, MoveTag::Force(a as u8, b as u8));
                return Ok(value);
            }
        } else {
            for v in bits(f) {
                let open = self.masks.adj[v] & !f;
                if open.count_ones() == 1 {
                    let value = self.solve(f | open)?;
                    if value < best {
                        best = value;
                        tag = MoveTag::Force(v as u8, open.trailing_zeros() as u8);
                    }
                }
            }
        }

        if best > 0 {
            for ann in self.announcements(f)? {
                let mut worst = 0;
                for &out in &ann.outcomes {
                    worst = worst.max(self.solve(out)?);
                    if worst >= best {
                        break;
                    }
                }
                if worst < best {
                    best = worst;
                    tag = MoveTag::Announce(ann.union);
                    if best == 0 {
                        break;
                    }
                }
            }
        }

        if best > 1 {
            for v in bits(self.masks.full & !f) {
                let value = 1 + self.solve(f | 1 << v)?;
                if value < best {
                    best = value;
                    tag = MoveTag::Token(v as u8);
                    if best == 1 {
                        break;
                    }
                }
            }
        }

        self.store(f, best, tag);
        Ok(best)
    }

    fn store(&mut self, f: u64, value: u32, best: MoveTag) {
        self.memo.entries.insert(f, Entry { value, best });
    }

    fn free_win(&mut self, f: u64) -> Result<bool> {
        if f == self.masks.full {
            return Ok(true);
        }
        if let Some(&w) = self.free_memo.get(&f) {
            return Ok(w);
        }
        if self.free_memo.len() >= self.config.state_limit {
            return Err(Error::resource(format!(
                "state limit of {} exceeded",
                self.config.state_limit
            )));
        }
        let closed = self.masks.closure(f, self.masks.full & !f);
        let win = if closed != f {
            self.free_win(closed)?
        } else {
            let mut win = false;
            for ann in self.announcements(f)? {
                let mut all = true;
                for &out in &ann.outcomes {
                    if !self.free_win(out)? {
                        all = false;
                        break;
                    }
                }
                if all {
                    win = true;
                    break;
                }
            }
            win
        };
        self.free_memo.insert(f, win);
        Ok(win)
    }

    /// Admissible announcements from `f`, in increasing order of the
    /// announced component indices.
    fn announcements(&self, f: u64) -> Result<Vec<Announcement>> {
        let Some(size) = self.config.q.announcement_size() else {
            return Ok(Vec::new());
        };
        let unfilled = self.masks.full & !f;
        let comps = self.masks.components(unfilled);
        if comps.len() < size {
            return Ok(Vec::new());
        }
        if comps.len() > self.config.announcement_limit {
            return Err(Error::resource(format!(
                "{} unfilled components exceed the announcement limit of {}",
                comps.len(),
                self.config.announcement_limit
            )));
        }
        // A component that fills nothing when returned alone makes every
        // announcement containing it inadmissible.
        let productive: Vec<u64> = comps
            .into_iter()
            .filter(|&c| self.masks.closure(f, c) != f)
            .collect();
        let k = productive.len();
        if k < size {
            return Ok(Vec::new());
        }

        let mut out = Vec::new();
        let mut consider = |chosen: u64| {
            let picked: Vec<u64> = bits(chosen).map(|i| productive[i]).collect();
            let mut outcomes = Vec::with_capacity((1 << picked.len()) - 1);
            for resp in 1u64..(1 << picked.len()) {
                let returned = bits(resp).fold(0, |acc, i| acc | picked[i]);
                let next = self.masks.closure(f, returned);
                if next == f {
                    return;
                }
                outcomes.push(next);
            }
            out.push(Announcement {
                union: picked.iter().fold(0, |a, c| a | c),
                outcomes,
            });
        };
        if self.config.minimal_announcements {
            for_each_k_subset(k, size, &mut consider);
        } else {
            for s in size..=k {
                for_each_k_subset(k, s, &mut consider);
            }
        }
        Ok(out)
    }
}

/// Calls `f` with every `s`-element subset of `0..k` as a bitmask, in
/// increasing numeric order.
pub(crate) fn for_each_k_subset(k: usize, s: usize, mut f: impl FnMut(u64)) {
    if s > k || k > 63 {
        return;
    }
    if s == 0 {
        f(0);
        return;
    }
    let limit = 1u64 << k;
    let mut m = (1u64 << s) - 1;
    while m < limit {
        f(m);
        // Gosper's hack
        let c = m & m.wrapping_neg();
        let r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
}

fn require_nonempty(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        Err(Error::contract("graph must have at least one vertex"))
    } else {
        Ok(())
    }
}

/// Sum of `solve` over the connected components of `g`.
fn per_component(g: &Graph, mut solve: impl FnMut(&Graph) -> Result<u32>) -> Result<u32> {
    require_nonempty(g)?;
    if g.is_connected() {
        return solve(g);
    }
    let mut total = 0;
    for comp in components(g, &g.vertex_set()) {
        let (h, _) = g.induced_subgraph(&comp);
        total += solve(&h)?;
    }
    Ok(total)
}

/// `Z_q(G)`, with the default solver configuration.
pub fn zq_number(g: &Graph, q: Q) -> Result<u32> {
    zq_number_with(g, &SolverConfig::new(q))
}

/// `Z_q(G)` under an explicit configuration. Disconnected graphs are solved
/// per component and summed.
pub fn zq_number_with(g: &Graph, config: &SolverConfig) -> Result<u32> {
    per_component(g, |h| {
        let mut solver = GameSolver::new(h, config.clone())?;
        solver.value(&VertexSet::new(h.n()))
    })
}

/// Smallest `k` for which some `k`-subset `S` satisfies `done(S)`.
fn min_subset(g: &Graph, done: impl Fn(u64) -> Result<bool>) -> Result<u32> {
    let n = g.n();
    if n > 64 {
        return Err(Error::resource(format!(
            "subset search supports at most 64 vertices, got {n}"
        )));
    }
    for k in 0..=n {
        let mut hit = None;
        for_each_k_subset(n, k, |s| {
            if hit.is_none() {
                match done(s) {
                    Ok(true) => hit = Some(Ok(())),
                    Ok(false) => {}
                    Err(e) => hit = Some(Err(e)),
                }
            }
        });
        if let Some(r) = hit {
            return r.map(|_| k as u32);
        }
    }
    unreachable!("the full vertex set always works")
}

/// Classic zero forcing number: the smallest `S` whose closure is `V`.
pub fn z_number(g: &Graph) -> Result<u32> {
    require_nonempty(g)?;
    let Some(masks) = Masks::new(g) else {
        return Err(Error::resource("subset search supports at most 64 vertices"));
    };
    min_subset(g, |s| Ok(masks.closure(s, masks.full & !s) == masks.full))
}

/// Positive semidefinite zero forcing number.
pub fn z0_number(g: &Graph) -> Result<u32> {
    require_nonempty(g)?;
    let Some(masks) = Masks::new(g) else {
        return Err(Error::resource("subset search supports at most 64 vertices"));
    };
    min_subset(g, |s| Ok(masks.psd_closure(s) == masks.full))
}

/// Fewest tokens that, all spent before any oracle interaction, let the
/// player finish with free moves alone.
pub fn zq_static(g: &Graph, q: u32) -> Result<u32> {
    per_component(g, |h| {
        let solver = std::cell::RefCell::new(GameSolver::new(h, SolverConfig::new(Q::Finite(q)))?);
        let masks = Masks::new(h).expect("n <= 64");
        min_subset(h, |s| {
            let start = masks.closure(s, masks.full & !s);
            solver
                .borrow_mut()
                .wins_without_tokens(&VertexSet::from_mask(h.n(), start))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn parse_q() {
        assert_eq!("inf".parse::<Q>().unwrap(), Q::Infinite);
        assert_eq!(" 3 ".parse::<Q>().unwrap(), Q::Finite(3));
        assert!("-1".parse::<Q>().is_err());
        assert_eq!(Q::Finite(2).to_string(), "2");
    }

    #[test]
    fn k_subsets() {
        let mut seen = Vec::new();
        for_each_k_subset(4, 2, |m| seen.push(m));
        assert_eq!(seen, vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        let mut count = 0;
        for_each_k_subset(10, 4, |_| count += 1);
        assert_eq!(count, 210);
    }

    #[test]
    fn small_values() {
        assert_eq!(z_number(&cycle(4)).unwrap(), 2);
        assert_eq!(z0_number(&cycle(5)).unwrap(), 2);
        assert_eq!(z0_number(&Graph::empty(1)).unwrap(), 1);
        for q in [Q::Finite(1), Q::Finite(3), Q::Infinite] {
            assert_eq!(zq_number(&path(6), q).unwrap(), 1);
        }
        assert_eq!(zq_number(&Graph::empty(2), Q::Finite(1)).unwrap(), 2);
    }

    #[test]
    fn empty_graph_is_contract_error() {
        assert!(matches!(zq_number(&Graph::empty(0), Q::Infinite), Err(Error::Contract(_))));
        assert!(matches!(z_number(&Graph::empty(0)), Err(Error::Contract(_))));
    }

    #[test]
    fn state_limit_is_reported() {
        let g = cycle(8);
        let cfg = SolverConfig::new(Q::Finite(1)).with_state_limit(3);
        assert!(matches!(zq_number_with(&g, &cfg), Err(Error::Resource(_))));
    }

    #[test]
    fn best_move_on_path_is_free_after_endpoint() {
        let g = path(4);
        let mut s = GameSolver::new(&g, SolverConfig::new(Q::Finite(1))).unwrap();
        let (v, mv) = s.best_move(&VertexSet::new(4)).unwrap();
        assert_eq!(v, 1);
        assert_eq!(mv, Move::Token(0));
        let (v, mv) = s.best_move(&VertexSet::from_vertices(4, [0])).unwrap();
        assert_eq!(v, 0);
        assert_eq!(mv, Move::Force { from: 0, to: 1 });
        assert_eq!(s.best_move(&g.vertex_set()).unwrap(), (0, Move::Done));
    }
}
