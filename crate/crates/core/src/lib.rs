//! Exact q-analogue zero forcing.
//!
//! The zero forcing game fills a graph by the rule "a filled vertex with
//! exactly one unfilled neighbour fills it". The `Z_q` game adds an oracle
//! move: the player announces at least `q + 1` unfilled components and an
//! adversary hands back a nonempty subset of them on which forcing may
//! continue. This crate computes
//!
//! * `Z`, `Z_0` and `Z_q` exactly by memoized game search ([`zq_number`]),
//! * `Z_1` of trees in linear time per root ([`tree::z1_tree`]),
//! * recognizers and generators for the families with small values
//!   ([`structure`]),
//! * a census of `Z_1` over all free trees up to 20 vertices ([`census`]),
//! * a cross-validation suite tying the pieces together ([`verify`]).
//!
//! ```
//! use zq_forcing::{structure::gen_double_star, tree::z1_tree, z_number, zq_number, Q};
//!
//! let t = gen_double_star(3, 3).unwrap();
//! assert_eq!(z_number(&t).unwrap(), 4);
//! assert_eq!(zq_number(&t, Q::Finite(1)).unwrap(), 3);
//! assert_eq!(z1_tree(&t).unwrap(), 3);
//! ```

pub mod census;
mod error;
pub mod forcing;
mod graph;
pub mod io;
pub mod solver;
pub mod stalling;
pub mod structure;
pub mod tree;
pub mod verify;
mod vertex_set;

pub use error::{Error, Result};
pub use forcing::{closure, components, find_unfilled_fort, induced_closure, is_fort};
pub use graph::Graph;
pub use io::{emit_graph, parse_graph, Format};
pub use solver::{
    z0_number, z_number, zq_number, zq_number_with, zq_static, GameSolver, Move, SolverConfig, Q,
};
pub use stalling::stalling_response;
pub use vertex_set::VertexSet;
