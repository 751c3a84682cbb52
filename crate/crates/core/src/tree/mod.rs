//! Polynomial-time one-oracle forcing on trees and its independent checks.

mod formulas;
mod normalize;
mod path_cover;
mod rooted;

pub use formulas::{eq1_direct, eq1_direct_capped, leafpair_formula, EQ1_DEFAULT_CAP, LEAFPAIR_CAP};
pub use normalize::{
    is_normalized, normalize_tree_state, normalize_tree_state_with, Adversary,
    EXACT_ADVERSARY_LIMIT,
};
pub use path_cover::path_cover_number;
pub use rooted::{combine_children, f_values, root_values, z1_tree, FTable, RootedTree};
