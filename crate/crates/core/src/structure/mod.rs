//! Graph families behind small forcing numbers: generators, comb
//! recognition and classification.

mod classify;
mod comb;
mod generators;

pub use classify::{classify, Classification, Label, Witness};
pub use comb::{comb_decompose, is_initial_pair, CombDecomposition, Tooth};
pub use generators::{
    complete_graph, cycle_graph, gen_comb, gen_complete_binary, gen_double_star, gen_pick_comb,
    gen_spider, path_graph, star_graph, Attachment, CombSpec,
};
