//! Exact (and, where needed, exponential-time) computations of every graph
//! parameter. These are the ground truth for provers, gadget checks and tests.

mod coloring;
mod degeneracy;
mod diameter;
mod matching;
mod sets;

use thiserror::Error;

pub use coloring::{chromatic, colorable, CHROMATIC_LIMIT};
pub use degeneracy::{degeneracy, k_core, peel, Peel};
pub use diameter::{bfs, diameter, Distance};
pub use matching::{
    gallai_edmonds, max_matching, maximum_matching, odd_components, tutte_berge, tutte_berge_bound, GallaiEdmonds,
    TUTTE_BERGE_LIMIT,
};
pub use sets::{max_clique, max_independent_set, min_vertex_cover, set_parameters, SetParameters, SET_LIMIT};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {n} nodes; this oracle handles at most {limit}")]
    TooLarge { n: usize, limit: usize },
}
