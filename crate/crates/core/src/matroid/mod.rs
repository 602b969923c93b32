//! Matroids given by rank oracles, their minors, and structural queries.

mod backends;
mod handle;
mod iso;
mod structure;

pub use backends::{
    complete_graph_edges, complete_graphic, direct_sum, free, uniform, GraphicMatroid, Uniform,
};
pub use handle::{MatroidHandle, RankOracle};
pub use iso::{is_isomorphic, isomorphism};
pub use structure::{
    circuits, circuits_up_to, epsilon, flats_of_rank, flats_up_to, is_simple, simplification, simplify,
    Simplification,
};
