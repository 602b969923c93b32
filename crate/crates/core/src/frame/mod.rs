//! Biased graphs, gain graphs, and their frame matroids.

mod biased;
mod blowup;
mod rank;

pub use biased::{Balance, BiasedGraph, FrameEdge, Gain, MinorOp, Multigraph};
pub use blowup::{blow_up, dowling, dowling_graph, frame_graphic_form, GraphicForm};
pub use rank::{frame_circuits, frame_matroid, frame_rank};

#[cfg(test)]
mod tests;
