//! Matroids represented over finite fields and the standard geometries.

mod geometry;
mod matrix;

pub use geometry::{
    affine_geometry, affine_geometry_with_caps, coupled_example, crown, crown_with_caps,
    graphic_clique_rep, parallel_connection, projective_geometry, projective_geometry_with_caps,
};
pub use matrix::LinearMatroid;

#[cfg(test)]
mod tests;
