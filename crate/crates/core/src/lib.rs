//! Matroid clique-minor machinery: finite fields and groups, rank-oracle
//! matroids and their minors, represented geometries, frame matroids of
//! biased graphs, minor search, towers, and graph extremal helpers.

pub mod algebra;
pub mod caps;
pub mod elemset;
pub mod error;
pub mod extremal;
pub mod frame;
pub mod io;
pub mod linear;
pub mod matroid;
pub mod search;
pub mod towers;
pub mod verify;

pub use caps::Caps;
pub use elemset::ElemSet;
pub use error::{Error, Result};
pub use matroid::MatroidHandle;
