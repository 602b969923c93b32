//! Minor search with replayable witnesses.
//!
//! Every search contracts an independent set spanning each flat in turn
//! (flats by rank, then lexicographically), so two contraction sets with the
//! same closure are tried once. Deletion is never enumerated: the target is
//! found as a restriction of the contraction.

mod minors;
mod points;
mod restriction;
mod witness;

pub use minors::{
    has_clique_minor, has_clique_minor_with_caps, has_line_minor, has_line_minor_with_caps,
    longest_line_minor, longest_line_minor_with_caps,
};
pub use restriction::{find_minor, find_minor_with_caps, find_restriction, find_restriction_with_caps, is_b_clique};
pub use witness::MinorWitness;
