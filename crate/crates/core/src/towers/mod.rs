//! Towers: recursive families `(e_X)` indexed by nonempty subsets of `[n]`,
//! whose counts drive the density argument for clique minors.
//!
//! A 1-tower is a nonloop. For `n >= 2`, `(e_X)` is an n-tower of `M` when
//! (1) `e_X` and `e_{X+n}` are equal or parallel in `M / e_n` for every
//! `X` in `S(n-1)`, (2) some such pair is not parallel in `M`, and (3) both
//! `(e_X : X in S(n-1))` and `(e_{X+n} : X in S(n-1))` are (n-1)-towers of
//! `M` and of `M / e_n`.

mod digraph;
mod enumerate;
mod facts;
mod pipeline;
mod tower;

pub use digraph::{path_to_clique, path_to_clique_with_caps, tower_digraph, tower_tree_circuits, TowerDigraph};
pub use enumerate::{
    count_w, count_w_with_caps, enumerate_towers, enumerate_towers_direct, enumerate_towers_with_caps,
    tower_census, tower_census_with_caps, Census, PointCensus,
};
pub use facts::tower_fact_failures;
pub use pipeline::{
    canonical_clique_tower, clique_from_tower, clique_from_tower_with_caps, find_tower, find_tower_with_caps,
    FoundTower, TowerClique, TowerRoute, TowerSearch,
};
pub use tower::{bit, is_tower, members, towers_equivalent, Subset, Tower, Violation};
