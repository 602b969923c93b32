//! Simple graphs, K_t-minor search, dense K_t-minor-free families, and the
//! density-threshold calculators.

mod bounds;
mod families;
mod graph;

pub use bounds::{
    binary_exponents, crown_lower_bound, d_ell, density_bounds, density_threshold, kung_bound,
    thomason_alpha, thomason_lambda, DEll, DensityBounds, Threshold, Variant, ABSOLUTE_C, ALPHA,
};
pub use families::{kostochka_family, replicate_family};
pub use graph::{
    graph_clique_minor, graph_clique_minor_with_caps, verify_branch_sets, BranchSets,
    SimpleGraph,
};
