//! Exact linear realizations over the rationals.
//!
//! The signed cycle matrix of a connected loopless graph realizes its bond
//! matroid by columns. On a trivalent 2-edge-connected graph the three columns
//! at a vertex span a projective line; cutting every line with a random
//! hyperplane gives one point per vertex, and the linear matroid of those
//! points is compared against the graph curve matroid. All arithmetic is in
//! arbitrary-precision integers.

mod cycle;
mod exact;
mod hyperplane;

pub use cycle::{
    cycle_matrix, verify_bond_realization, BondRealizationReport, CycleMatrix, EXHAUSTIVE_EDGE_LIMIT, SAMPLED_SUBSETS,
};
pub use exact::{rank_of_vectors, ExactMatrix};
pub use hyperplane::{
    hyperplane_section, hyperplane_section_matroid, linear_matroid, HyperplaneSample, PointConfiguration,
    COEFFICIENT_RANGE, MAX_ATTEMPTS,
};
