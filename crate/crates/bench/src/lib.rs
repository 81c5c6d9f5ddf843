//! Inputs shared by the benchmarks.

use gcm_core::{gallery, Multigraph};

/// Gallery graphs that satisfy the structured engine's hypothesis, smallest first.
pub fn two_edge_connected_gallery() -> Vec<(&'static str, Multigraph)> {
    gallery::NAMES
        .iter()
        .map(|&name| (name, gallery::by_name(name).expect("gallery name")))
        .filter(|(_, g)| g.is_trivalent() && g.is_two_edge_connected())
        .collect()
}
