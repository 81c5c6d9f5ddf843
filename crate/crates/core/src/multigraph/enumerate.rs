//! Connected trivalent multigraphs up to isomorphism.
//!
//! Labelled graphs are generated edge by edge in sorted order, always extending
//! the smallest vertex that still lacks degree, and introducing fresh vertices
//! only as `max_used + 1`. Every connected graph has such a labelling (label in
//! the order vertices are first reached), so no isomorphism class is missed.
//! The surviving labellings are then bucketed by an invariant fingerprint and
//! deduplicated with the backtracking isomorphism test.

use std::collections::HashMap;

use super::isomorphism::{fingerprint, is_isomorphic};
use super::Multigraph;
use crate::error::{Error, Result};

/// Largest vertex count accepted by [`enumerate_trivalent_graphs`] unless overridden.
pub const DEFAULT_ENUMERATION_BOUND: usize = 10;

/// One representative per isomorphism class of connected trivalent multigraphs on
/// `n` vertices. With `require_2ec` only loopless 2-edge-connected graphs are kept.
pub fn enumerate_trivalent_graphs(n: usize, require_2ec: bool) -> Result<Vec<Multigraph>> {
    enumerate_trivalent_graphs_bounded(n, require_2ec, DEFAULT_ENUMERATION_BOUND)
}

pub fn enumerate_trivalent_graphs_bounded(n: usize, require_2ec: bool, bound: usize) -> Result<Vec<Multigraph>> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::Input(format!(
            "no trivalent graph has {n} vertices (vertex count must be even and positive)"
        )));
    }
    if n > bound {
        return Err(Error::Resource { what: "trivalent graph enumeration", size: n, bound });
    }

    let mut generator =
        Generator { n, remaining: vec![3; n + 1], edges: Vec::with_capacity(3 * n / 2), used: 1, found: Vec::new() };
    generator.extend();

    let mut buckets: HashMap<_, Vec<Multigraph>> = HashMap::new();
    let mut representatives = Vec::new();
    for pairs in generator.found {
        let g = Multigraph::from_edge_list(n, &pairs)?;
        if require_2ec && (g.has_loops() || !g.is_two_edge_connected()) {
            continue;
        }
        let bucket = buckets.entry(fingerprint(&g)).or_default();
        if bucket.iter().all(|h| !is_isomorphic(h, &g)) {
            bucket.push(g.clone());
            representatives.push(g);
        }
    }
    Ok(representatives)
}

struct Generator {
    n: usize,
    remaining: Vec<u8>,
    edges: Vec<(usize, usize)>,
    used: usize,
    found: Vec<Vec<(usize, usize)>>,
}

impl Generator {
    fn extend(&mut self) {
        let Some(u) = (1..=self.n).find(|&v| self.remaining[v] > 0) else {
            if self.used == self.n {
                self.found.push(self.edges.clone());
            }
            return;
        };
        if u > self.used {
            // every introduced vertex is saturated: the component is closed off
            return;
        }
        let (last_u, last_v) = self.edges.last().copied().unwrap_or((0, 0));
        // edges leave `u` in nondecreasing partner order
        let start = if last_u == u { last_v } else { u };
        let top = (self.used + 1).min(self.n);
        for v in start..=top {
            if v == u {
                if self.remaining[u] < 2 {
                    continue;
                }
                self.remaining[u] -= 2;
                self.edges.push((u, u));
                self.extend();
                self.edges.pop();
                self.remaining[u] += 2;
            } else {
                if self.remaining[v] == 0 {
                    continue;
                }
                let fresh = v == self.used + 1;
                if fresh {
                    self.used += 1;
                }
                self.remaining[u] -= 1;
                self.remaining[v] -= 1;
                self.edges.push((u, v));
                self.extend();
                self.edges.pop();
                self.remaining[u] += 1;
                self.remaining[v] += 1;
                if fresh {
                    self.used -= 1;
                }
            }
        }
    }
}
