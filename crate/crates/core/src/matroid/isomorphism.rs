//! Matroid isomorphism by backtracking over ground-set bijections.
//!
//! Each element is fingerprinted by how many circuits of each size contain it;
//! an element may only map to an element with the same fingerprint. Circuits
//! are checked as soon as all of their elements are assigned, in both
//! directions.

use std::collections::HashSet;

use super::ExplicitMatroid;
use crate::error::{Error, Result};
use crate::subset::VertexSet;

/// Largest ground set accepted by the isomorphism search.
pub const MAX_ISOMORPHISM_GROUND: usize = 14;

fn element_profiles(m: &ExplicitMatroid) -> Vec<Vec<usize>> {
    let n = m.ground_size();
    let mut profiles = vec![vec![0usize; n + 1]; n];
    for c in m.circuits() {
        for x in c.iter() {
            profiles[x - 1][c.len()] += 1;
        }
    }
    profiles
}

fn size_histogram(m: &ExplicitMatroid) -> Vec<usize> {
    let mut hist = vec![0usize; m.ground_size() + 1];
    for c in m.circuits() {
        hist[c.len()] += 1;
    }
    hist
}

pub(super) fn fingerprint(m: &ExplicitMatroid) -> (usize, Vec<usize>, Vec<Vec<usize>>) {
    let mut profiles = element_profiles(m);
    profiles.sort();
    (m.ground_size(), size_histogram(m), profiles)
}

struct Side {
    profiles: Vec<Vec<usize>>,
    circuits: HashSet<u64>,
}

pub(super) fn find(a: &ExplicitMatroid, b: &ExplicitMatroid) -> Result<Option<Vec<usize>>> {
    let n = a.ground_size();
    if n > MAX_ISOMORPHISM_GROUND || b.ground_size() > MAX_ISOMORPHISM_GROUND {
        return Err(Error::Resource {
            what: "matroid isomorphism ground set",
            size: n.max(b.ground_size()),
            bound: MAX_ISOMORPHISM_GROUND,
        });
    }
    if n != b.ground_size() || a.circuits().len() != b.circuits().len() || fingerprint(a) != fingerprint(b) {
        return Ok(None);
    }

    // most constrained elements first
    let pa = element_profiles(a);
    let mut order: Vec<usize> = (1..=n).collect();
    order.sort_by_key(|&x| std::cmp::Reverse(pa[x - 1].iter().sum::<usize>()));
    let mut position = vec![0usize; n + 1];
    for (i, &x) in order.iter().enumerate() {
        position[x] = i;
    }

    let closing_a = {
        let mut closing = vec![Vec::new(); n];
        for &c in a.circuits() {
            let last = c.iter().map(|x| position[x]).max().expect("circuits are non-empty");
            closing[last].push(c);
        }
        closing
    };
    let side_a = Side { profiles: pa, circuits: a.circuits().iter().map(|c| c.bits()).collect() };
    let side_b = Side { profiles: element_profiles(b), circuits: b.circuits().iter().map(|c| c.bits()).collect() };
    let b_circuits: Vec<VertexSet> = b.circuits().iter().copied().collect();

    let mut search = Search {
        a: &side_a,
        b: &side_b,
        b_circuits: &b_circuits,
        closing: &closing_a,
        order: &order,
        image: vec![0; n + 1],
        preimage: vec![0; n + 1],
        assigned_image: VertexSet::EMPTY,
    };
    Ok(search.extend(0).then(|| search.image[1..].to_vec()))
}

struct Search<'s> {
    a: &'s Side,
    b: &'s Side,
    b_circuits: &'s [VertexSet],
    /// circuits of `a` grouped by the search depth at which they become fully assigned
    closing: &'s [Vec<VertexSet>],
    order: &'s [usize],
    image: Vec<usize>,
    preimage: Vec<usize>,
    assigned_image: VertexSet,
}

impl Search<'_> {
    fn map_set(&self, s: VertexSet, map: &[usize]) -> VertexSet {
        s.iter().map(|x| map[x]).collect()
    }

    fn extend(&mut self, depth: usize) -> bool {
        let Some(&x) = self.order.get(depth) else {
            return true;
        };
        let n = self.order.len();
        for y in 1..=n {
            if self.preimage[y] != 0 || self.a.profiles[x - 1] != self.b.profiles[y - 1] {
                continue;
            }
            self.image[x] = y;
            self.preimage[y] = x;
            self.assigned_image.insert(y);

            let forward =
                self.closing[depth].iter().all(|&c| self.b.circuits.contains(&self.map_set(c, &self.image).bits()));
            let backward = forward
                && self
                    .b_circuits
                    .iter()
                    .filter(|c| c.contains(y) && c.is_subset(self.assigned_image))
                    .all(|&c| self.a.circuits.contains(&self.map_set(c, &self.preimage).bits()));
            if backward && self.extend(depth + 1) {
                return true;
            }

            self.assigned_image.remove(y);
            self.preimage[y] = 0;
            self.image[x] = 0;
        }
        false
    }
}
