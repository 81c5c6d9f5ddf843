//! Circuit enumeration from the shape of the graph rather than from ranks.
//!
//! On a trivalent 2-edge-connected graph the circuits are exactly the
//! inclusion-minimal sets among
//!
//! * vertex sets of cycles that leave the rest of the graph connected, and
//! * acyclic sets `A` with `ω(A) + 1 = ω(V - A)`.
//!
//! Cycles come from a depth-first walk (parallel edges give 2-cycles); acyclic
//! sets from a branch-and-bound over vertices that stops as soon as the chosen
//! set induces a cycle. No bond matroid rank is evaluated on this path.

use std::collections::BTreeSet;

use super::{check_bound, DEFAULT_ENUMERATION_BOUND};
use crate::error::{Error, Result};
use crate::matroid::CircuitList;
use crate::multigraph::Multigraph;
use crate::subset::VertexSet;

pub fn circuits_structured(g: &Multigraph) -> Result<CircuitList> {
    circuits_structured_within(g, DEFAULT_ENUMERATION_BOUND)
}

pub fn circuits_structured_within(g: &Multigraph, bound: usize) -> Result<CircuitList> {
    if !g.is_trivalent() || !g.is_two_edge_connected() {
        return Err(Error::Precondition("the structured engine needs a trivalent 2-edge-connected graph".into()));
    }
    check_bound(g, bound)?;

    let mut candidates: Vec<VertexSet> = cycle_vertex_sets(g).into_iter().filter(|&c| !g.disconnects(c)).collect();
    candidates.extend(balanced_acyclic_sets(g));
    Ok(CircuitList::minimal_of(candidates))
}

/// Vertex sets of all simple cycles, including 1-cycles (loops) and 2-cycles
/// (parallel pairs), in canonical order.
pub fn cycle_vertex_sets(g: &Multigraph) -> Vec<VertexSet> {
    let n = g.vertex_count();
    let mut found = BTreeSet::new();
    for v in 1..=n {
        if g.multiplicity(v, v) > 0 {
            found.insert(VertexSet::singleton(v));
        }
        for w in v + 1..=n {
            if g.multiplicity(v, w) >= 2 {
                found.insert(VertexSet::from([v, w]));
            }
        }
    }
    // simple cycles of length ≥ 3, rooted at their smallest vertex
    let adjacency: Vec<VertexSet> = (0..=n)
        .map(|v| if v == 0 { VertexSet::EMPTY } else { g.neighbors(v).into_iter().map(|(w, _)| w).collect() })
        .collect();
    for root in 1..=n {
        let mut path = vec![root];
        extend_path(&adjacency, root, VertexSet::singleton(root), &mut path, &mut found);
    }
    found.into_iter().collect()
}

fn extend_path(
    adjacency: &[VertexSet],
    root: usize,
    on_path: VertexSet,
    path: &mut Vec<usize>,
    found: &mut BTreeSet<VertexSet>,
) {
    let tip = *path.last().expect("path starts at the root");
    for next in adjacency[tip].iter() {
        if next == root && path.len() >= 3 {
            found.insert(on_path);
        } else if next > root && !on_path.contains(next) {
            path.push(next);
            extend_path(adjacency, root, on_path.with(next), path, found);
            path.pop();
        }
    }
}

/// Acyclic `A` with `ω(A) + 1 = ω(V - A)`.
fn balanced_acyclic_sets(g: &Multigraph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    collect_acyclic(g, 1, VertexSet::EMPTY, &mut out);
    out
}

fn collect_acyclic(g: &Multigraph, next: usize, chosen: VertexSet, out: &mut Vec<VertexSet>) {
    if next > g.vertex_count() {
        if !chosen.is_empty() && g.components(chosen) + 1 == g.components(g.vertices().difference(chosen)) {
            out.push(chosen);
        }
        return;
    }
    collect_acyclic(g, next + 1, chosen, out);
    let with = chosen.with(next);
    // cyclic sets only grow more cyclic, so the whole branch can go
    if !g.is_cyclic_subset(with) {
        collect_acyclic(g, next + 1, with, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;
    use crate::gcmatroid::circuits_naive;

    #[test]
    fn double_house_contains_known_circuits() {
        let circuits = circuits_structured(&gallery::double_house()).unwrap();
        for c in [[1, 2, 3].as_slice(), &[2, 3, 5, 6, 7], &[1, 2, 5, 6, 8]] {
            assert!(circuits.contains(c.iter().copied().collect()), "{c:?}");
        }
    }

    #[test]
    fn small_examples() {
        assert_eq!(circuits_structured(&gallery::theta()).unwrap().to_vecs(), vec![vec![1, 2]]);
        assert_eq!(circuits_structured(&gallery::k4()).unwrap(), circuits_naive(&gallery::k4()).unwrap());
        assert_eq!(circuits_structured(&gallery::soda_can()).unwrap().to_vecs(), vec![vec![1, 2], vec![3, 4]]);
    }

    #[test]
    fn hypothesis_is_checked() {
        assert!(matches!(circuits_structured(&gallery::dumbbell()), Err(Error::Precondition(_))));
        let path = Multigraph::from_edge_list(3, &[(1, 2), (2, 3)]).unwrap();
        assert!(circuits_structured(&path).is_err());
    }

    #[test]
    fn cycles_of_small_graphs() {
        // K4: four triangles and three 4-cycles, which share the vertex set {1,2,3,4}
        let k4 = cycle_vertex_sets(&gallery::k4());
        assert_eq!(k4.len(), 5);
        assert_eq!(cycle_vertex_sets(&gallery::theta()), vec![VertexSet::from([1, 2])]);
        assert_eq!(cycle_vertex_sets(&gallery::dumbbell()), vec![VertexSet::from([1]), VertexSet::from([2])]);
        // every reported set is cyclic
        let dh = gallery::double_house();
        assert!(cycle_vertex_sets(&dh).iter().all(|&c| dh.is_cyclic_subset(c)));
    }
}
