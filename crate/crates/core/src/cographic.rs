//! Rank functions of the graphic matroid M(G) and the bond matroid M*(G) on the
//! edge set, and the closed form for the bond rank of a vertex neighbourhood.

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;
use crate::subset::{EdgeSet, VertexSet};
use crate::unionfind::UnionFind;

/// Rank of `b` in the graphic matroid: |V| minus the number of components of the
/// spanning subgraph (V, B), isolated vertices included.
pub fn graphic_rank(g: &Multigraph, b: EdgeSet) -> usize {
    let mut uf = UnionFind::new(g.vertex_count());
    let edges = g.edges();
    b.iter()
        .filter(|&e| e <= edges.len())
        .filter(|&e| {
            let (u, v) = edges[e - 1];
            uf.union(u - 1, v - 1)
        })
        .count()
}

/// Rank of `b` in the bond matroid: r*(B) = r(E - B) + |B| - r(E).
pub fn cographic_rank(g: &Multigraph, b: EdgeSet) -> usize {
    let all = g.all_edges();
    let b = b.intersection(all);
    graphic_rank(g, all.difference(b)) + b.len() - graphic_rank(g, all)
}

/// r*(δ(A)) via the closed form |δ(A)| - |A| - ω(V - A) + 1, valid on connected graphs.
pub fn cographic_rank_of_neighborhood(g: &Multigraph, a: VertexSet) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::Precondition(
            "the neighbourhood rank formula needs a connected graph; use cographic_rank(delta(A))".into(),
        ));
    }
    let a = a.intersection(g.vertices());
    let rest = g.components(g.vertices().difference(a));
    // |δ(A)| + 1 ≥ |A| + ω(V - A) holds on connected graphs, so this never underflows
    Ok(g.delta(a).len() + 1 - a.len() - rest)
}

/// The acyclic-set specialization |A| + ω(A) - ω(V - A) + 1 for trivalent graphs.
pub fn cographic_rank_of_acyclic_neighborhood(g: &Multigraph, a: VertexSet) -> Result<usize> {
    if !g.is_connected() || !g.is_trivalent() {
        return Err(Error::Precondition("the acyclic form needs a connected trivalent graph".into()));
    }
    if g.is_cyclic_subset(a) {
        return Err(Error::Precondition(format!("{a} induces a cycle")));
    }
    let a = a.intersection(g.vertices());
    Ok(a.len() + g.components(a) + 1 - g.components(g.vertices().difference(a)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;

    #[test]
    fn graphic_rank_examples() {
        let k4 = gallery::k4();
        assert_eq!(graphic_rank(&k4, k4.all_edges()), 3);
        assert_eq!(graphic_rank(&gallery::theta(), EdgeSet::from([1])), 1);
        assert_eq!(graphic_rank(&gallery::dumbbell(), EdgeSet::from([1])), 0);
    }

    #[test]
    fn k4_neighbourhood_ranks() {
        let k4 = gallery::k4();
        for v in 1..=4 {
            assert_eq!(cographic_rank(&k4, k4.delta(VertexSet::singleton(v))), 2);
        }
        for mask in 1u64..16 {
            let a = VertexSet::from_bits(mask);
            if a.len() >= 2 {
                assert_eq!(cographic_rank(&k4, k4.delta(a)), 3, "{a}");
            }
        }
    }

    #[test]
    fn theta_full_edge_set() {
        let theta = gallery::theta();
        assert_eq!(cographic_rank(&theta, theta.all_edges()), 2);
    }

    #[test]
    fn double_house_closed_form() {
        let dh = gallery::double_house();
        assert_eq!(cographic_rank_of_neighborhood(&dh, VertexSet::from([1, 2, 3])).unwrap(), 3);
        assert_eq!(cographic_rank_of_neighborhood(&dh, VertexSet::from([1, 2, 3, 6])).unwrap(), 5);
        assert_eq!(cographic_rank_of_neighborhood(&dh, dh.vertices()).unwrap(), 5);
        assert_eq!(dh.genus(), 5);
    }

    #[test]
    fn disconnected_graph_is_rejected() {
        let g = gallery::theta().disjoint_union(&gallery::theta());
        assert!(matches!(cographic_rank_of_neighborhood(&g, VertexSet::from([1])), Err(Error::Precondition(_))));
    }

    #[test]
    fn acyclic_form_agrees_on_acyclic_sets() {
        let dh = gallery::double_house();
        let mut checked = 0;
        for a in dh.vertices().subsets() {
            if !dh.is_cyclic_subset(a) {
                assert_eq!(
                    cographic_rank_of_acyclic_neighborhood(&dh, a).unwrap(),
                    cographic_rank(&dh, dh.delta(a)),
                    "{a}"
                );
                checked += 1;
            }
        }
        assert!(checked > 50);
        assert!(cographic_rank_of_acyclic_neighborhood(&dh, VertexSet::from([1, 2, 3])).is_err());
    }
}
