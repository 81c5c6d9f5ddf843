//! Finite undirected multigraphs with loops and parallel edges.
//!
//! Vertices are `1..=n` and edges are `1..=m` in list order; both ground
//! sets are capped at [`MAX_ELEMENTS`] so that vertex and edge subsets fit
//! in a single machine word.

mod connectivity;
mod enumerate;
mod isomorphism;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subset::{EdgeSet, VertexSet, MAX_ELEMENTS};
use crate::unionfind::UnionFind;

pub use connectivity::ConnectivityReport;
pub use enumerate::{enumerate_trivalent_graphs, DEFAULT_ENUMERATION_BOUND};
pub use isomorphism::{find_isomorphism, is_isomorphic};

/// 1-based vertex label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexId(pub usize);

/// 1-based edge label: the edge's position in the edge list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// Which new edges a 2-switch creates from `e1 = (a1, b1)` and `e2 = (a2, b2)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SwitchPairing {
    /// `(a1, a2)` and `(b1, b2)`.
    #[default]
    Straight,
    /// `(a1, b2)` and `(b1, a2)`.
    Crossed,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    incident: Vec<EdgeSet>,
}

impl Multigraph {
    /// Builds a multigraph on vertices `1..=n` whose `k`-th pair becomes edge `k + 1`.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Input("a graph needs at least one vertex".into()));
        }
        Self::build(n, pairs)
    }

    /// The graph with no vertices, the identity for [`disjoint_union`](Self::disjoint_union).
    pub fn empty() -> Self {
        Multigraph { n: 0, edges: Vec::new(), incident: Vec::new() }
    }

    fn build(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::Input(format!("{n} vertices exceed the supported maximum {MAX_ELEMENTS}")));
        }
        if pairs.len() > MAX_ELEMENTS {
            return Err(Error::Input(format!("{} edges exceed the supported maximum {MAX_ELEMENTS}", pairs.len())));
        }
        let mut incident = vec![EdgeSet::EMPTY; n];
        for (k, &(u, v)) in pairs.iter().enumerate() {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::Input(format!("edge {} has endpoint {w} outside 1..={n}", k + 1)));
                }
            }
            incident[u - 1].insert(k + 1);
            incident[v - 1].insert(k + 1);
        }
        Ok(Multigraph { n, edges: pairs.to_vec(), incident })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoint pairs in edge-label order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (usize, usize) {
        self.edges[e.0 - 1]
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::full(self.edges.len())
    }

    /// Edges with at least one endpoint at `v`.
    pub fn incident_edges(&self, v: usize) -> EdgeSet {
        self.incident[v - 1]
    }

    /// Degree of `v`, counting loops twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().map(|&(a, b)| usize::from(a == v) + usize::from(b == v)).sum()
    }

    pub fn is_trivalent(&self) -> bool {
        (1..=self.n).all(|v| self.degree(v) == 3)
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|&(a, b)| a == b)
    }

    /// Neighbours of `v` through non-loop edges, with repetition for parallel edges,
    /// ordered by neighbour id and then edge id.
    pub fn neighbors(&self, v: usize) -> Vec<(usize, EdgeId)> {
        let mut out: Vec<_> = self
            .incident_edges(v)
            .iter()
            .filter_map(|e| {
                let (a, b) = self.edges[e - 1];
                match (a == v, b == v) {
                    (true, true) => None,
                    (true, false) => Some((b, EdgeId(e))),
                    _ => Some((a, EdgeId(e))),
                }
            })
            .collect();
        out.sort();
        out
    }

    /// δ(A): the edges incident to at least one vertex of `a`.
    pub fn delta(&self, a: VertexSet) -> EdgeSet {
        a.iter().filter(|&v| v <= self.n).fold(EdgeSet::EMPTY, |acc, v| acc.union(self.incident[v - 1]))
    }

    /// Edges with both endpoints in `a`.
    pub fn induced_edges(&self, a: VertexSet) -> EdgeSet {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| a.contains(u) && a.contains(v))
            .map(|(k, _)| k + 1)
            .collect()
    }

    fn induced_union_find(&self, a: VertexSet) -> UnionFind {
        let mut uf = UnionFind::new(self.n);
        for &(u, v) in &self.edges {
            if a.contains(u) && a.contains(v) {
                uf.union(u - 1, v - 1);
            }
        }
        uf
    }

    /// ω(A): number of connected components of the induced subgraph G[A].
    pub fn components(&self, a: VertexSet) -> usize {
        let a = a.intersection(self.vertices());
        let mut uf = self.induced_union_find(a);
        a.iter().filter(|&v| uf.find(v - 1) == v - 1).count()
    }

    /// Vertex sets of the connected components of G[A], ordered by smallest vertex.
    pub fn component_sets(&self, a: VertexSet) -> Vec<VertexSet> {
        let a = a.intersection(self.vertices());
        let mut uf = self.induced_union_find(a);
        let mut roots: Vec<(usize, VertexSet)> = Vec::new();
        for v in a.iter() {
            let r = uf.find(v - 1);
            match roots.iter_mut().find(|(root, _)| *root == r) {
                Some((_, set)) => set.insert(v),
                None => roots.push((r, VertexSet::singleton(v))),
            }
        }
        roots.into_iter().map(|(_, s)| s).collect()
    }

    /// Whether G[A] contains a cycle. Loops are 1-cycles and parallel pairs 2-cycles.
    pub fn is_cyclic_subset(&self, a: VertexSet) -> bool {
        let a = a.intersection(self.vertices());
        // a forest on |A| vertices with ω components has exactly |A| - ω edges
        self.induced_edges(a).len() + self.components(a) > a.len()
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components(self.vertices()) == 1
    }

    /// First Betti number |E| - |V| + ω(V).
    pub fn genus(&self) -> usize {
        self.edges.len() + self.components(self.vertices()) - self.n
    }

    /// Vertices of `other` are shifted by `|V(self)|` and its edges appended after ours.
    pub fn disjoint_union(&self, other: &Multigraph) -> Multigraph {
        let offset = self.n;
        let mut pairs = self.edges.clone();
        pairs.extend(other.edges.iter().map(|&(u, v)| (u + offset, v + offset)));
        Multigraph::build(self.n + other.n, &pairs).expect("union of valid graphs is valid")
    }

    /// Replaces `e1 = (a1, b1)` of `self` and `e2 = (a2, b2)` of `other` in the disjoint
    /// union by two edges joining the two sides.
    ///
    /// The surviving edges keep their relative order (first graph, then second), and the
    /// two new edges are appended at the end.
    pub fn two_switch(&self, other: &Multigraph, e1: EdgeId, e2: EdgeId, pairing: SwitchPairing) -> Result<Multigraph> {
        let pick = |g: &Multigraph, e: EdgeId, which: &str| -> Result<(usize, usize)> {
            if e.0 == 0 || e.0 > g.edge_count() {
                return Err(Error::Input(format!("{which} graph has no edge {}", e.0)));
            }
            let (a, b) = g.endpoints(e);
            if a == b {
                return Err(Error::Input(format!("edge {} of the {which} graph is a loop", e.0)));
            }
            Ok((a, b))
        };
        let (a1, b1) = pick(self, e1, "first")?;
        let (a2, b2) = pick(other, e2, "second")?;
        let offset = self.n;
        let (a2, b2) = (a2 + offset, b2 + offset);

        let mut pairs: Vec<(usize, usize)> =
            self.edges.iter().enumerate().filter(|&(k, _)| k + 1 != e1.0).map(|(_, &p)| p).collect();
        pairs.extend(
            other.edges.iter().enumerate().filter(|&(k, _)| k + 1 != e2.0).map(|(_, &(u, v))| (u + offset, v + offset)),
        );
        match pairing {
            SwitchPairing::Straight => pairs.extend([(a1, a2), (b1, b2)]),
            SwitchPairing::Crossed => pairs.extend([(a1, b2), (b1, a2)]),
        }
        Multigraph::build(self.n + other.n, &pairs)
    }

    /// Number of edges joining `u` and `v` (loops at `u` when `u == v`).
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| (a == u && b == v) || (a == v && b == u)).count()
    }

    /// The graph with vertices renamed by `perm[v - 1]`; edge order is preserved.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Multigraph> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n
            || perm.iter().any(|&p| p == 0 || p > self.n || std::mem::replace(&mut seen[p - 1], true))
        {
            return Err(Error::Input("relabeling is not a permutation of the vertices".into()));
        }
        let pairs: Vec<_> = self.edges.iter().map(|&(u, v)| (perm[u - 1], perm[v - 1])).collect();
        Multigraph::build(self.n, &pairs)
    }
}

impl fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Multigraph").field("n", &self.n).field("edges", &self.edges).finish()
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::gallery;

    #[test]
    fn rejects_out_of_range_endpoint() {
        assert!(matches!(Multigraph::from_edge_list(2, &[(1, 2), (1, 3)]), Err(Error::Input(_))));
        assert!(Multigraph::from_edge_list(2, &[(0, 1)]).is_err());
        assert!(Multigraph::from_edge_list(0, &[]).is_err());
    }

    #[test]
    fn theta_and_soda_can() {
        let theta = Multigraph::from_edge_list(2, &[(1, 2), (1, 2), (1, 2)]).unwrap();
        assert!(theta.is_trivalent());
        assert_eq!(theta.genus(), 2);
        let soda = Multigraph::from_edge_list(4, &[(1, 3), (2, 4), (1, 2), (1, 2), (3, 4), (3, 4)]).unwrap();
        assert!(soda.is_trivalent());
        assert_eq!(soda.genus(), 3);
    }

    #[test]
    fn delta_examples() {
        let dh = gallery::double_house();
        let d = dh.delta(VertexSet::from([1, 2, 3]));
        let mut pairs: Vec<_> = d.iter().map(|e| dh.endpoints(EdgeId(e))).collect();
        pairs.sort();
        assert_eq!(pairs, vec![(1, 2), (1, 3), (1, 8), (2, 3), (2, 4), (3, 5)]);
        assert_eq!(dh.delta(VertexSet::EMPTY), EdgeSet::EMPTY);
        assert_eq!(dh.delta(dh.vertices()), dh.all_edges());
        let theta = gallery::theta();
        assert_eq!(theta.delta(VertexSet::from([1])), theta.all_edges());
    }

    #[test]
    fn component_examples() {
        let dh = gallery::double_house();
        assert_eq!(dh.components(VertexSet::from([1, 2, 5, 6, 8])), 2);
        assert_eq!(
            dh.component_sets(VertexSet::from([1, 2, 5, 6, 8])),
            vec![VertexSet::from([1, 2, 6, 8]), VertexSet::from([5])]
        );
        assert_eq!(dh.components(VertexSet::from([1, 4, 8])), 2);
        assert_eq!(dh.components(VertexSet::EMPTY), 0);
    }

    #[test]
    fn cyclic_subset_examples() {
        let dh = gallery::double_house();
        assert!(dh.is_cyclic_subset(VertexSet::from([1, 2, 3])));
        assert!(!dh.is_cyclic_subset(VertexSet::from([2, 3, 5, 6, 7])));
        let soda = gallery::soda_can();
        assert!(soda.is_cyclic_subset(VertexSet::from([1, 2])));
        assert!(!soda.is_cyclic_subset(VertexSet::from([1, 3])));
        let dumbbell = gallery::dumbbell();
        assert!(dumbbell.is_cyclic_subset(VertexSet::from([1])));
    }

    #[test]
    fn disjoint_union_examples() {
        let theta = gallery::theta();
        let tt = theta.disjoint_union(&theta);
        assert_eq!((tt.vertex_count(), tt.edge_count()), (4, 6));
        assert_eq!(tt.components(tt.vertices()), 2);
        assert_eq!(theta.disjoint_union(&Multigraph::empty()), theta);
        assert_eq!(Multigraph::empty().disjoint_union(&theta), theta);

        let k4 = gallery::k4();
        let u = k4.disjoint_union(&theta);
        // Betti number oracle: |E| - |V| + ω(V)
        assert_eq!(u.genus(), 9 - 6 + 2);
        assert_eq!(u.genus(), k4.genus() + theta.genus());
    }

    #[test]
    fn two_switch_of_thetas_is_soda_can() {
        let theta = gallery::theta();
        let g = theta.two_switch(&theta, EdgeId(1), EdgeId(1), SwitchPairing::Straight).unwrap();
        assert!(g.is_trivalent());
        assert_eq!(g.edges(), &[(1, 2), (1, 2), (3, 4), (3, 4), (1, 3), (2, 4)]);
        assert!(is_isomorphic(&g, &gallery::soda_can()));
    }

    #[test]
    fn two_switch_of_k4s_has_two_edge_cut() {
        let k4 = gallery::k4();
        let g = k4.two_switch(&k4, EdgeId(1), EdgeId(3), SwitchPairing::Crossed).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert!(g.is_trivalent());
        let report = g.connectivity_report();
        assert_eq!(report.edge_connectivity, 2);
    }

    #[test]
    fn two_switch_rejects_loops() {
        let dumbbell = gallery::dumbbell();
        let theta = gallery::theta();
        assert!(matches!(
            dumbbell.two_switch(&theta, EdgeId(1), EdgeId(1), SwitchPairing::Straight),
            Err(Error::Input(_))
        ));
        assert!(theta.two_switch(&dumbbell, EdgeId(1), EdgeId(3), SwitchPairing::Straight).is_ok());
        assert!(theta.two_switch(&theta, EdgeId(4), EdgeId(1), SwitchPairing::Straight).is_err());
    }

    #[test]
    fn relabel_rejects_non_permutations() {
        let k4 = gallery::k4();
        assert!(k4.relabeled(&[1, 1, 2, 3]).is_err());
        let r = k4.relabeled(&[4, 3, 2, 1]).unwrap();
        assert!(is_isomorphic(&k4, &r));
    }
}
