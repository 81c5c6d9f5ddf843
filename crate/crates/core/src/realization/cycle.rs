use std::collections::VecDeque;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::exact::ExactMatrix;
use crate::cographic::cographic_rank;
use crate::error::{Error, Result};
use crate::multigraph::{EdgeId, Multigraph};
use crate::subset::EdgeSet;

/// Edge counts up to this are verified on every subset; larger graphs are sampled.
pub const EXHAUSTIVE_EDGE_LIMIT: usize = 15;
/// Number of random edge subsets checked above [`EXHAUSTIVE_EDGE_LIMIT`].
pub const SAMPLED_SUBSETS: usize = 10_000;

/// Signed fundamental cycles of a spanning tree, one row per non-tree edge.
///
/// Each edge is oriented from its smaller to its larger endpoint. Column `e - 1`
/// holds the coordinates of edge `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleMatrix {
    matrix: ExactMatrix,
    tree_edges: EdgeSet,
}

impl CycleMatrix {
    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    pub fn genus(&self) -> usize {
        self.matrix.rows()
    }

    pub fn tree_edges(&self) -> EdgeSet {
        self.tree_edges
    }

    /// Coordinate vector of edge `e`.
    pub fn column(&self, e: EdgeId) -> Vec<BigInt> {
        self.matrix.column(e.0 - 1)
    }

    /// Exact rank of the columns indexed by `edges`.
    pub fn rank_of(&self, edges: EdgeSet) -> usize {
        let cols: Vec<usize> = edges.iter().map(|e| e - 1).collect();
        self.matrix.select_columns(&cols).rank()
    }
}

/// BFS spanning tree from vertex 1, scanning neighbours by id and then edge id.
pub fn cycle_matrix(g: &Multigraph) -> Result<CycleMatrix> {
    if !g.is_connected() {
        return Err(Error::Precondition("the cycle matrix needs a connected graph".into()));
    }
    if g.has_loops() {
        return Err(Error::Precondition("the cycle matrix needs a loopless graph".into()));
    }
    let n = g.vertex_count();
    // parent[v] = (parent vertex, edge to parent); depth for walking to the common ancestor
    let mut parent = vec![(0usize, 0usize); n + 1];
    let mut depth = vec![usize::MAX; n + 1];
    let mut tree_edges = EdgeSet::EMPTY;
    depth[1] = 0;
    let mut queue = VecDeque::from([1usize]);
    while let Some(v) = queue.pop_front() {
        for (w, e) in g.neighbors(v) {
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                parent[w] = (v, e.0);
                tree_edges.insert(e.0);
                queue.push_back(w);
            }
        }
    }

    let m = g.edge_count();
    let non_tree: Vec<usize> = (1..=m).filter(|&e| !tree_edges.contains(e)).collect();
    let mut matrix = ExactMatrix::zeros(non_tree.len(), m);
    for (row, &e) in non_tree.iter().enumerate() {
        let (a, b) = g.endpoints(EdgeId(e));
        let (tail, head) = (a.min(b), a.max(b));
        matrix.set(row, e - 1, BigInt::from(1));
        // close the cycle by walking the tree from head back to tail
        let mut coefficients = vec![0i64; m];
        let (mut x, mut y) = (head, tail);
        let mut down = Vec::new();
        while x != y {
            if depth[x] >= depth[y] {
                let (p, f) = parent[x];
                coefficients[f - 1] += orientation(x, p);
                x = p;
            } else {
                let (p, f) = parent[y];
                down.push((p, y, f));
                y = p;
            }
        }
        for (from, to, f) in down {
            coefficients[f - 1] += orientation(from, to);
        }
        for (k, c) in coefficients.into_iter().enumerate() {
            if c != 0 {
                matrix.set(row, k, BigInt::from(c));
            }
        }
    }
    Ok(CycleMatrix { matrix, tree_edges })
}

/// +1 when an edge is traversed from its smaller to its larger endpoint.
fn orientation(from: usize, to: usize) -> i64 {
    if from < to {
        1
    } else {
        -1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BondRealizationReport {
    pub subsets_checked: usize,
    pub exhaustive: bool,
    pub vertex_triples_checked: usize,
}

/// Checks that the columns of the cycle matrix realize the bond matroid: every
/// edge subset (or a seeded sample of [`SAMPLED_SUBSETS`] when `|E| > 15`) has
/// matrix rank equal to its bond rank. On trivalent 2-edge-connected graphs the
/// three columns at each vertex must also span exactly a plane (a projective line).
pub fn verify_bond_realization(g: &Multigraph, seed: u64) -> Result<BondRealizationReport> {
    let cyc = cycle_matrix(g)?;
    let m = g.edge_count();
    let exhaustive = m <= EXHAUSTIVE_EDGE_LIMIT;
    let subsets: Vec<u64> = if exhaustive {
        (0..1u64 << m).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let full = EdgeSet::full(m).bits();
        (0..SAMPLED_SUBSETS).map(|_| rng.random::<u64>() & full).collect()
    };

    let mismatch = subsets.par_iter().find_map_first(|&bits| {
        let b = EdgeSet::from_bits(bits);
        let matrix_rank = cyc.rank_of(b);
        let bond_rank = cographic_rank(g, b);
        (matrix_rank != bond_rank).then_some(Error::BondMismatch { edges: b, matrix_rank, bond_rank })
    });
    if let Some(err) = mismatch {
        return Err(err);
    }

    let mut triples = 0;
    if g.is_trivalent() && g.is_two_edge_connected() {
        for v in 1..=g.vertex_count() {
            let rank = cyc.rank_of(g.incident_edges(v));
            if rank != 2 {
                return Err(Error::VertexTriple { vertex: v, rank });
            }
            triples += 1;
        }
    }
    Ok(BondRealizationReport { subsets_checked: subsets.len(), exhaustive, vertex_triples_checked: triples })
}
