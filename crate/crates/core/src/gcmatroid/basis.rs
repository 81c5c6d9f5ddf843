use super::greedy_in_order;
use crate::error::{Error, Result};
use crate::multigraph::{Multigraph, VertexId};
use crate::subset::VertexSet;

/// Vertex order of a connected growth from `start`: each step adds the
/// smallest-id vertex adjacent to the vertices taken so far, so every prefix
/// induces a connected subgraph.
pub fn growth_chain(g: &Multigraph, start: VertexId) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    if start.0 == 0 || start.0 > n {
        return Err(Error::Input(format!("vertex {} not in 1..={n}", start.0)));
    }
    let mut taken = VertexSet::singleton(start.0);
    let mut frontier = VertexSet::EMPTY;
    let mut order = vec![start.0];
    let mut last = start.0;
    loop {
        frontier = frontier.union(g.neighbors(last).into_iter().map(|(w, _)| w).collect());
        frontier = frontier.difference(taken);
        let Some(next) = frontier.min() else { break };
        taken.insert(next);
        order.push(next);
        last = next;
    }
    Ok(order)
}

/// An independent set of size g - 1 containing `v`, built by greedily keeping
/// vertices of the growth chain from `v` that preserve independence.
pub fn basis_containing_vertex(g: &Multigraph, v: VertexId) -> Result<VertexSet> {
    if !g.is_trivalent() || !g.is_two_edge_connected() {
        return Err(Error::Precondition("basis construction needs a trivalent 2-edge-connected graph".into()));
    }
    let chain = growth_chain(g, v)?;
    Ok(greedy_in_order(g, chain))
}
