use serde::{Deserialize, Serialize};

use super::Multigraph;
use crate::subset::{k_subsets, EdgeSet, VertexSet};
use crate::unionfind::UnionFind;

/// Edge counts up to this use exhaustive minimum-cut search; larger graphs use max-flow.
const BRUTE_FORCE_CUT_EDGES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityReport {
    pub is_connected: bool,
    pub is_trivalent: bool,
    pub is_simple: bool,
    pub has_loops: bool,
    pub bridges: EdgeSet,
    pub edge_connectivity: usize,
    pub is_2_vertex_connected: bool,
    pub genus: usize,
}

impl ConnectivityReport {
    /// Connected on at least two vertices with no bridge.
    pub fn is_two_edge_connected(&self) -> bool {
        self.is_connected && self.edge_connectivity >= 2
    }
}

impl Multigraph {
    pub fn connectivity_report(&self) -> ConnectivityReport {
        ConnectivityReport {
            is_connected: self.is_connected(),
            is_trivalent: self.is_trivalent(),
            is_simple: self.is_simple(),
            has_loops: self.has_loops(),
            bridges: self.bridges(),
            edge_connectivity: self.edge_connectivity(),
            is_2_vertex_connected: self.is_2_vertex_connected(),
            genus: self.genus(),
        }
    }

    pub fn is_two_edge_connected(&self) -> bool {
        self.is_connected() && self.vertex_count() >= 2 && self.bridges().is_empty()
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges().iter().all(|&(u, v)| u != v && seen.insert((u.min(v), u.max(v))))
    }

    /// Bridges found by a depth-first low-link search keyed on edge ids, so parallel
    /// edges never count as bridges.
    pub fn bridges(&self) -> EdgeSet {
        let n = self.vertex_count();
        let mut order = vec![0usize; n + 1];
        let mut low = vec![0usize; n + 1];
        let mut counter = 0;
        let mut bridges = EdgeSet::EMPTY;
        let adjacency: Vec<Vec<(usize, usize)>> = (0..=n)
            .map(|v| if v == 0 { Vec::new() } else { self.neighbors(v).into_iter().map(|(w, e)| (w, e.0)).collect() })
            .collect();

        for root in 1..=n {
            if order[root] != 0 {
                continue;
            }
            counter += 1;
            order[root] = counter;
            low[root] = counter;
            // (vertex, edge used to enter it, next adjacency index)
            let mut stack = vec![(root, 0usize, 0usize)];
            while let Some(&mut (v, via, ref mut idx)) = stack.last_mut() {
                if let Some(&(w, e)) = adjacency[v].get(*idx) {
                    *idx += 1;
                    if e == via {
                        continue;
                    }
                    if order[w] == 0 {
                        counter += 1;
                        order[w] = counter;
                        low[w] = counter;
                        stack.push((w, e, 0));
                    } else {
                        low[v] = low[v].min(order[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(parent, _, _)) = stack.last() {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] > order[parent] {
                            bridges.insert(via);
                        }
                    }
                }
            }
        }
        bridges
    }

    fn connected_without(&self, removed: EdgeSet) -> bool {
        let mut uf = UnionFind::new(self.vertex_count());
        let mut parts = self.vertex_count();
        for (k, &(u, v)) in self.edges().iter().enumerate() {
            if !removed.contains(k + 1) && uf.union(u - 1, v - 1) {
                parts -= 1;
            }
        }
        parts == 1
    }

    /// Minimum number of edges whose removal disconnects the graph.
    ///
    /// Disconnected graphs and single-vertex graphs report 0.
    pub fn edge_connectivity(&self) -> usize {
        if self.vertex_count() < 2 || !self.is_connected() {
            return 0;
        }
        if self.edge_count() <= BRUTE_FORCE_CUT_EDGES {
            self.edge_connectivity_exhaustive()
        } else {
            self.edge_connectivity_max_flow()
        }
    }

    pub(crate) fn edge_connectivity_exhaustive(&self) -> usize {
        let upper = self.min_non_loop_degree();
        (1..upper)
            .find(|&k| k_subsets(self.edge_count(), k).any(|mask| !self.connected_without(EdgeSet::from_bits(mask))))
            .unwrap_or(upper)
    }

    fn min_non_loop_degree(&self) -> usize {
        (1..=self.vertex_count()).map(|v| self.neighbors(v).len()).min().unwrap_or(0)
    }

    /// Minimum over `t` of the unit-capacity max-flow between vertex 1 and `t`.
    pub(crate) fn edge_connectivity_max_flow(&self) -> usize {
        let n = self.vertex_count();
        (2..=n).map(|t| self.max_flow(1, t)).min().unwrap_or(0)
    }

    fn max_flow(&self, source: usize, sink: usize) -> usize {
        let n = self.vertex_count();
        // residual capacities between vertex pairs; parallel edges add up
        let mut cap = vec![vec![0i64; n + 1]; n + 1];
        for &(u, v) in self.edges() {
            if u != v {
                cap[u][v] += 1;
                cap[v][u] += 1;
            }
        }
        let mut flow = 0;
        loop {
            let mut prev = vec![0usize; n + 1];
            prev[source] = source;
            let mut queue = std::collections::VecDeque::from([source]);
            while let Some(x) = queue.pop_front() {
                if x == sink {
                    break;
                }
                for y in 1..=n {
                    if prev[y] == 0 && cap[x][y] > 0 {
                        prev[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            if prev[sink] == 0 {
                return flow;
            }
            let mut y = sink;
            while y != source {
                let x = prev[y];
                cap[x][y] -= 1;
                cap[y][x] += 1;
                y = x;
            }
            flow += 1;
        }
    }

    /// Connected, and removing any single vertex leaves the rest connected.
    pub fn is_2_vertex_connected(&self) -> bool {
        if !self.is_connected() {
            return false;
        }
        let all = self.vertices();
        (1..=self.vertex_count()).all(|v| {
            let rest = all.without(v);
            rest.is_empty() || self.components(rest) == 1
        })
    }

    /// Whether removing the vertex set `a` splits the remaining vertices into more
    /// than one component.
    pub fn disconnects(&self, a: VertexSet) -> bool {
        self.components(self.vertices().difference(a)) > 1
    }
}
