//! The graph curve matroid M_G on the vertex set of a multigraph.
//!
//! A non-empty vertex set `A` is dependent when some non-empty `A' ⊆ A` has
//! `r*(δ(A')) ≤ |A'|`, where `r*` is the bond matroid rank; circuits are the
//! inclusion-minimal such sets. Two engines enumerate them: [`circuits_naive`]
//! walks the power set with superset pruning and works for any multigraph,
//! while [`circuits_structured`] assembles candidates from cycles and balanced
//! acyclic sets on trivalent 2-edge-connected graphs.

mod basis;
mod structured;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cographic::cographic_rank;
use crate::error::{Error, Result};
use crate::matroid::{CircuitList, ExplicitMatroid};
use crate::multigraph::Multigraph;
use crate::subset::VertexSet;

pub use basis::{basis_containing_vertex, growth_chain};
pub use structured::{circuits_structured, circuits_structured_within, cycle_vertex_sets};

/// Default cap on |V| for power-set enumeration.
pub const DEFAULT_ENUMERATION_BOUND: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Naive,
    Structured,
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Naive => "naive",
            Engine::Structured => "structured",
        })
    }
}

/// r*(δ(A)) computed directly from the bond matroid; valid for any multigraph.
pub fn neighborhood_rank(g: &Multigraph, a: VertexSet) -> usize {
    cographic_rank(g, g.delta(a))
}

/// Whether `a` is a dependent set of the graph curve matroid
/// (`r*(δ(A')) ≤ |A'|` for some non-empty `A' ⊆ A`).
pub fn is_dependent(g: &Multigraph, a: VertexSet) -> bool {
    let a = a.intersection(g.vertices());
    let mut subsets: Vec<VertexSet> = a.subsets().filter(|s| !s.is_empty()).collect();
    subsets.sort_by_key(|s| s.len());
    subsets.into_iter().any(|s| neighborhood_rank(g, s) <= s.len())
}

pub fn is_independent(g: &Multigraph, a: VertexSet) -> bool {
    !is_dependent(g, a)
}

/// Whether adding `x` to the independent set `a` keeps it independent: only
/// subsets containing `x` need checking.
fn extends_independent(g: &Multigraph, a: VertexSet, x: usize) -> bool {
    a.subsets().all(|s| {
        let s = s.with(x);
        neighborhood_rank(g, s) > s.len()
    })
}

/// Greedy maximal independent subset of `a`, scanning vertices in id order.
pub fn greedy_independent(g: &Multigraph, a: VertexSet) -> VertexSet {
    greedy_in_order(g, a.intersection(g.vertices()).iter())
}

pub(crate) fn greedy_in_order(g: &Multigraph, order: impl IntoIterator<Item = usize>) -> VertexSet {
    order.into_iter().fold(VertexSet::EMPTY, |acc, x| if extends_independent(g, acc, x) { acc.with(x) } else { acc })
}

/// Rank of `a` in M_G.
pub fn rank_subset(g: &Multigraph, a: VertexSet) -> usize {
    greedy_independent(g, a).len()
}

fn check_bound(g: &Multigraph, bound: usize) -> Result<()> {
    if g.vertex_count() > bound {
        Err(Error::Resource { what: "vertex set", size: g.vertex_count(), bound })
    } else {
        Ok(())
    }
}

/// Lazily filled table of r*(δ(A)) keyed by the vertex-set mask, owned by one run.
pub(crate) struct RankMemo<'g> {
    graph: &'g Multigraph,
    values: Vec<u8>,
}

impl<'g> RankMemo<'g> {
    const UNKNOWN: u8 = u8::MAX;

    pub fn new(graph: &'g Multigraph) -> Self {
        RankMemo { graph, values: vec![Self::UNKNOWN; 1usize << graph.vertex_count()] }
    }

    pub fn get(&mut self, a: VertexSet) -> usize {
        let slot = &mut self.values[a.bits() as usize];
        if *slot == Self::UNKNOWN {
            *slot = neighborhood_rank(self.graph, a) as u8;
        }
        *slot as usize
    }
}

pub fn circuits_naive(g: &Multigraph) -> Result<CircuitList> {
    circuits_naive_within(g, DEFAULT_ENUMERATION_BOUND)
}

/// Inclusion-minimal non-empty `A` with `r*(δ(A)) ≤ |A|`, for any multigraph.
///
/// Masks are visited in increasing numeric order, so every proper subset of a
/// candidate is settled before the candidate itself. A candidate with a
/// dependent maximal proper subset strictly contains a circuit found earlier
/// and is skipped without a rank evaluation.
pub fn circuits_naive_within(g: &Multigraph, bound: usize) -> Result<CircuitList> {
    check_bound(g, bound)?;
    let size = 1usize << g.vertex_count();
    let mut memo = RankMemo::new(g);
    let mut dependent = vec![false; size];
    let mut circuits = Vec::new();
    for mask in 1..size {
        let mut rest = mask;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest ^= bit;
            if dependent[mask ^ bit] {
                dependent[mask] = true;
                break;
            }
        }
        if dependent[mask] {
            continue;
        }
        let a = VertexSet::from_bits(mask as u64);
        if memo.get(a) <= a.len() {
            dependent[mask] = true;
            circuits.push(a);
        }
    }
    circuits.sort();
    Ok(CircuitList::from_sorted_antichain(circuits))
}

/// Word-for-word circuit test: `C` qualifies when `r*(δ(C)) ≤ |C|` and every
/// non-empty proper subset `A` has `r*(δ(A)) > |A|`. Exponential in a nested
/// way; kept as the reference the pruned engine is checked against.
pub fn circuits_literal(g: &Multigraph, bound: usize) -> Result<CircuitList> {
    check_bound(g, bound)?;
    let mut memo = RankMemo::new(g);
    let mut circuits = Vec::new();
    for c in g.vertices().subsets().filter(|c| !c.is_empty()) {
        if memo.get(c) > c.len() {
            continue;
        }
        let minimal = c.subsets().filter(|a| !a.is_empty() && *a != c).all(|a| memo.get(a) > a.len());
        if minimal {
            circuits.push(c);
        }
    }
    circuits.sort();
    Ok(CircuitList::from_sorted_antichain(circuits))
}

/// Vertices that are loops of M_G, i.e. `r*(δ({v})) ≤ 1`.
pub fn matroid_loops(g: &Multigraph) -> Result<VertexSet> {
    if !g.is_trivalent() {
        return Err(Error::Precondition("matroid loops are defined here for trivalent graphs".into()));
    }
    Ok((1..=g.vertex_count()).filter(|&v| neighborhood_rank(g, VertexSet::singleton(v)) <= 1).collect())
}

/// A graph together with the circuits of its graph curve matroid.
#[derive(Clone, Debug)]
pub struct GraphCurveMatroid {
    graph: Multigraph,
    matroid: ExplicitMatroid,
    engine: Engine,
}

impl GraphCurveMatroid {
    pub fn compute(g: &Multigraph, engine: Engine) -> Result<Self> {
        Self::compute_within(g, engine, DEFAULT_ENUMERATION_BOUND)
    }

    pub fn compute_within(g: &Multigraph, engine: Engine, bound: usize) -> Result<Self> {
        let circuits = match engine {
            Engine::Naive => circuits_naive_within(g, bound)?,
            Engine::Structured => circuits_structured_within(g, bound)?,
        };
        Ok(GraphCurveMatroid {
            graph: g.clone(),
            matroid: ExplicitMatroid::from_circuit_list(g.vertex_count(), circuits),
            engine,
        })
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn circuits(&self) -> &CircuitList {
        self.matroid.circuits()
    }

    pub fn rank(&self) -> usize {
        self.matroid.rank()
    }

    pub fn engine(&self) -> Engine {
        self.engine
    }

    pub fn matroid(&self) -> &ExplicitMatroid {
        &self.matroid
    }

    pub fn into_matroid(self) -> ExplicitMatroid {
        self.matroid
    }
}

/// All bases of M_G in canonical order.
pub fn bases(g: &Multigraph) -> Result<Vec<VertexSet>> {
    bases_within(g, DEFAULT_ENUMERATION_BOUND)
}

pub fn bases_within(g: &Multigraph, bound: usize) -> Result<Vec<VertexSet>> {
    GraphCurveMatroid::compute_within(g, Engine::Naive, bound)?.matroid().bases_within(bound)
}
