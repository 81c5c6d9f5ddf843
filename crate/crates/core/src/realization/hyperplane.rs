use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::cycle::{cycle_matrix, CycleMatrix};
use super::exact::rank_of_vectors;
use crate::error::{Error, Result};
use crate::matroid::{CircuitList, ExplicitMatroid, DEFAULT_ENUMERATION_BOUND};
use crate::multigraph::{EdgeId, Multigraph};
use crate::subset::VertexSet;

/// Hyperplane covector entries are drawn uniformly from `[-COEFFICIENT_RANGE, COEFFICIENT_RANGE]`.
pub const COEFFICIENT_RANGE: i64 = 1_000_000;
/// Samples drawn before giving up on finding a hyperplane containing none of the lines.
pub const MAX_ATTEMPTS: u32 = 32;

/// The covector `h` of a sampled hyperplane `H = {x : h·x = 0}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperplaneSample {
    pub h: Vec<i64>,
    pub seed: u64,
    /// 1-based index of the sample that was accepted.
    pub attempt: u32,
}

/// One point per vertex: where the line of that vertex meets the hyperplane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfiguration {
    pub points: Vec<Vec<BigInt>>,
}

impl PointConfiguration {
    /// Linear matroid of the points: circuits are the minimal dependent subsets.
    pub fn matroid(&self) -> Result<ExplicitMatroid> {
        linear_matroid(&self.points, DEFAULT_ENUMERATION_BOUND)
    }
}

/// Two columns among the edges at `v` that span its line.
fn spanning_pair(g: &Multigraph, cyc: &CycleMatrix, v: usize) -> Result<(Vec<BigInt>, Vec<BigInt>)> {
    let cols: Vec<Vec<BigInt>> = g.incident_edges(v).iter().map(|e| cyc.column(EdgeId(e))).collect();
    for i in 0..cols.len() {
        for j in i + 1..cols.len() {
            if rank_of_vectors(&[&cols[i], &cols[j]]) == 2 {
                return Ok((cols[i].clone(), cols[j].clone()));
            }
        }
    }
    Err(Error::Precondition(format!("the columns at vertex {v} do not span a line")))
}

fn dot(h: &[i64], q: &[BigInt]) -> BigInt {
    h.iter().zip(q).map(|(&a, b)| BigInt::from(a) * b).sum()
}

/// Intersects each vertex line `L_v = span(q_1, q_2)` with a seeded random
/// hyperplane: `p_v = (h·q_2) q_1 - (h·q_1) q_2`. A sample with some `p_v = 0`
/// (a line inside `H`) is discarded and redrawn.
pub fn hyperplane_section(g: &Multigraph, seed: u64) -> Result<(PointConfiguration, HyperplaneSample)> {
    if !g.is_trivalent() || !g.is_two_edge_connected() {
        return Err(Error::Precondition("hyperplane sections need a trivalent 2-edge-connected graph".into()));
    }
    let cyc = cycle_matrix(g)?;
    let pairs = (1..=g.vertex_count()).map(|v| spanning_pair(g, &cyc, v)).collect::<Result<Vec<_>>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=MAX_ATTEMPTS {
        let h: Vec<i64> = (0..cyc.genus()).map(|_| rng.random_range(-COEFFICIENT_RANGE..=COEFFICIENT_RANGE)).collect();
        if h.iter().all(|&x| x == 0) {
            continue;
        }
        let points: Vec<Vec<BigInt>> = pairs
            .iter()
            .map(|(q1, q2)| {
                let (a, b) = (dot(&h, q2), dot(&h, q1));
                q1.iter().zip(q2).map(|(x, y)| &a * x - &b * y).collect()
            })
            .collect();
        if points.iter().all(|p| p.iter().any(|x| !x.is_zero())) {
            return Ok((PointConfiguration { points }, HyperplaneSample { h, seed, attempt }));
        }
    }
    Err(Error::Genericity { seed, attempts: MAX_ATTEMPTS })
}

/// Matroid of the point configuration cut out by a generic hyperplane.
pub fn hyperplane_section_matroid(g: &Multigraph, seed: u64) -> Result<ExplicitMatroid> {
    hyperplane_section(g, seed)?.0.matroid()
}

/// The linear matroid on `1..=vectors.len()`: circuits are the minimal subsets
/// `A` with rank `|A| - 1`.
pub fn linear_matroid(vectors: &[Vec<BigInt>], bound: usize) -> Result<ExplicitMatroid> {
    let n = vectors.len();
    if n > bound {
        return Err(Error::Resource { what: "vector configuration", size: n, bound });
    }
    let size = 1usize << n;
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
        let set = VertexSet::from_bits(mask as u64);
        let chosen: Vec<&[BigInt]> = set.iter().map(|i| vectors[i - 1].as_slice()).collect();
        if rank_of_vectors(&chosen) < set.len() {
            dependent[mask] = true;
            circuits.push(set);
        }
    }
    Ok(ExplicitMatroid::from_circuit_list(n, CircuitList::minimal_of(circuits)))
}
