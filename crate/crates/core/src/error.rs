use thiserror::Error;

use crate::subset::{EdgeSet, VertexSet};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-range input supplied by the caller.
    #[error("invalid input: {0}")]
    Input(String),

    /// A graph file could not be parsed.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// The operation's standing hypothesis does not hold for this graph.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Exhaustive enumeration over `size` elements exceeds the configured bound.
    #[error("{what} has {size} elements, above the enumeration bound {bound}")]
    Resource { what: &'static str, size: usize, bound: usize },

    /// Every sampled hyperplane contained one of the lines of the configuration.
    #[error("no generic hyperplane found after {attempts} attempts (seed {seed})")]
    Genericity { seed: u64, attempts: u32 },

    /// An exact rank of a column selection disagreed with the bond matroid rank.
    #[error("bond realization mismatch on edges {edges}: matrix rank {matrix_rank}, bond rank {bond_rank}")]
    BondMismatch { edges: EdgeSet, matrix_rank: usize, bond_rank: usize },

    /// The three columns at a vertex do not span a line.
    #[error("incident columns at vertex {vertex} have rank {rank}, expected 2")]
    VertexTriple { vertex: usize, rank: usize },

    /// Two circuit lists that must agree do not.
    #[error("circuit lists differ: {0}")]
    CircuitMismatch(String),

    #[error("circuit elimination fails for {first} and {second} at element {element}")]
    CircuitAxiom { first: VertexSet, second: VertexSet, element: usize },
}
