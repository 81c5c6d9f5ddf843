//! Named example graphs.

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;

pub const NAMES: [&str; 8] = ["theta", "sodacan", "k4", "doublehouse", "dumbbell", "prism", "cube", "petersen"];

fn build(n: usize, pairs: &[(usize, usize)]) -> Multigraph {
    Multigraph::from_edge_list(n, pairs).expect("gallery graphs are well formed")
}

/// Two vertices joined by three parallel edges.
pub fn theta() -> Multigraph {
    build(2, &[(1, 2), (1, 2), (1, 2)])
}

/// Two doubled edges `12` and `34` joined by the single edges `13` and `24`.
pub fn soda_can() -> Multigraph {
    build(4, &[(1, 3), (2, 4), (1, 2), (1, 2), (3, 4), (3, 4)])
}

pub fn k4() -> Multigraph {
    build(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
}

pub fn double_house() -> Multigraph {
    build(8, &[(1, 2), (1, 3), (1, 8), (2, 3), (2, 4), (3, 5), (4, 5), (4, 6), (5, 7), (6, 7), (6, 8), (7, 8)])
}

/// A loop at each of two vertices plus the bridge between them.
pub fn dumbbell() -> Multigraph {
    build(2, &[(1, 1), (2, 2), (1, 2)])
}

/// Triangular prism: triangles `123` and `456` with rungs `14`, `25`, `36`.
pub fn prism() -> Multigraph {
    build(6, &[(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (1, 4), (2, 5), (3, 6)])
}

pub fn cube() -> Multigraph {
    build(8, &[(1, 2), (2, 3), (3, 4), (1, 4), (5, 6), (6, 7), (7, 8), (5, 8), (1, 5), (2, 6), (3, 7), (4, 8)])
}

/// Outer 5-cycle `1..5`, spokes `i, i+5`, inner pentagram on `6..10`.
pub fn petersen() -> Multigraph {
    build(
        10,
        &[
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (1, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
            (5, 10),
            (6, 8),
            (8, 10),
            (7, 10),
            (7, 9),
            (6, 9),
        ],
    )
}

pub fn by_name(name: &str) -> Result<Multigraph> {
    Ok(match name {
        "theta" => theta(),
        "sodacan" => soda_can(),
        "k4" => k4(),
        "doublehouse" => double_house(),
        "dumbbell" => dumbbell(),
        "prism" => prism(),
        "cube" => cube(),
        "petersen" => petersen(),
        other => return Err(Error::Input(format!("unknown gallery graph `{other}`; available: {}", NAMES.join(", ")))),
    })
}
