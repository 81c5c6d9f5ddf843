//! Graph curve matroids of finite multigraphs.
//!
//! The graph curve matroid `M_G` lives on the vertex set of a multigraph `G`:
//! its circuits are the inclusion-minimal non-empty vertex sets `A` whose edge
//! neighbourhood `δ(A)` has bond matroid rank at most `|A|`.
//!
//! Circuits are computed two independent ways. The result can be checked
//! against an exact rational realization built from the cycle matrix.
//!
//! ```
//! use gcm_core::{gallery, gcmatroid, matroid::ExplicitMatroid};
//!
//! let k4 = gallery::k4();
//! let circuits = gcmatroid::circuits_naive(&k4).unwrap();
//! assert_eq!(circuits.len(), 4);
//! let m = ExplicitMatroid::from_circuits(4, circuits.as_slice().to_vec(), true).unwrap();
//! assert_eq!(m, ExplicitMatroid::uniform(2, 4).unwrap());
//! ```

pub mod cographic;
pub mod error;
pub mod gallery;
pub mod gcmatroid;
pub mod io;
pub mod matroid;
pub mod multigraph;
pub mod realization;
pub mod subset;
mod unionfind;

pub use error::{Error, Result};
pub use gcmatroid::{Engine, GraphCurveMatroid};
pub use matroid::{CircuitList, ExplicitMatroid};
pub use multigraph::{ConnectivityReport, EdgeId, Multigraph, SwitchPairing, VertexId};
pub use subset::{EdgeSet, VertexSet};
