//! Exact computation with k-color vertex models on multigraphs.
//!
//! A vertex model assigns an exact scalar weight to every multiset of k
//! colors; the partition function of a graph sums, over all edge colorings,
//! the product of vertex weights at the multisets of incident colors. This
//! crate computes those sums exactly (over the rationals or the Gaussian
//! rationals), performs the graph surgeries the theory is built on (pinning,
//! pin contraction, pendant reduction, labeled gluing), and checks the
//! algebraic identities that characterize partition functions: alternating
//! sums over pin permutations, moment-matrix rank bounds, connection-matrix
//! rank bounds, and the kernel of the graph-to-polynomial map.
//!
//! Everything is desk scale and deterministic: no floats, no tolerances,
//! no global RNG.

pub mod certify;
pub mod connection;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod model;
pub mod partition;
pub mod scalar;
pub mod suite;
pub mod symbolic;

pub use error::{Error, Result};

/// Resource caps shared by the capped operations.
///
/// Every cap is a hard error when exceeded, never a silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Edge-count cap for brute-force partition sums (cost is k^|E|).
    pub max_brute_edges: usize,
    /// Open edge-end cap for intermediate tensors in the contraction engine.
    pub max_width: usize,
    /// Pin-set size cap for alternating sums (cost is |U|!).
    pub max_pins: usize,
    /// Vertex-count cap for canonical forms and isomorphism tests.
    pub max_canon_vertices: usize,
    /// Member cap for labeled-family enumeration.
    pub max_family: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_brute_edges: 16,
            max_width: 8,
            max_pins: 6,
            max_canon_vertices: 12,
            max_family: 2000,
        }
    }
}
