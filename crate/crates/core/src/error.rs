use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid pin map: {0}")]
    InvalidPinMap(String),

    #[error("pin target {0} lies in the pinned set; contraction requires disjoint targets")]
    PinTargetPinned(usize),

    #[error("graph on {n} vertices exceeds the canonical-form cap of {cap}")]
    CanonCapExceeded { n: usize, cap: usize },

    #[error("{edges} edges exceed the brute-force cap of {cap}")]
    EdgeCapExceeded { edges: usize, cap: usize },

    #[error("intermediate tensor with {width} open edge-ends exceeds the width cap of {cap}")]
    WidthCapExceeded { width: usize, cap: usize },

    #[error("pin set of size {len} exceeds the permutation cap of {cap}")]
    PinCapExceeded { len: usize, cap: usize },

    #[error("matrix mixes rational and Gaussian entries")]
    MixedRings,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("model degree cap {cap} is below the required degree {needed}")]
    DegreeCapInsufficient { cap: usize, needed: usize },

    #[error("label counts differ: {0} vs {1}")]
    LabelMismatch(usize, usize),

    #[error("graph lies outside the table oracle's domain")]
    OutsideTable,

    #[error("labeled family exceeds the cap of {cap} members")]
    FamilyCapExceeded { cap: usize },

    #[error("model rank bound is not known; build the model from points to track it")]
    UnknownRank,

    #[error("expected a single monomial")]
    NotMonomial,

    #[error("invalid elimination order: {0}")]
    InvalidOrder(String),

    #[error("parse error: {0}")]
    Parse(String),
}
