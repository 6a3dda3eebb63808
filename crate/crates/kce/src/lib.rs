//! k-clique-extendible vertex orderings: verification, search, gadgets, and
//! reductions.
//!
//! An ordering `phi` of a graph is *k-clique-extendible* (k-C-E) when any two
//! k-cliques X and Y that overlap in k-1 vertices, with every shared vertex
//! lying between the two private endpoints under `phi`, force an edge between
//! those endpoints. Equivalently, `phi` contains no *ordered K-minus*: k+1
//! vertices that induce a complete graph minus exactly the edge joining the
//! first and last of them under `phi`. For k = 2 these are exactly the
//! transitive orientations, so 2-C-E graphs are the comparability graphs.
//!
//! The crate provides:
//!
//! * [`graph`], [`ordering`]: bitset-backed graphs, orderings, colourings and
//!   the ordered K-minus witness type;
//! * [`verify`]: two independent verifiers plus a seeded Monte-Carlo estimate
//!   of how often a fixed K-minus is ordered under random orderings;
//! * [`treewidth`]: exact tree decompositions and a decomposition-driven
//!   verifier that enumerates candidate middle cliques bag by bag;
//! * [`gadgets`]: the forbidden gadget F_k, the endpoint-forcing gadget
//!   Gamma_k, and composition of orderings across a separator;
//! * [`reductions`]: instance translations between clique, verification,
//!   ordering-existence, betweenness, 3-colouring, and multicoloured clique
//!   problems, with certificate lifts in both directions;
//! * [`solvers`]: budgeted exhaustive ordering search, a max-clique routine
//!   that exploits a verified ordering, and small brute-force oracles;
//! * [`io`]: PACE-style `.gr`/`.td` files, ordering files, and JSON sidecars.
//!
//! With the default `parallel` feature the pair scan of the verifier, the
//! estimator trials, and bag enumeration run on rayon; results are reduced in
//! a fixed order so output does not depend on the schedule. Without the
//! feature the same entry points run sequentially.

pub(crate) mod bits;
mod cliques;
pub mod gadgets;
pub mod graph;
pub mod io;
pub mod ordering;
pub mod reductions;
pub mod solvers;
pub mod treewidth;
pub mod verify;

pub use graph::{Graph, SubgraphMap};
pub use ordering::{Coloring, KMinusWitness, VertexOrdering};

use gadgets::ComposeViolation;
use treewidth::DecompositionViolation;

/// Errors shared across the crate. Precondition failures carry enough
/// context to name the violated condition.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("vertex {vertex} listed more than once")]
    DuplicateVertex { vertex: usize },
    #[error("sequence is not a permutation of 0..{n}")]
    NotAPermutation { n: usize },
    #[error("ordering has {got} vertices but the graph has {expected}")]
    OrderingLengthMismatch { expected: usize, got: usize },
    #[error("k must be at least {min}, got {got}")]
    KTooSmall { min: usize, got: usize },
    #[error("instance size {got} exceeds the supported limit {limit}")]
    TooLarge { limit: usize, got: usize },
    #[error("cannot identify a vertex with itself ({vertex})")]
    IdentifySelf { vertex: usize },
    #[error("cannot identify adjacent vertices {keep} and {drop}")]
    IdentifyAdjacent { keep: usize, drop: usize },
    #[error("graph has no induced K-minus on {0} vertices; fraction undefined")]
    NoInducedKMinus(usize),
    #[error("trial count must be positive")]
    ZeroTrials,
    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(DecompositionViolation),
    #[error("composition precondition failed: {0}")]
    Compose(ComposeViolation),
    #[error("malformed gadget: {0}")]
    MalformedGadget(String),
    #[error("vertices {x}, {y}, {z} do not induce a triangle")]
    NotATriangle { x: usize, y: usize, z: usize },
    #[error("ordering is not {k}-clique-extendible")]
    NotKceOrdering { k: usize },
    #[error("colouring is not proper")]
    ImproperColoring,
    #[error("colouring uses {got} classes, at most {max} allowed")]
    TooManyColors { max: usize, got: usize },
    #[error("triple {index} is malformed or out of range")]
    BadTriple { index: usize },
    #[error("certificate violates betweenness triple {index}")]
    TripleUnsatisfied { index: usize },
    #[error("ordering restricted to the base graph contains a disjoint triple")]
    DisjointTriplePresent,
    #[error("invalid partition: {0}")]
    BadPartition(String),
}
