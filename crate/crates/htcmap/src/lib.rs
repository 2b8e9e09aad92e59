//! Exact combinatorial dynamics for vertex maps on finite connected
//! multigraphs.
//!
//! A vertex map permutes the vertices and sends each edge linearly onto a
//! reduced edge path. The crate provides the path algebra (reduction,
//! cycle bases), oriented Markov matrices and graphs with signed
//! closed-walk enumeration, period-forcing orders, and an exact
//! piecewise-linear census of periodic points that cross-validates the
//! walk constructions.

pub mod dynamics;
pub mod forcing;
pub mod gen;
pub mod graph;
pub mod map;
pub mod markov;
pub mod sample;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use dynamics::{DynamicsError, FixedLocus, GraphPoint, PeriodicCensus};
pub use forcing::{ForcedSet, ForcingOrder};
pub use graph::{
    ChainVector, CycleBasis, EdgeId, Graph, GraphError, Path, SignedEdge, SpanningTree, VertexId,
};
pub use map::{MapError, Permutation, VertexMap};
pub use markov::{IntMatrix, MarkovError, OrientedMarkovGraph, Walk};
