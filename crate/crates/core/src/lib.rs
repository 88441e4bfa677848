//! Edge-deletion distance to monotone graph properties.
//!
//! The crate is organised around the quantity `E'_F(G)`: the minimum number
//! of edges to delete from `G` so that it contains no member of a forbidden
//! family `F` as a (not necessarily induced) subgraph.
//!
//! * [`graph`]: dense bit-matrix graphs, constructions and text formats.
//! * [`oracles`]: exact brute-force and branch-and-bound ground truth.
//! * [`regularity`]: regular pairs, partition refinement and the
//!   pair-of-partitions construction.
//! * [`approx`]: the partition → reduced graph → exact solve pipeline and the
//!   random induced subgraph estimator.
//! * [`hardness`]: finite-field pseudo-random graphs and the reduction
//!   instances built from them.
//! * [`extremal`]: Turán counts, cut rounding and the minimum-degree harness.

pub mod approx;
pub mod error;
pub mod extremal;
pub mod generators;
pub mod graph;
pub mod hardness;
pub mod oracles;
mod par;
pub mod rational;
pub mod regularity;

pub use error::{Error, Result};
pub use graph::{Graph, GraphBuilder, VertexSet, WeightedCompleteGraph};
pub use par::configure_threads;
pub use rational::Rational;
