//! Exact-arithmetic laboratory for walk-based vertex invariants.
//!
//! The crate computes walk and closed-walk count sequences of vertices,
//! classifies vertex pairs (similar, pseudosimilar, cospectral,
//! walk-equivalent), enumerates trees and small connected graphs, and runs
//! executable checks of the decisiveness results, the `n + m` walk-length
//! bound and its tightness families, and the random-graph labeling
//! experiments.
//!
//! Everything that touches a walk count is exact: counts are
//! [`num_bigint::BigInt`]s and all linear algebra is over the rationals.

#![forbid(unsafe_code)]

pub mod algebra;
pub mod enumeration;
pub mod equivalence;
mod error;
pub mod graph;
pub mod lab;
pub mod walk;

pub use error::{Error, Result};
pub use graph::{Fixture, Graph, RootedGraph};
