//! Riordan graphs over GF(2).
//!
//! Builds the labelled graphs `G_n(g, f)` whose lower adjacency triangle is
//! read off the binary Riordan matrix `(zg, f)_n`, computes their distances,
//! cliques and colorings, and checks diameter statements about the
//! io-decomposable Bell family against exhaustive computation.

pub mod analysis;
pub mod binseries;
pub mod bits;
pub mod error;
pub mod exec;
pub mod golden;
pub mod rgraph;
pub mod riordan;
pub mod search;

pub use binseries::{BinarySeries, SeriesFamily};
pub use error::{Error, Result};
pub use exec::Exec;
pub use rgraph::{Graph, Provenance, RiordanGraph};
pub use riordan::{ASequence, BinaryTriangle, RiordanPair};
