//! Verification toolkit for parity `[a,b]`-factors and spectral extremal
//! graph families.
//!
//! * [`graph`] and [`graph6`]: bitset graphs and their ASCII encoding.
//! * [`constructions`]: the extremal families with labelled blocks.
//! * [`factor`]: two independent parity-factor deciders with certificates.
//! * [`spectral`]: spectral radius, equitable quotients and closed-form bounds.
//! * [`harness`]: batch sweeps, parameter grids and the seeded survey.

pub mod constructions;
pub mod exec;
pub mod factor;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod spectral;

pub use exec::Execution;
pub use graph::{Graph, GraphBuilder, GraphError, VertexSet};
