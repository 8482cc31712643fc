//! Spectral radius, equitable quotients and closed-form spectral bounds.

mod bounds;
mod power;
mod quotient;
mod rotation;

use thiserror::Error;

use crate::graph::GraphError;

pub use bounds::{
    book_cubic, hn_profile_nonincreasing, hn_profile_value, hong_nikiforov_bound, CubicPoly,
};
pub use power::{spectral_radius, spectral_radius_default, PowerOptions, SpectralResult};
pub use quotient::{
    characteristic_polynomial, largest_real_root, quotient, quotient_rho, QuotientMatrix,
};
pub use rotation::edge_rotation;

/// Margin for inequalities the theory says are strict.
pub const STRICT_MARGIN: f64 = 1e-10;
/// Band within which two computed spectral radii count as equal.
pub const EQUALITY_BAND: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("power iteration stopped after {iterations} iterations with residual {residual:e}")]
    NotConverged { iterations: usize, residual: f64 },
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error("parts do not partition the vertex set: {0}")]
    NotAPartition(String),
    #[error("partition is not equitable: vertex {vertex} has an irregular count into part {part}")]
    NotEquitable { vertex: usize, part: usize },
    #[error("invalid rotation: {0}")]
    BadRotation(String),
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error(transparent)]
    Graph(#[from] GraphError),
}
