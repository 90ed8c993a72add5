//! Spectral radius of irregular graphs with bounded maximum degree.
//!
//! The crate covers four connected pieces of work:
//!
//! * the extremal family [`constructions::build_bn`] of connected subcubic
//!   bipartite graphs and an exhaustive, isomorphism-free check of its
//!   maximality ([`enumeration`]);
//! * eigenvector-guided graph surgery: two-switches, bad pairs and neighbour
//!   shifts ([`rewiring`]);
//! * lower bounds on the spectral gap `Δ − λ₁` for irregular graphs and for
//!   proper subgraphs of regular graphs ([`bounds`]);
//! * the numerics underneath: a shifted power iteration, a dense Jacobi
//!   oracle and closed forms for paths and `K_n` minus an edge ([`spectral`]).
//!
//! Numerical routines are generic over the scalar type (see [`scalar`]); the
//! aliases below fix the common `f64` instantiation, and [`Exact`] is the
//! rational type used for exact formula comparisons.

pub mod bounds;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod rewiring;
pub mod scalar;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{Bipartition, DegreeSequence, Graph, Side};
pub use scalar::{RealScalar, Scalar};

/// Exact rational scalar for formula comparisons.
pub type Exact = num_rational::Ratio<i128>;

/// Spectral data in double precision.
pub type SpectralResult64 = spectral::SpectralResult<f64>;
/// Spectral data in single precision.
pub type SpectralResult32 = spectral::SpectralResult<f32>;
/// Bound report in double precision.
pub type BoundReport64 = bounds::BoundReport<f64>;
/// Two-switch with double-precision evidence.
pub type SwapMove64 = rewiring::SwapMove<f64>;
/// Hill-climb trace in double precision.
pub type ClimbTrace64 = rewiring::ClimbTrace<f64>;
