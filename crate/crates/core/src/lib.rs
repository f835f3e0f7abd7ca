//! Toric-degeneration certificates for the secant varieties of the Veronese
//! threefold.
//!
//! The crate builds regular subdivisions of the simplex `Δ_d`, places disjoint
//! witness units (tangent tetrahedra, limit tetrahedra, Segre cubes) inside
//! them, verifies the resulting packings exactly, and cross-checks them
//! against a finite-field rank oracle for double-point interpolation.
//!
//! Modules:
//! - [`lattice`]: exact lattice-point and convex-polytope geometry.
//! - [`degeneration`]: subdivisions, lifting functions, regularity.
//! - [`certificates`]: units, certificates, configurations for every `d ≥ 5`.
//! - [`packing`]: deterministic backtracking search for unit packings.
//! - [`oracle`]: ranks of Terracini matrices over prime fields.

pub mod certificates;
pub mod degeneration;
pub mod error;
pub mod frame;
pub mod lattice;
pub mod oracle;
pub mod packing;

pub use error::{Error, Result};
pub use lattice::{HalfSpace, LatticePoint, Polytope, RationalPoint};
