//! Hodge-theoretic and D-module invariants of determinantal varieties: rank
//! orbits in general, skew-symmetric and symmetric matrix spaces.

pub mod cartan;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod invariants;
pub mod poly;
pub mod qcomb;
pub mod render;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
pub use geometry::{Case, OrbitId, Space};
pub use poly::{MPoly, Monomial, Substitution, Var};
