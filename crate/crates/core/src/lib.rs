//! Exact polymatroid Tutte polynomials for integer polymatroids.
//!
//! A polymatroid on the ground set `[n]` is described by its submodular rank
//! table (see [`polycore`]). From it the crate enumerates the integer bases of
//! the base polytope, computes internal and external activities, assembles
//! `J_P(x, y)` with exact integer coefficients, and runs a battery of
//! structural checks on explicit and randomly generated instances.
//!
//! Element indices are 0-based in the library API. User-facing output (the
//! CLI, JSON logs, witnesses) uses 1-based element names.

pub mod basis;
pub mod error;
pub mod polyalg;
pub mod polycore;
pub mod report;
pub mod tutte;
pub mod verify;

pub use basis::{ActivityProfile, BasisVector, TightFamily};
pub use error::{Error, Result};
pub use polyalg::{BivariatePolynomial, Rational, UnivariateRationalPolynomial};
pub use polycore::{
    Hypergraph, Instance, MatroidOracle, Polymatroid, RankFunction, RankSpec, SubsetMask,
};
pub use report::CheckReport;
