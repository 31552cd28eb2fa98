//! Exact structure-constant toolkit for finite-dimensional Hom-associative
//! dialgebras: axiom checking, derivations, centroids, constructions,
//! isomorphism invariants and a built-in classification catalog.

pub mod algebra;
pub mod axioms;
pub mod catalog;
pub mod centroids;
pub mod cli;
pub mod constructions;
pub mod derivations;
pub mod error;
pub mod invariants;
pub mod scalar;
pub mod solver;

pub use algebra::{HomDialgebra, LinearMap, MultTable, Side, Vector};
pub use error::{Error, Result};
pub use scalar::{Backend, Scalar};
