//! Algebraic immunity of Boolean functions: exact computation through GF(2)
//! annihilator linear algebra, lower-bound certificates obtained by
//! restricting functions to affine subspaces, and constructions of
//! symmetric and rotation-symmetric functions with high algebraic immunity.

pub mod annihilator;
pub mod boolean;
pub mod bounds;
pub mod cli;
mod error;
pub mod families;
pub mod math;

pub use boolean::{AffineForm, AffineSubspace, AnfPolynomial, BooleanFunction, Degree};
pub use error::{Error, Result};
