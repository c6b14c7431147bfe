//! Combinatorics of q-Whittaker polynomials: fillings and their statistics,
//! Gelfand-Tsetlin patterns with partition overlays, splicing, the
//! statistic-preserving bijections, CL-basis words, character limits
//! and coloured lattice paths.

pub mod bijections;
pub mod characters;
pub mod clbasis;
pub mod error;
pub mod fillings;
pub mod lattice;
pub mod par;
pub mod patterns;
pub mod qpoly;
pub mod shapes;
pub mod splice;
pub mod verify;

pub use error::{Error, Result};
