//! Deformed permutahedra encoded by integer submodular functions, their shuffle
//! product, and the two combinatorial families it produces: multiplihedra
//! (painted trees) and biassociahedra (bitrees).
//!
//! Ground sets are `0..n` internally. Anything printed for humans is 1-based.

pub mod bitrees;
pub mod combinatorics;
pub mod error;
pub mod genfun;
pub mod geometry;
pub mod graphs;
pub mod lattice;
pub mod painted;
pub mod subset;
pub mod tables;
pub mod trees;

pub use error::{Error, Result};
