//! Chains in the lattice of binary paths and their encodings by shifted
//! tableaux.
//!
//! Paths of length `n` over the steps `u` and `d`, ordered pointwise by
//! height, form a distributive lattice. Multichains from a path `P` to the
//! top `u^n` correspond to shifted tableaux of shape `λ(P)`; small-interval
//! chains correspond to increasing tableaux and saturated chains to standard
//! ones. The crate provides the lattice operations, the tableau side, the
//! bijections between the two, closed-form and recursive counts of minimal
//! small-interval chains, and slow reference enumerations to check them.

pub mod bijections;
pub mod cli;
pub mod error;
pub mod formulas;
pub mod lattice;
pub mod oracles;
pub mod paths;
pub mod render;
pub mod report;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use lattice::{Comparison, Multichain, MultichainClass};
pub use paths::{HeightProfile, KEncoding, Path, PathClass, Step};
pub use tableaux::{Shape, ShiftedTableau, TableauClass};
