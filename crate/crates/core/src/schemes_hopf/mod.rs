//! Formal module/algebra scheme structure data on towers, the axiom
//! validator, and the four linearization functors: the cofree coalgebra, the
//! free algebra on a bimodule, indecomposables, and primitives.

pub mod gamma;
pub mod pq;
pub mod points;
pub mod structure;
pub mod validate;

pub use structure::{FormalBimodule, SchemeStructure};
pub use pq::{check_adjunctions, indecomposables, primitives};
pub use validate::validate;
