//! Exact symbolic calculus on degree-truncated towers of graded-commutative
//! algebras: formal (algebra) scheme structure data, cofree/free functors,
//! primitives and indecomposables, Witt arithmetic on the big Witt scheme,
//! and machine checkers for 2-monoidal, bimonoid, and bilax coherence.
//!
//! All arithmetic is exact (arbitrary-precision integers, reduced rationals,
//! canonical residues). All values are immutable after construction and safe
//! to share across threads.

pub mod exact_algebra;
pub mod pro_tower;
pub mod report;
pub mod schemes_hopf;
pub mod plethory_examples;
pub mod two_monoidal;

pub use exact_algebra::ring::{CoefficientRing, Scalar};
pub use exact_algebra::poly::{Generator, Monomial, Parity, Polynomial, TruncatedAlgebra};
pub use exact_algebra::map::AlgebraMap;
pub use report::{AxiomReport, CheckOutcome};
