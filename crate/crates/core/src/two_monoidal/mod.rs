//! The two monoidal structures on formal bimodules and formal algebra
//! schemes: composition products, the Sweedler tensor, the 2-monoidal /
//! bimonoid / bilax coherence checkers, the linearizations of the Lambda
//! plethory, and the dualization functors.

pub mod bimod;
pub mod checks;
pub mod compose;
pub mod duality;
pub mod linearize;
pub mod sweedler;

pub use checks::{check_bilax_q_on_lambda, check_bimonoid, check_two_monoidal, TwoMonoidalData};
pub use compose::{compose_levels, composition_matches, Composite, SymbolicPoints};
pub use duality::duality_roundtrip;
pub use linearize::{linearize_lambda, Side};
pub use sweedler::sweedler_product;
