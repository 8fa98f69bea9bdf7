//! Exact-arithmetic sparse graded-commutative polynomial algebra with weight
//! truncation, plus integer/field linear algebra organized per weight.

pub mod ring;
pub mod matrix;
pub mod poly;
pub mod map;
pub mod tensor;
pub mod json;

pub use map::{AlgebraMap, GradedModule, LinearMapByWeight};
pub use matrix::{MatExact, SmithForm};
pub use poly::{Generator, Monomial, Parity, Polynomial, RewriteRule, TruncatedAlgebra};
pub use ring::{CoefficientRing, Scalar};
