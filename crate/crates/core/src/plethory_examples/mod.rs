//! The worked examples: the Lambda ring scheme with big Witt arithmetic, the
//! divided power algebra, the identity/nil/formal-completion schemes and the
//! idempotent (initial) scheme, plus the symmetric-function oracle powering
//! the multiplicative costructure and plethysm.

pub mod divided;
pub mod lambda;
pub mod plethysm;
pub mod small;
pub mod symfun;
pub mod witt;

pub use divided::divided_powers;
pub use plethysm::{lambda_comonoid, PlethoryData};
pub use lambda::lambda_structure;
pub use small::{formal_completion_scheme, identity_scheme, idempotent_scheme, nil_scheme};
pub use witt::{witt_ghost, WittRing, WittVector};
pub use symfun::{ghost_components, newton_polynomial, plethysm, SymmetricOracle};
