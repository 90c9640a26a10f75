//! Linear codes over finite fields: extensions of codes, covering radii and
//! deep holes of MDS codes, and the standard constructions around them.

pub mod cli;
pub mod code;
pub mod codefile;
pub mod constructions;
pub mod covering;
pub mod error;
pub mod field;
pub mod matrix;
pub mod verify;

pub use code::{LinearCode, DEFAULT_BUDGET};
pub use covering::{covering_radius, CoveringReport};
pub use error::{Error, Result};
pub use field::{Field, FieldElement};
pub use matrix::Matrix;
