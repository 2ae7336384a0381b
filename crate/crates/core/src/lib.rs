//! Exact Smith normal forms for matrices in companion rings over the integers,
//! and abelianizations of cyclically presented groups built on them.

pub mod arith;
pub mod companion;
pub mod error;
pub mod groups;
pub mod matrix;

pub use arith::{IntPoly, ModPoly};
pub use error::{Error, Result};
pub use matrix::{IntMatrix, SmithDecomposition};
