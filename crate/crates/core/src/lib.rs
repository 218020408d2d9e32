//! Quasi-cyclic codes over finite fields with complementary-dual checks
//! under Euclidean, Hermitian and symplectic inner products.
//!
//! Everything here is `no_std` with `alloc`; file formats and the command
//! line live in the companion `qclcd` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod gf;
pub mod code;
pub mod lcd;
pub mod linalg;
pub mod metrics;
pub mod polyring;
pub mod presets;
pub mod search;

pub use error::{Error, Result};
pub use gf::{Elem, Field};
pub use code::{LinearCode, QcDescriptor, QcGenerator};
pub use lcd::{LcdVerdict, OracleMode};
pub use linalg::{InnerProduct, Matrix};
pub use polyring::{Poly, Ring};
