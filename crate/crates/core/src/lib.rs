//! Generalised hooks on l-symbols, cores and quotients of multipartitions,
//! the a-function, and exact Schur elements of Ariki–Koike algebras.

pub mod combinatorics;
pub mod cores;
pub mod error;
pub mod harness;
pub mod hooks;
pub mod schur;

pub use error::{Error, Result};
