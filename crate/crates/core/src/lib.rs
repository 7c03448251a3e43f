//! Exact Askey-Wilson difference calculus with Nevanlinna-theory harnesses.
//!
//! Functions of `x` are modelled through `x = (z + 1/z)/2` with `q = s^2`
//! for a rational `0 < s < 1`, so every operator identity can be checked by
//! exact coefficient comparison.

pub mod error;
pub mod awops;
pub mod awwronskian;
pub mod cli;
pub mod config;
pub mod decomp;
pub mod linalg;
pub mod nevanlinna;
pub mod qcore;
pub mod smt;

pub use error::{Error, Result};
