//! Heegaard Floer H-functions and surgery d-invariants for knots and
//! two-component L-space links with linking number zero.

pub mod cw;
pub mod error;
pub mod hfunc;
pub mod input;
pub mod invariants;
pub mod poly;
pub mod surgery;
pub mod synthetic;

pub use error::{Error, Result};
