//! Exact computation of q-deformed metallic numbers, their Hankel continued
//! fractions (H-fractions) and the Hankel determinants of their shifts.

pub mod algebra;
pub mod cfrac;
pub mod cli;
pub mod error;
pub mod hfrac;
pub mod json;
pub mod qseries;
pub mod verify;

pub use error::{Error, Result};
