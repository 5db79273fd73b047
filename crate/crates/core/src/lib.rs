//! Exact computations with bound quiver algebras, Brauer graph algebras,
//! tilting mutation, crystals and decomposition matrices.

pub mod algebra;
pub mod brauer;
pub mod cli;
pub mod crystal;
pub mod decomp;
pub mod error;
pub mod fixtures;
pub mod homotopy;
pub mod linalg;
pub mod poly;
pub mod presentation;
pub mod quiver;
pub mod report;
pub mod scalar;
pub mod wild;

pub use error::{Error, Result};
