//! Exact workbench for δ-Novikov and δ-Novikov–Poisson algebras.

pub mod algebra;
pub mod construct;
pub mod corpus;
pub mod error;
pub mod identity;
pub mod io;
pub mod linalg;
pub mod operad;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
