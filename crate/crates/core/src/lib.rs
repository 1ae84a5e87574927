pub mod catalog;
pub mod cli;
pub mod constants;
pub mod error;
pub mod geometry;
pub mod integrals;
pub mod linalg;
pub mod observables;
pub mod optimize;
pub mod orbitals;
pub mod quadrature;
pub mod secular;

pub use error::{Error, Result};
