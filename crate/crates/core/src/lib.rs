//! Exact stationary distribution of the open-boundary TASEP through Catalan
//! tableaux, weighted lattice paths and determinant formulas.

pub mod binom;
pub mod cli;
pub mod closedforms;
pub mod determinants;
pub mod error;
pub mod poly;
pub mod shapes;
pub mod paths;
pub mod tableaux;
pub mod tasep;
pub mod verify;

pub use error::{Error, Result};
pub use poly::{BivarPoly, Rat, Substitution, UniPoly};
pub use shapes::{Shape, Site, TasepState};
