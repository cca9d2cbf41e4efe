//! Finite-dimensional Hopf *-algebras from structure constants and group
//! data: duals, doubles, bicrossproducts, cocycle bismash products and
//! twists, with numerical checks of every axiom and of compactness.

pub mod constructions;
pub mod error;
pub mod groups;
pub mod hopf;
pub mod io;
pub mod numeric;
pub mod report;
pub mod star;

pub use error::Error;
pub use report::{Check, Status, VerificationReport};

/// Default residual tolerance.
pub const DEFAULT_TOL: f64 = 1e-9;
