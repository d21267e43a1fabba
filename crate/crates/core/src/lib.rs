//! Exact symbolic engine for the one-leg R-matrix entries and the
//! Mickelsson step-algebra generators of the quantum groups of types B, C
//! and D, together with machine checks of the identities they satisfy.

pub mod coeff;
pub mod error;
pub mod mickelsson;
pub mod ncalg;
pub mod render;
pub mod report;
pub mod rmatrix;
pub mod rootdata;
pub mod serre;
pub mod suites;

pub use error::{Error, Result};
