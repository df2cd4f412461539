//! Exact computation kernel for a family of co-Frobenius Hopf algebras.

pub mod scalars;

pub use scalars::{Field, FieldSpec, Scalar, ScalarError};

/// Kernel version, echoed in reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub mod algebra;
pub mod bounds;
pub mod coanalysis;
pub mod comodfusion;
pub mod dualization;
pub mod families;
pub mod lin;
pub mod linalg;
pub mod qcombo;
pub mod report;
