//! Exact `F_p` computations around Steiner bundles on `P³`: multiplication
//! maps of matrices of linear forms, cohomology tables of kernel bundles,
//! rank invariants of F-forms, Jordan stratification tables, and the numeric
//! side of the curve construction with predominant linear resolution.

pub mod cli;
pub mod error;
pub mod exactalg;
pub mod multilin;
pub mod pwcurves;
pub mod report;
pub mod rng;
pub mod steiner;
pub mod strata;
pub mod subspace;

pub use error::{Error, Result};
pub use exactalg::{DenseMatrix, FieldElem, PrimeField, DEFAULT_PRIME};
