//! Exact enumeration engine for (m,t)-Dyck and (m,t)-Schröder paths.
//!
//! The crate pairs every closed-form counting formula with an independent
//! route to the same numbers:
//!
//! - [`paths`] generates the path families by brute force and computes their
//!   statistics; it is the ground truth for everything else.
//! - [`polynomial`] holds exact bivariate polynomials and the rational
//!   variable substitutions that relate the generating polynomials.
//! - [`closedform`] evaluates the explicit coefficient formulas, for negative
//!   `m` as well.
//! - [`series`] solves the functional equations as truncated power series and
//!   checks Lagrange–Bürmann coefficient extractions.
//! - [`bijection`] maps Dyck paths with marked valleys to small Schröder paths.
//! - [`reciprocity`] checks the negative-`m` identities and the lattice-point
//!   counts in dilations of the fundamental simplex.
//! - [`arrangement`] enumerates dominant regions and flats of the m-Catalan
//!   arrangement.
//! - [`transforms`] collects the substitutions between families, and
//!   [`verify`] runs all of the above as grid suites of [`report::Comparison`]s.

pub mod arrangement;
pub mod bijection;
pub mod closedform;
pub mod error;
pub mod paths;
pub mod polynomial;
pub mod reciprocity;
pub mod report;
pub mod series;
pub mod transforms;
pub mod verify;

pub use closedform::FormulaFamily;
pub use error::{Error, Result};
pub use paths::{LatticePath, PathStats, Statistic, Step};
pub use polynomial::{BivarPoly, RationalFn, SubstitutionSpec};
pub use series::TruncatedSeries;
