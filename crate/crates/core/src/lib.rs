//! Exact symbolic machinery for duality identities between β-ensembles.
//!
//! The crate is layered bottom-up:
//!
//! - [`exact`]: rationals, Gaussian rationals, quadratic extensions and sparse
//!   multivariate polynomials.
//! - [`partition`]: partitions, Young-diagram statistics and α-deformed hooks.
//! - [`symfunc`]: symmetric functions in the monomial, power-sum and Jack bases.
//! - [`moments`]: Gaussian and chiral Jack averages and the duality relations.
//! - [`dunkl`]: Dunkl-type Laplacians, multivariate Hermite/Laguerre polynomials
//!   and the polynomial duality checks.
//! - [`hypergeom`]: truncated hypergeometric series of two sets of variables.
//!
//! Every check returns a [`report::CheckReport`] rather than panicking, so that
//! callers can aggregate verdicts.

pub mod dunkl;
pub mod error;
pub mod exact;
pub mod hypergeom;
pub mod moments;
pub mod partition;
pub mod report;
pub mod symfunc;

pub use error::{Error, Result};
pub use exact::{rat, GaussRat, MPoly, QuadExt, Rat, RatFunc};
pub use partition::Partition;
pub use report::CheckReport;
