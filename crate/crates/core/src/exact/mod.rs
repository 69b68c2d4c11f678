//! Exact arithmetic: rationals, ℚ(i), quadratic extensions ℚ[t]/(t² − d),
//! sparse multivariate polynomials over any of them, and rational functions.

mod mpoly;
mod ratfunc;
mod scalar;

pub use mpoly::{Exps, MPoly};
pub use ratfunc::RatFunc;
pub use scalar::{fmt_rat, int, parse_rat, rat, rat_pow, rat_to_f64, Coeff, GaussRat, QuadExt, Rat};

/// The α grid on which identities in α are checked.
pub fn alpha_grid() -> Vec<Rat> {
    [(1, 3), (1, 2), (2, 3), (1, 1), (3, 2), (2, 1), (3, 1)].iter().map(|&(p, q)| rat(p, q)).collect()
}
