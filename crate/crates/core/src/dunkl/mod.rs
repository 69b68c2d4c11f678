//! Dunkl-type Laplacians on symmetric polynomials and everything built from
//! their exponentials.
//!
//! - Gaussian: Δ^{(α)} = Σ_i (∂_i + (2/α) Σ_{j≠i} 1/(x_i − x_j)) ∂_i.
//! - Chiral: Δ^{(α,γ)} = Σ_i (x_i ∂_i + (2/α) Σ_{j≠i} x_i/(x_i − x_j) + γ + 1) ∂_i.
//!
//! Both act on a chosen subset of the variables of an [`MPoly`]; the
//! polynomial must be symmetric in that subset so the pair quotients are
//! exact.

mod duality;
mod lassalle;
mod multiple;

pub use duality::*;
pub use lassalle::*;
pub use multiple::*;

use crate::error::{Error, Result};
use crate::exact::{int, Coeff, MPoly, Rat};

/// A Laplacian acting on a block of variables.
#[derive(Debug, Clone, PartialEq)]
pub enum Laplacian {
    Gaussian { alpha: Rat },
    Chiral { alpha: Rat, gamma: Rat },
}

impl Laplacian {
    pub fn apply<C: Coeff>(&self, f: &MPoly<C>, vars: &[usize]) -> Result<MPoly<C>> {
        match self {
            Laplacian::Gaussian { alpha } => delta_gaussian(f, vars, alpha),
            Laplacian::Chiral { alpha, gamma } => delta_chiral(f, vars, alpha, gamma),
        }
    }

    /// Σ_k c^k Δ^k f / k!, which terminates because Δ lowers the degree.
    pub fn exp<C: Coeff>(&self, f: &MPoly<C>, vars: &[usize], c: &Rat) -> Result<MPoly<C>> {
        let mut acc = f.clone();
        let mut term = f.clone();
        let mut k = 0i64;
        loop {
            k += 1;
            term = self.apply(&term, vars)?.scale(&(c / int(k)));
            if term.is_zero() {
                return Ok(acc);
            }
            acc = &acc + &term;
        }
    }
}

/// Keeps the first `n` variables of a polynomial whose other exponents are zero.
pub(crate) fn leading_block<C: Coeff>(p: &MPoly<C>, n: usize) -> MPoly<C> {
    debug_assert!(p.terms().all(|(e, _)| e[n..].iter().all(|&x| x == 0)));
    MPoly::from_terms(n, p.terms().map(|(e, c)| (e[..n].to_vec(), c.clone())))
}

fn require_symmetric<C: Coeff>(f: &MPoly<C>, vars: &[usize]) -> Result<()> {
    if f.is_symmetric_in(vars) {
        Ok(())
    } else {
        Err(Error::NonSymmetric)
    }
}

/// Δ^{(α)} f = Σ ∂_i² f + (2/α) Σ_{i<j} (∂_i f − ∂_j f)/(x_i − x_j).
pub fn delta_gaussian<C: Coeff>(f: &MPoly<C>, vars: &[usize], alpha: &Rat) -> Result<MPoly<C>> {
    require_symmetric(f, vars)?;
    let mut acc = MPoly::zero(f.nvars());
    let mut pair = MPoly::zero(f.nvars());
    for (a, &i) in vars.iter().enumerate() {
        acc = &acc + &f.partial(i).partial(i);
        for &j in &vars[a + 1..] {
            pair = &pair + &f.divided_difference(i, j)?;
        }
    }
    Ok(&acc + &pair.scale(&(int(2) / alpha)))
}

/// Δ^{(α,γ)} f = Σ (x_i ∂_i² + (γ+1) ∂_i) f
///             + (2/α) Σ_{i<j} (x_i ∂_i f − x_j ∂_j f)/(x_i − x_j).
pub fn delta_chiral<C: Coeff>(f: &MPoly<C>, vars: &[usize], alpha: &Rat, gamma: &Rat) -> Result<MPoly<C>> {
    require_symmetric(f, vars)?;
    let g1 = gamma + int(1);
    let mut acc = MPoly::zero(f.nvars());
    let mut pair = MPoly::zero(f.nvars());
    let euler: Vec<MPoly<C>> = vars.iter().map(|&i| f.partial(i).mul_var(i)).collect();
    for (a, &i) in vars.iter().enumerate() {
        let di = f.partial(i);
        acc = &acc + &(&di.partial(i).mul_var(i) + &di.scale(&g1));
        for (b, &j) in vars.iter().enumerate().skip(a + 1) {
            pair = &pair + &(&euler[a] - &euler[b]).div_by_difference(i, j)?;
        }
    }
    Ok(&acc + &pair.scale(&(int(2) / alpha)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn laplacian_of_power_sum() {
        let a = rat(2, 3);
        let n = 3;
        let p2 = (0..n).fold(MPoly::<Rat>::zero(n), |acc, i| &acc + &MPoly::var(n, i).pow(2));
        let vars: Vec<usize> = (0..n).collect();
        let d = delta_gaussian(&p2, &vars, &a).unwrap();
        let nn = int(n as i64);
        let expected = int(2) * &nn + int(2) * &nn * (&nn - int(1)) / &a;
        assert_eq!(d, MPoly::constant(n, expected));
    }

    #[test]
    fn chiral_laplacian_of_x() {
        let g = rat(3, 4);
        let x = MPoly::<Rat>::var(1, 0);
        let d = delta_chiral(&x, &[0], &int(1), &g).unwrap();
        assert_eq!(d, MPoly::constant(1, &g + int(1)));
    }

    #[test]
    fn non_symmetric_input_is_rejected() {
        let f = MPoly::<Rat>::var(2, 0);
        assert_eq!(delta_gaussian(&f, &[0, 1], &int(1)), Err(Error::NonSymmetric));
    }
}
