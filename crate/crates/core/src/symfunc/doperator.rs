//! The second-order operator
//! D = Σ α x_i² ∂_i² + 2 Σ_{i≠j} x_i x_j/(x_i − x_j) ∂_i
//! and the Jack polynomials characterized as its monic triangular
//! eigenvectors. Used only to validate the Gram–Schmidt construction.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};

use super::{from_mpoly, jack, monomial_mpoly, tables, to_mpoly, Basis, SymFunc};
use crate::error::{Error, Result};
use crate::exact::{int, MPoly, Rat};
use crate::partition::Partition;

/// The α-free pieces A = Σ x_i² ∂_i² and B = Σ_{i<j} x_i x_j (∂_i − ∂_j)/(x_i − x_j),
/// so that D = α A + 2 B.
fn pieces(f: &MPoly<Rat>) -> Result<(MPoly<Rat>, MPoly<Rat>)> {
    let n = f.nvars();
    let mut a = MPoly::zero(n);
    let mut b = MPoly::zero(n);
    for i in 0..n {
        a = &a + &f.partial(i).partial(i).mul_var(i).mul_var(i);
        for j in i + 1..n {
            b = &b + &f.divided_difference(i, j)?.mul_var(i).mul_var(j);
        }
    }
    Ok((a, b))
}

pub fn apply_d_mpoly(f: &MPoly<Rat>, alpha: &Rat) -> Result<MPoly<Rat>> {
    let (a, b) = pieces(f)?;
    Ok(&a.scale(alpha) + &b.scale(&int(2)))
}

/// D applied to `f` in N variables, read back in the monomial basis.
pub fn apply_d(f: &SymFunc, alpha: &Rat, n: usize) -> Result<SymFunc> {
    let g = apply_d_mpoly(&to_mpoly(f, n)?, alpha)?;
    Ok(from_mpoly(&g)?.remove(&f.degree).unwrap_or_else(|| SymFunc::zero(Basis::Monomial, alpha.clone(), f.degree)))
}

/// Matrices of A and B on monomials of one degree, in as many variables as
/// the degree. Entry [ν][μ] is the coefficient of m_ν in (op m_μ).
struct DMatrices {
    a: Vec<Vec<Rat>>,
    b: Vec<Vec<Rat>>,
}

fn d_matrices(degree: u32) -> Result<Arc<DMatrices>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<DMatrices>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(m) = cache.read().unwrap().get(&degree) {
        return Ok(m.clone());
    }
    let t = tables(degree)?;
    let k = t.parts.len();
    let nv = degree as usize;
    let vars: Vec<usize> = (0..nv).collect();
    let mut a = vec![vec![Rat::zero(); k]; k];
    let mut b = vec![vec![Rat::zero(); k]; k];
    for (mu_i, mu) in t.parts.iter().enumerate() {
        let (pa, pb) = pieces(&monomial_mpoly::<Rat>(mu, nv, &vars))?;
        for (nu_i, nu) in t.parts.iter().enumerate() {
            let mut e = nu.parts().to_vec();
            e.resize(nv, 0);
            a[nu_i][mu_i] = pa.coeff(&e);
            b[nu_i][mu_i] = pb.coeff(&e);
        }
    }
    let m = Arc::new(DMatrices { a, b });
    Ok(cache.write().unwrap().entry(degree).or_insert(m).clone())
}

/// Closed form of the measured eigenvalue: 2(α n(λ') − n(λ)).
pub fn eigenvalue(lambda: &Partition, alpha: &Rat) -> Rat {
    int(2) * printed_eigenvalue(lambda, alpha)
}

/// The eigenvalue formula as commonly printed, α n(λ') − n(λ). It is off by
/// a factor of two for this normalization of D.
pub fn printed_eigenvalue(lambda: &Partition, alpha: &Rat) -> Rat {
    alpha * int(lambda.conjugate().n_statistic() as i64) - int(lambda.n_statistic() as i64)
}

/// P_λ as the monic eigenvector of D that is triangular in dominance order,
/// solved exactly from the matrix of D in |λ| variables.
pub fn jack_via_d_operator(lambda: &Partition, alpha: &Rat) -> Result<SymFunc> {
    let n = lambda.weight();
    let t = tables(n)?;
    let dm = d_matrices(n)?;
    let k = t.parts.len();
    let two = int(2);
    let d = |r: usize, c: usize| &dm.a[r][c] * alpha + &dm.b[r][c] * &two;
    for r in 0..k {
        for c in 0..k {
            if !d(r, c).is_zero() && !t.parts[r].dominated_by(&t.parts[c]) {
                return Err(Error::Usage(format!(
                    "D is not triangular: m_{} occurs in D m_{}",
                    t.parts[r], t.parts[c]
                )));
            }
        }
    }
    let li = t.idx(lambda);
    let e = d(li, li);
    let mut c = vec![Rat::zero(); k];
    c[li] = Rat::one();
    // Rows below λ in lexicographic order, top-down.
    for nu in li + 1..k {
        if !t.parts[nu].dominated_by(lambda) {
            continue;
        }
        let gap = &e - d(nu, nu);
        if gap.is_zero() {
            return Err(Error::Usage(format!("degenerate eigenvalue at {}", t.parts[nu])));
        }
        let s: Rat = (li..nu).map(|mu| &c[mu] * d(nu, mu)).sum();
        c[nu] = s / gap;
    }
    SymFunc::from_coeffs(Basis::Monomial, alpha.clone(), n, t.parts.iter().cloned().zip(c))
}

/// Result of applying D to P_λ in N variables.
#[derive(Debug, Clone)]
pub struct EigenReport {
    pub proportional: bool,
    /// D P_λ / P_λ when proportional.
    pub eigenvalue: Option<Rat>,
    /// The printed formula, kept for comparison.
    pub printed: Rat,
}

pub fn jack_eigen_check(lambda: &Partition, alpha: &Rat, n: usize) -> Result<EigenReport> {
    let p = jack(lambda, alpha)?;
    let dp = apply_d(&p, alpha, n)?;
    let printed = printed_eigenvalue(lambda, alpha);
    let lead = p.coeff(lambda);
    let e = dp.coeff(lambda) / lead;
    let pn = from_mpoly(&to_mpoly(&p, n)?)?.remove(&p.degree);
    let proportional = match pn {
        Some(pn) => dp.coeffs() == pn.scale(&e).coeffs(),
        None => dp.is_zero(),
    };
    Ok(EigenReport { proportional, eigenvalue: proportional.then_some(e), printed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::partition::part;

    #[test]
    fn one_variable_eigenvalue_is_twice_printed() {
        let a = rat(5, 2);
        let r = jack_eigen_check(&part(&[2]), &a, 1).unwrap();
        assert!(r.proportional);
        assert_eq!(r.eigenvalue.unwrap(), int(2) * &a);
        assert_eq!(r.printed, a);
    }

    #[test]
    fn triangular_solve_reproduces_degree_three() {
        let a = rat(2, 3);
        for lam in crate::partition::partitions_of(3) {
            assert_eq!(jack_via_d_operator(&lam, &a).unwrap().coeffs(), jack(&lam, &a).unwrap().coeffs());
        }
    }
}
