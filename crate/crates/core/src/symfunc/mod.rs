//! Symmetric functions over ℚ in the monomial, power-sum and Jack bases.
//!
//! Functions are homogeneous and stored as sparse maps from partitions to
//! coefficients. Jack polynomials are built by Gram–Schmidt in the
//! α-deformed power-sum scalar product; [`doperator`] holds an independent
//! eigenvector construction used for validation.

pub mod cauchy;
pub mod doperator;
mod jack;
mod tables;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{usage, Error, Result};
use crate::exact::{int, rat_pow, Coeff, MPoly, Rat};
use crate::partition::Partition;

pub use jack::{jack, jack_degree, JackCache, JackEntry};
pub(crate) use tables::check_degree;
pub use tables::{degree_cap, power_sum_in_monomials, set_degree_cap, tables, BasisTables};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    #[serde(rename = "m")]
    Monomial,
    #[serde(rename = "p")]
    PowerSum,
    #[serde(rename = "jack")]
    Jack,
}

/// Homogeneous symmetric function. `alpha` is the Jack parameter used when
/// the basis is [`Basis::Jack`]; it is carried along otherwise.
#[derive(Clone, PartialEq)]
pub struct SymFunc {
    pub basis: Basis,
    pub alpha: Rat,
    pub degree: u32,
    coeffs: BTreeMap<Partition, Rat>,
}

impl SymFunc {
    pub fn zero(basis: Basis, alpha: Rat, degree: u32) -> Self {
        Self { basis, alpha, degree, coeffs: BTreeMap::new() }
    }

    pub fn from_coeffs(
        basis: Basis,
        alpha: Rat,
        degree: u32,
        coeffs: impl IntoIterator<Item = (Partition, Rat)>,
    ) -> Result<Self> {
        let mut f = Self::zero(basis, alpha, degree);
        for (p, c) in coeffs {
            if p.weight() != degree {
                return usage(format!("{p} has weight {} in degree {degree}", p.weight()));
            }
            f.add_term(p, c);
        }
        Ok(f)
    }

    /// A single basis element.
    pub fn basis_element(basis: Basis, alpha: Rat, lambda: &Partition) -> Self {
        let mut f = Self::zero(basis, alpha, lambda.weight());
        f.add_term(lambda.clone(), Rat::one());
        f
    }

    pub fn monomial(lambda: &Partition) -> Self {
        Self::basis_element(Basis::Monomial, Rat::one(), lambda)
    }

    pub fn power_sum(lambda: &Partition) -> Self {
        Self::basis_element(Basis::PowerSum, Rat::one(), lambda)
    }

    pub fn add_term(&mut self, p: Partition, c: Rat) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(p.clone()).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&p);
        }
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, Rat> {
        &self.coeffs
    }

    pub fn coeff(&self, p: &Partition) -> Rat {
        self.coeffs.get(p).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, r: &Rat) -> Self {
        let mut out = Self::zero(self.basis, self.alpha.clone(), self.degree);
        for (p, c) in &self.coeffs {
            out.add_term(p.clone(), c * r);
        }
        out
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        if self.degree != o.degree {
            return usage("adding symmetric functions of different degrees");
        }
        let o = o.to_basis(self.basis, &self.alpha)?;
        let mut out = self.clone();
        for (p, c) in &o.coeffs {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.scale(&-Rat::one()))
    }

    /// Re-expands in `target`; `alpha` selects the Jack family when either
    /// side is the Jack basis.
    pub fn to_basis(&self, target: Basis, alpha: &Rat) -> Result<Self> {
        if self.basis == target && (target != Basis::Jack || self.alpha == *alpha) {
            return Ok(self.clone());
        }
        let m = self.to_monomial()?;
        match target {
            Basis::Monomial => Ok(m),
            Basis::PowerSum => {
                let t = tables(self.degree)?;
                let mut out = Self::zero(Basis::PowerSum, self.alpha.clone(), self.degree);
                for (mu, c) in &m.coeffs {
                    for (j, r) in t.m_in_p[t.idx(mu)].iter().enumerate() {
                        out.add_term(t.parts[j].clone(), c * r);
                    }
                }
                Ok(out)
            }
            Basis::Jack => {
                // Peel off leading monomials in decreasing lexicographic
                // order; each Jack is monic and dominance-triangular.
                let mut rest = m.coeffs.clone();
                let mut out = Self::zero(Basis::Jack, alpha.clone(), self.degree);
                let jacks = jack_degree(self.degree, alpha)?;
                while let Some((lead, c)) = rest.iter().next_back().map(|(p, c)| (p.clone(), c.clone())) {
                    let e = &jacks.entries[jacks.index[&lead]];
                    for (mu, d) in &e.m {
                        let v = rest.entry(mu.clone()).or_insert_with(Rat::zero);
                        *v -= &c * d;
                        if v.is_zero() {
                            rest.remove(mu);
                        }
                    }
                    out.add_term(lead, c);
                }
                Ok(out)
            }
        }
    }

    fn to_monomial(&self) -> Result<Self> {
        let mut out = Self::zero(Basis::Monomial, self.alpha.clone(), self.degree);
        match self.basis {
            Basis::Monomial => return Ok(self.clone()),
            Basis::PowerSum => {
                let t = tables(self.degree)?;
                for (rho, c) in &self.coeffs {
                    for (j, r) in t.p_in_m[t.idx(rho)].iter().enumerate() {
                        out.add_term(t.parts[j].clone(), c * r);
                    }
                }
            }
            Basis::Jack => {
                let jacks = jack_degree(self.degree, &self.alpha)?;
                for (lam, c) in &self.coeffs {
                    for (mu, d) in &jacks.entries[jacks.index[lam]].m {
                        out.add_term(mu.clone(), c * d);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Power-sum coefficient vector in the order of [`tables`].
    pub(crate) fn p_vector(&self) -> Result<Vec<Rat>> {
        let t = tables(self.degree)?;
        let p = self.to_basis(Basis::PowerSum, &self.alpha)?;
        let mut v = vec![Rat::zero(); t.parts.len()];
        for (rho, c) in &p.coeffs {
            v[t.idx(rho)] = c.clone();
        }
        Ok(v)
    }

    /// Coefficient of p_ρ in the power-sum expansion.
    pub fn p_coeff(&self, rho: &Partition) -> Result<Rat> {
        if rho.weight() != self.degree {
            return Ok(Rat::zero());
        }
        Ok(self.to_basis(Basis::PowerSum, &self.alpha)?.coeff(rho))
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFunc[{:?}, alpha={}, deg {}]{{", self.basis, self.alpha, self.degree)?;
        for (i, (p, c)) in self.coeffs.iter().rev().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}: {c}")?;
        }
        write!(f, "}}")
    }
}

/// The combinatorial scalar product ⟨⟨p_λ|p_μ⟩⟩ = α^{ℓ(λ)} z_λ δ_{λμ}.
pub fn scalar_product(f: &SymFunc, g: &SymFunc, alpha: &Rat) -> Result<Rat> {
    if f.degree != g.degree {
        return Ok(Rat::zero());
    }
    let t = tables(f.degree)?;
    let (a, b) = (f.p_vector()?, g.p_vector()?);
    Ok((0..t.parts.len())
        .filter(|&i| !a[i].is_zero() && !b[i].is_zero())
        .map(|i| &a[i] * &b[i] * &t.z[i] * rat_pow(alpha, t.parts[i].len() as i32))
        .sum())
}

/// The automorphism ω_k: p_n ↦ (−1)^{n−1} k p_n. Result in the power-sum basis.
pub fn omega(f: &SymFunc, k: &Rat) -> Result<SymFunc> {
    let p = f.to_basis(Basis::PowerSum, &f.alpha)?;
    let mut out = SymFunc::zero(Basis::PowerSum, f.alpha.clone(), f.degree);
    for (rho, c) in &p.coeffs {
        let sign = if (rho.weight() - rho.len() as u32).is_multiple_of(2) { 1 } else { -1 };
        out.add_term(rho.clone(), c * int(sign) * rat_pow(k, rho.len() as i32));
    }
    Ok(out)
}

/// Product of two symmetric functions, returned in the power-sum basis.
pub fn multiply(f: &SymFunc, g: &SymFunc) -> Result<SymFunc> {
    let (a, b) = (f.to_basis(Basis::PowerSum, &f.alpha)?, g.to_basis(Basis::PowerSum, &g.alpha)?);
    let mut out = SymFunc::zero(Basis::PowerSum, f.alpha.clone(), f.degree + g.degree);
    for (r1, c1) in &a.coeffs {
        for (r2, c2) in &b.coeffs {
            out.add_term(r1.union(r2), c1 * c2);
        }
    }
    Ok(out)
}

/// Evaluates at a point of ℚ^N through the power-sum expansion.
pub fn evaluate(f: &SymFunc, points: &[Rat]) -> Result<Rat> {
    let p = f.to_basis(Basis::PowerSum, &f.alpha)?;
    let max = p.coeffs.keys().map(|r| r.part(0)).max().unwrap_or(0);
    let sums: Vec<Rat> = (0..=max).map(|k| points.iter().map(|x| rat_pow(x, k as i32)).sum()).collect();
    Ok(p.coeffs.iter().map(|(rho, c)| rho.parts().iter().fold(c.clone(), |acc, &k| acc * &sums[k as usize])).sum())
}

/// Value at (1, …, 1) with N entries.
pub fn specialize(f: &SymFunc, n: usize) -> Result<Rat> {
    let p = f.to_basis(Basis::PowerSum, &f.alpha)?;
    let nn = int(n as i64);
    Ok(p.coeffs.iter().map(|(rho, c)| c * rat_pow(&nn, rho.len() as i32)).sum())
}

/// Distinct rearrangements of a multiset of exponents.
pub fn distinct_permutations(v: &[u32]) -> Vec<Vec<u32>> {
    let mut cur: Vec<u32> = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    loop {
        // next lexicographic permutation
        let Some(i) = (0..cur.len().saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..cur.len()).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
    out
}

/// m_μ in N explicit variables, placed at positions `vars` of a ring with
/// `nvars` variables. Zero when ℓ(μ) > N.
pub fn monomial_mpoly<C: Coeff>(mu: &Partition, nvars: usize, vars: &[usize]) -> MPoly<C> {
    let n = vars.len();
    let mut out = MPoly::zero(nvars);
    if mu.len() > n {
        return out;
    }
    let mut padded = mu.parts().to_vec();
    padded.resize(n, 0);
    for perm in distinct_permutations(&padded) {
        let mut e = vec![0; nvars];
        for (k, &v) in vars.iter().enumerate() {
            e[v] = perm[k];
        }
        out.add_term(e, C::one());
    }
    out
}

/// Explicit polynomial of `f` in the variables `vars` of an `nvars`-variable ring.
pub fn to_mpoly_in(f: &SymFunc, nvars: usize, vars: &[usize]) -> Result<MPoly<Rat>> {
    let m = f.to_basis(Basis::Monomial, &f.alpha)?;
    let mut out = MPoly::zero(nvars);
    for (mu, c) in &m.coeffs {
        if mu.len() <= vars.len() {
            out = &out + &monomial_mpoly::<Rat>(mu, nvars, vars).scale(c);
        }
    }
    Ok(out)
}

/// Explicit polynomial of `f` in N variables.
pub fn to_mpoly(f: &SymFunc, n: usize) -> Result<MPoly<Rat>> {
    to_mpoly_in(f, n, &(0..n).collect::<Vec<_>>())
}

/// Reads a polynomial symmetric in all its variables back into the monomial
/// basis, one homogeneous component per degree.
pub fn from_mpoly(poly: &MPoly<Rat>) -> Result<BTreeMap<u32, SymFunc>> {
    let all: Vec<usize> = (0..poly.nvars()).collect();
    if !poly.is_symmetric_in(&all) {
        return Err(Error::NonSymmetric);
    }
    let mut out: BTreeMap<u32, SymFunc> = BTreeMap::new();
    for (e, c) in poly.terms() {
        if e.windows(2).all(|w| w[0] >= w[1]) {
            let p = Partition::new(e.clone())?;
            let d = p.weight();
            out.entry(d).or_insert_with(|| SymFunc::zero(Basis::Monomial, Rat::one(), d)).add_term(p, c.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::partition::part;

    #[test]
    fn permutations_are_distinct() {
        assert_eq!(distinct_permutations(&[1, 1, 0]).len(), 3);
        assert_eq!(distinct_permutations(&[2, 1, 0]).len(), 6);
    }

    #[test]
    fn elementary_in_power_sums() {
        // e_2 = m_11 = (p_1^2 − p_2)/2
        let e2 = SymFunc::monomial(&part(&[1, 1])).to_basis(Basis::PowerSum, &Rat::one()).unwrap();
        assert_eq!(e2.coeff(&part(&[1, 1])), rat(1, 2));
        assert_eq!(e2.coeff(&part(&[2])), rat(-1, 2));
    }

    #[test]
    fn evaluation_routes_agree() {
        let f = SymFunc::monomial(&part(&[2, 1]));
        let pts = [rat(1, 2), int(3), int(-2)];
        let direct = to_mpoly(&f, 3).unwrap().eval(&pts);
        assert_eq!(evaluate(&f, &pts).unwrap(), direct);
        assert_eq!(specialize(&f, 3).unwrap(), int(6));
        let back = from_mpoly(&to_mpoly(&f, 3).unwrap()).unwrap();
        assert_eq!(back[&3].coeffs(), f.coeffs());
    }
}
