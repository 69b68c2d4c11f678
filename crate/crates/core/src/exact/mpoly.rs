use std::collections::BTreeMap;
use std::fmt;

use super::scalar::{Coeff, Rat};
use crate::error::{Error, Result};

/// Exponent vector of a monomial, one entry per variable.
pub type Exps = Vec<u32>;

/// Sparse multivariate polynomial with a fixed number of variables.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// polynomials.
#[derive(Clone, PartialEq, Debug)]
pub struct MPoly<C: Coeff> {
    nvars: usize,
    terms: BTreeMap<Exps, C>,
}

impl<C: Coeff> MPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, C::one())
    }

    pub fn monomial(exps: Exps, c: C) -> Self {
        let nvars = exps.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Self { nvars, terms }
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exps, C)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exps, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, e: Exps, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().plus(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// The ring instance shared by all coefficients, or a mismatch error.
    pub fn ring_tag(&self) -> Result<Option<Rat>> {
        let mut tag: Option<Rat> = None;
        for c in self.terms.values() {
            if let Some(t) = c.ring_tag() {
                match &tag {
                    Some(x) if *x != t => return Err(Error::RingMismatch(format!("coefficients over {x} and {t}"))),
                    _ => tag = Some(t),
                }
            }
        }
        Ok(tag)
    }

    fn compatible(&self, o: &Self) -> Result<()> {
        if self.nvars != o.nvars {
            return Err(Error::RingMismatch(format!("{} variables combined with {}", self.nvars, o.nvars)));
        }
        match (self.ring_tag()?, o.ring_tag()?) {
            (Some(a), Some(b)) if a != b => Err(Error::RingMismatch(format!("coefficients over {a} and {b}"))),
            _ => Ok(()),
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.compatible(o)?;
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        self.compatible(o)?;
        Ok(self.mul_unchecked(o, None))
    }

    fn mul_unchecked(&self, o: &Self, max_degree: Option<u32>) -> Self {
        let mut r = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            let d1: u32 = e1.iter().sum();
            for (e2, c2) in &o.terms {
                if let Some(m) = max_degree {
                    if d1 + e2.iter().sum::<u32>() > m {
                        continue;
                    }
                }
                let e: Exps = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, c1.times(c2));
            }
        }
        r
    }

    /// Product with every term of total degree above `max_degree` dropped.
    pub fn mul_truncated(&self, o: &Self, max_degree: u32) -> Result<Self> {
        self.compatible(o)?;
        Ok(self.mul_unchecked(o, Some(max_degree)))
    }

    pub fn neg(&self) -> Self {
        Self { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), c.negate())).collect() }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.scale(r));
        }
        out
    }

    pub fn scale_by(&self, k: &C) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.times(k));
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut r = Self::one(self.nvars);
        for _ in 0..k {
            r = &r * self;
        }
        r
    }

    /// Drops all terms of total degree greater than `max_degree`.
    pub fn truncate(&self, max_degree: u32) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() <= max_degree)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Terms whose degree in the listed variables equals `k`.
    pub fn homogeneous_part_in(&self, vars: &[usize], k: u32) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| vars.iter().map(|&v| e[v]).sum::<u32>() == k)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> MPoly<D> {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Coefficients mapped fallibly, e.g. to extract the rational part.
    pub fn try_map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> Result<D>) -> Result<MPoly<D>> {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Re-indexes variables: variable `i` of `self` becomes `map[i]` in a ring
    /// with `nvars` variables.
    pub fn embed(&self, nvars: usize, map: &[usize]) -> Self {
        assert_eq!(map.len(), self.nvars);
        let mut out = Self::zero(nvars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; nvars];
            for (i, &k) in e.iter().enumerate() {
                ne[map[i]] += k;
            }
            out.add_term(ne, c.clone());
        }
        out
    }

    pub fn partial(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut ne = e.clone();
                ne[i] -= 1;
                out.add_term(ne, c.scale(&Rat::from_integer(e[i].into())));
            }
        }
        out
    }

    /// `x_i · self`.
    pub fn mul_var(&self, i: usize) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut ne = e.clone();
                    ne[i] += 1;
                    (ne, c.clone())
                })
                .collect(),
        }
    }

    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut ne = e.clone();
                    ne.swap(i, j);
                    (ne, c.clone())
                })
                .collect(),
        }
    }

    pub fn is_symmetric_in(&self, vars: &[usize]) -> bool {
        vars.windows(2).all(|w| self.swap_vars(w[0], w[1]) == *self)
    }

    /// Exact quotient `self / (x_i − x_j)`. Fails with
    /// [`Error::NotDivisible`] when the remainder is nonzero.
    pub fn div_by_difference(&self, i: usize, j: usize) -> Result<Self> {
        assert!(i != j && i < self.nvars && j < self.nvars);
        // x_i^a x_j^b = x_j^b (x_i^a − x_j^a) + x_j^(a+b), and
        // x_i^a − x_j^a = (x_i − x_j) Σ_k x_i^k x_j^(a−1−k).
        let mut rem = Self::zero(self.nvars);
        let mut quot = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let (a, b) = (e[i], e[j]);
            for k in 0..a {
                let mut q = e.clone();
                q[i] = k;
                q[j] = b + a - 1 - k;
                quot.add_term(q, c.clone());
            }
            let mut r = e.clone();
            r[i] = 0;
            r[j] = a + b;
            rem.add_term(r, c.clone());
        }
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::NotDivisible { i, j })
        }
    }

    /// `(∂_i f − ∂_j f) / (x_i − x_j)`, exact.
    pub fn divided_difference(&self, i: usize, j: usize) -> Result<Self> {
        (&self.partial(i) - &self.partial(j)).div_by_difference(i, j)
    }

    pub fn eval(&self, point: &[C]) -> C {
        assert_eq!(point.len(), self.nvars);
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t = t.times(x);
                }
            }
            acc = acc.plus(&t);
        }
        acc
    }

    /// Substitutes values for some variables, keeping the variable count.
    /// Substituted variables no longer occur in the result.
    pub fn eval_partial(&self, values: &[(usize, C)]) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            let mut t = c.clone();
            for (v, x) in values {
                for _ in 0..e[*v] {
                    t = t.times(x);
                }
                ne[*v] = 0;
            }
            out.add_term(ne, t);
        }
        out
    }
}

impl<C: Coeff> fmt::Display for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*x{i}")?,
                    _ => write!(f, "*x{i}^{k}")?,
                }
            }
        }
        Ok(())
    }
}

impl<C: Coeff> std::ops::Add for &MPoly<C> {
    type Output = MPoly<C>;
    /// Panics on a ring mismatch; use [`MPoly::try_add`] to handle it.
    fn add(self, o: &MPoly<C>) -> MPoly<C> {
        self.try_add(o).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<C: Coeff> std::ops::Sub for &MPoly<C> {
    type Output = MPoly<C>;
    fn sub(self, o: &MPoly<C>) -> MPoly<C> {
        self.try_add(&o.neg()).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<C: Coeff> std::ops::Mul for &MPoly<C> {
    type Output = MPoly<C>;
    /// Panics on a ring mismatch; use [`MPoly::try_mul`] to handle it.
    fn mul(self, o: &MPoly<C>) -> MPoly<C> {
        self.try_mul(o).unwrap_or_else(|e| panic!("{e}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::{int, rat};

    fn x(n: usize, i: usize) -> MPoly<Rat> {
        MPoly::var(n, i)
    }

    #[test]
    fn divided_difference_of_power_sum() {
        // (∂1 − ∂2) p_2 / (x1 − x2) = 2
        let p2 = &x(2, 0).pow(2) + &x(2, 1).pow(2);
        assert_eq!(p2.divided_difference(0, 1).unwrap(), MPoly::constant(2, int(2)));
    }

    #[test]
    fn division_detects_nonzero_remainder() {
        let f = &x(2, 0) + &MPoly::constant(2, int(1));
        assert_eq!(f.div_by_difference(0, 1), Err(Error::NotDivisible { i: 0, j: 1 }));
        assert_eq!(x(2, 0).pow(2).divided_difference(0, 1), Err(Error::NotDivisible { i: 0, j: 1 }));
    }

    #[test]
    fn eval_and_partial() {
        let f = &(&x(2, 0) * &x(2, 1)).scale(&rat(3, 2)) + &x(2, 0).pow(3);
        assert_eq!(f.eval(&[int(2), int(5)]), int(23));
        assert_eq!(f.partial(0).eval(&[int(2), int(5)]), rat(15, 2) + int(12));
        assert!(f.is_symmetric_in(&[0]));
        assert!(!f.is_symmetric_in(&[0, 1]));
    }

    #[test]
    fn truncated_product_drops_high_degrees() {
        let f = &MPoly::one(1) + &x(1, 0);
        let g = f.mul_truncated(&f.pow(3), 2).unwrap();
        assert_eq!(g.total_degree(), Some(2));
        assert_eq!(g.coeff(&[2]), int(6));
    }
}
