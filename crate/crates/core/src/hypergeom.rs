//! Truncated hypergeometric series of two sets of N variables,
//!
//! ₚ𝓕_q(a; b; x; y) = Σ_λ α^{|λ|}/h^λ · Π[a_i]_λ / Π[b_j]_λ · P_λ(x) P_λ(y) / P_λ(1^N),
//!
//! stored as the graded map λ ↦ coefficient of P_λ(x)P_λ(y). Evaluation points
//! are substituted last so identities can be asserted coefficientwise.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::dunkl::{hermite_poly, laguerre_poly, norm_a, norm_b};
use crate::error::{Error, Result};
use crate::exact::{int, MPoly, Rat};
use crate::moments::{Ensemble, MomentEngine};
use crate::partition::{partitions_with_len, Partition};
use crate::report::{first_difference, CheckReport};
use crate::symfunc::{check_degree, jack, specialize, to_mpoly_in};

#[derive(Debug, Clone, PartialEq)]
pub struct HyperSeries {
    pub a: Vec<Rat>,
    pub b: Vec<Rat>,
    pub alpha: Rat,
    pub n: usize,
    pub cutoff: u32,
    terms: BTreeMap<Partition, Rat>,
}

impl HyperSeries {
    pub fn new(a: &[Rat], b: &[Rat], alpha: &Rat, n: usize, cutoff: u32) -> Result<Self> {
        check_degree(cutoff)?;
        let mut terms = BTreeMap::new();
        for d in 0..=cutoff {
            for lambda in partitions_with_len(d, n) {
                let mut c = crate::exact::rat_pow(alpha, d as i32) / lambda.upper_hook(alpha);
                for ai in a {
                    c *= lambda.gen_pochhammer(ai, alpha);
                }
                for bj in b {
                    let pb = lambda.gen_pochhammer(bj, alpha);
                    if pb.is_zero() {
                        return Err(Error::Pole(format!("[{bj}]_{lambda} vanishes")));
                    }
                    c /= pb;
                }
                c /= specialize(&jack(&lambda, alpha)?, n)?;
                terms.insert(lambda, c);
            }
        }
        Ok(Self { a: a.to_vec(), b: b.to_vec(), alpha: alpha.clone(), n, cutoff, terms })
    }

    pub fn p(&self) -> usize {
        self.a.len()
    }

    pub fn q(&self) -> usize {
        self.b.len()
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Rat> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> Rat {
        self.terms.get(lambda).cloned().unwrap_or_else(Rat::zero)
    }

    /// The series at (c·x; y) as a polynomial in 2N variables, x first.
    pub fn to_mpoly(&self, x_scale: &Rat) -> Result<MPoly<Rat>> {
        let n = self.n;
        let xs: Vec<usize> = (0..n).collect();
        let ys: Vec<usize> = (n..2 * n).collect();
        let mut acc = MPoly::zero(2 * n);
        for (lambda, c) in &self.terms {
            let p = jack(lambda, &self.alpha)?;
            let w = crate::exact::rat_pow(x_scale, lambda.weight() as i32);
            let term = &to_mpoly_in(&p, 2 * n, &xs)? * &to_mpoly_in(&p, 2 * n, &ys)?;
            acc = &acc + &term.scale(&(c * w));
        }
        Ok(acc)
    }

    /// The series at y = t·1^N as a polynomial in x_1..x_N, t.
    pub fn at_diagonal_y(&self) -> Result<MPoly<Rat>> {
        let n = self.n;
        let xs: Vec<usize> = (0..n).collect();
        let mut acc = MPoly::zero(n + 1);
        for (lambda, c) in &self.terms {
            let p = jack(lambda, &self.alpha)?;
            let spec = specialize(&p, n)?;
            let t = MPoly::var(n + 1, n).pow(lambda.weight());
            acc = &acc + &(&to_mpoly_in(&p, n + 1, &xs)? * &t).scale(&(c * spec));
        }
        Ok(acc)
    }
}

/// Terms whose degree in `vars` is at most `d`.
fn truncate_in(p: &MPoly<Rat>, vars: &[usize], d: u32) -> MPoly<Rat> {
    let deg = |e: &Vec<u32>| vars.iter().map(|&v| e[v]).sum::<u32>();
    MPoly::from_terms(p.nvars(), p.terms().filter(|(e, _)| deg(e) <= d).map(|(e, c)| (e.clone(), c.clone())))
}

/// Σ_{m} g^m/m! over the terms that stay within degree `d` in `vars`.
fn exp_in(g: &MPoly<Rat>, vars: &[usize], d: u32) -> MPoly<Rat> {
    let mut acc = MPoly::one(g.nvars());
    let mut term = MPoly::one(g.nvars());
    for m in 1..=d {
        term = truncate_in(&(&term * g), vars, d).scale(&int(m as i64).recip());
        if term.is_zero() {
            break;
        }
        acc = &acc + &term;
    }
    acc
}

fn power_sum(nvars: usize, vars: &[usize], k: u32) -> MPoly<Rat> {
    vars.iter().fold(MPoly::zero(nvars), |acc, &v| &acc + &MPoly::var(nvars, v).pow(k))
}

fn compare(name: String, lhs: &MPoly<Rat>, rhs: &MPoly<Rat>) -> CheckReport {
    match first_difference(lhs, rhs) {
        None => CheckReport::pass(name, format!("{} coefficients agree", lhs.len())),
        Some(d) => CheckReport::fail(name, d),
    }
}

/// ₀𝓕₀(x; t·1^N) against Π e^{t x_i} through degree `cutoff`.
pub fn special_0f0_check(alpha: &Rat, n: usize, cutoff: u32) -> Result<CheckReport> {
    let series = HyperSeries::new(&[], &[], alpha, n, cutoff)?.at_diagonal_y()?;
    let all: Vec<usize> = (0..n).collect();
    let tp1 = &power_sum(n + 1, &all, 1) * &MPoly::var(n + 1, n);
    let expected = exp_in(&tp1, &[n], cutoff);
    Ok(compare(format!("0F0 at diagonal y, alpha={alpha} N={n}"), &series, &expected))
}

/// ₁𝓕₀(a; x; t·1^N) against Π(1 − t x_i)^{−a} through degree `cutoff`.
pub fn special_1f0_check(a: &Rat, alpha: &Rat, n: usize, cutoff: u32) -> Result<CheckReport> {
    let series = HyperSeries::new(std::slice::from_ref(a), &[], alpha, n, cutoff)?.at_diagonal_y()?;
    let nv = n + 1;
    let mut expected = MPoly::one(nv);
    for i in 0..n {
        // Σ_m (a)_m (t x_i)^m / m!
        let tx = &MPoly::var(nv, i) * &MPoly::var(nv, n);
        let mut factor = MPoly::zero(nv);
        let mut c = Rat::one();
        for m in 0..=cutoff {
            factor = &factor + &tx.pow(m).scale(&c);
            c = c * (a + int(m as i64)) / int(m as i64 + 1);
        }
        expected = truncate_in(&(&expected * &factor), &[n], cutoff);
    }
    Ok(compare(format!("1F0 at diagonal y, a={a} alpha={alpha} N={n}"), &series, &expected))
}

/// e^{−p₂(y)} ₀𝓕₀(2x; y) = Σ_λ 𝓗_λ(x) P_λ(y)/A_λ through y-degree `cutoff`.
pub fn genfunc_hermite_check(alpha: &Rat, n: usize, cutoff: u32) -> Result<CheckReport> {
    let ys: Vec<usize> = (n..2 * n).collect();
    let xs: Vec<usize> = (0..n).collect();
    let f = HyperSeries::new(&[], &[], alpha, n, cutoff)?.to_mpoly(&int(2))?;
    let damp = exp_in(&power_sum(2 * n, &ys, 2).neg(), &ys, cutoff);
    let lhs = truncate_in(&(&damp * &f), &ys, cutoff);
    let mut rhs = MPoly::zero(2 * n);
    for d in 0..=cutoff {
        for lambda in partitions_with_len(d, n) {
            let h = hermite_poly(&lambda, alpha, n)?.embed(2 * n, &xs);
            let py = to_mpoly_in(&jack(&lambda, alpha)?, 2 * n, &ys)?;
            rhs = &rhs + &(&h * &py).scale(&norm_a(&lambda, alpha, n)?.recip());
        }
    }
    Ok(compare(format!("Hermite generating function alpha={alpha} N={n} cutoff={cutoff}"), &lhs, &rhs))
}

/// e^{−p₁(y)} ₀𝓕₁(γ+q; x; y) = Σ_λ 𝓛_λ(x) P_λ(y)/B_λ through y-degree `cutoff`.
pub fn genfunc_laguerre_check(alpha: &Rat, gamma: &Rat, n: usize, cutoff: u32) -> Result<CheckReport> {
    let ys: Vec<usize> = (n..2 * n).collect();
    let xs: Vec<usize> = (0..n).collect();
    let q = int(1) + int(n as i64 - 1) / alpha;
    let f = HyperSeries::new(&[], &[gamma + q], alpha, n, cutoff)?.to_mpoly(&int(1))?;
    let damp = exp_in(&power_sum(2 * n, &ys, 1).neg(), &ys, cutoff);
    let lhs = truncate_in(&(&damp * &f), &ys, cutoff);
    let mut rhs = MPoly::zero(2 * n);
    for d in 0..=cutoff {
        for lambda in partitions_with_len(d, n) {
            let l = laguerre_poly(&lambda, alpha, gamma, n)?.embed(2 * n, &xs);
            let py = to_mpoly_in(&jack(&lambda, alpha)?, 2 * n, &ys)?;
            rhs = &rhs + &(&l * &py).scale(&norm_b(&lambda, alpha, gamma, n)?.recip());
        }
    }
    let name = format!("Laguerre generating function alpha={alpha} gamma={gamma} N={n} cutoff={cutoff}");
    Ok(compare(name, &lhs, &rhs))
}

/// ⟨₀𝓕₀(2x; y)⟩ over the Gaussian α-ensemble equals e^{p₂(y)} through the cutoff.
pub fn average_0f0_check(alpha: &Rat, n: usize, cutoff: u32) -> Result<CheckReport> {
    let xs: Vec<usize> = (0..n).collect();
    let ys: Vec<usize> = (n..2 * n).collect();
    let f = HyperSeries::new(&[], &[], alpha, n, cutoff)?.to_mpoly(&int(2))?;
    let mut eng = MomentEngine::new(Ensemble::gaussian_alpha(alpha, n)?);
    let avg = eng.average_over(&f, &xs)?;
    let expected = exp_in(&power_sum(2 * n, &ys, 2), &ys, cutoff);
    Ok(compare(format!("average of 0F0(2x;y), alpha={alpha} N={n}"), &avg, &expected))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::partition::part;

    #[test]
    fn first_coefficients() {
        let s = HyperSeries::new(&[], &[], &rat(3, 2), 1, 3).unwrap();
        assert_eq!(s.coeff(&part(&[1])), int(1));
        assert_eq!(s.coeff(&part(&[2])), rat(1, 2));
        assert_eq!(s.coeff(&part(&[3])), rat(1, 6));
    }

    #[test]
    fn pole_is_reported() {
        let err = HyperSeries::new(&[], &[int(-1)], &int(1), 1, 3).unwrap_err();
        assert!(matches!(err, Error::Pole(_)));
    }

    #[test]
    fn small_generating_functions() {
        assert!(special_0f0_check(&rat(1, 2), 2, 4).unwrap().passed);
        assert!(special_1f0_check(&rat(1, 3), &int(2), 2, 4).unwrap().passed);
        let h = genfunc_hermite_check(&int(1), 1, 4).unwrap();
        assert!(h.passed, "{}", h.detail);
        let l = genfunc_laguerre_check(&int(1), &rat(1, 2), 1, 3).unwrap();
        assert!(l.passed, "{}", l.detail);
        assert!(average_0f0_check(&int(2), 2, 4).unwrap().passed);
    }
}
