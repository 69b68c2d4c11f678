//! Exact averages of symmetric polynomials over the Gaussian and chiral
//! (Laguerre) β-ensembles.
//!
//! Gaussian weight: Π|x_i − x_j|^β e^{−Σ x_i²}. Chiral weight:
//! Π|x_i − x_j|^β Π x_i^γ e^{−x_i} on x_i > 0. With α = 2/β,
//!
//! - ⟨P_λ⟩_G = b_λ(N) (2α)^{−|λ|/2} [p_{(2^{|λ|/2})}] P_λ,
//! - ⟨P_λ⟩_ch = [γ+q]_λ b_λ(N) [p_{(1^{|λ|})}] P_λ with q = 1 + β(N−1)/2,
//!
//! where [p_ρ] P denotes the power-sum coefficient.

use std::collections::HashMap;

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{usage, Result};
use crate::exact::{int, rat_pow, rat_to_f64, Coeff, MPoly, Rat};
use crate::partition::{factorial, Partition};
use crate::report::CheckReport;
use crate::symfunc::{jack, specialize, to_mpoly, Basis, SymFunc};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EnsembleKind {
    Gaussian,
    Chiral,
}

/// A β-ensemble of N eigenvalues. `gamma` is only used by the chiral kind.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ensemble {
    pub kind: EnsembleKind,
    pub beta: Rat,
    pub n: usize,
    pub gamma: Rat,
}

impl Ensemble {
    pub fn gaussian(beta: Rat, n: usize) -> Result<Self> {
        Self::validate(&beta, n)?;
        Ok(Self { kind: EnsembleKind::Gaussian, beta, n, gamma: Rat::zero() })
    }

    pub fn chiral(beta: Rat, n: usize, gamma: Rat) -> Result<Self> {
        Self::validate(&beta, n)?;
        if gamma <= -Rat::one() {
            return usage(format!("chiral ensemble needs gamma > -1, got {gamma}"));
        }
        Ok(Self { kind: EnsembleKind::Chiral, beta, n, gamma })
    }

    /// Same ensemble parametrized by α = 2/β.
    pub fn gaussian_alpha(alpha: &Rat, n: usize) -> Result<Self> {
        Self::gaussian(int(2) / alpha, n)
    }

    pub fn chiral_alpha(alpha: &Rat, n: usize, gamma: Rat) -> Result<Self> {
        Self::chiral(int(2) / alpha, n, gamma)
    }

    fn validate(beta: &Rat, n: usize) -> Result<()> {
        if !beta.is_positive() {
            return usage(format!("beta must be positive, got {beta}"));
        }
        if n == 0 {
            return usage("ensemble needs at least one eigenvalue");
        }
        Ok(())
    }

    pub fn alpha(&self) -> Rat {
        int(2) / &self.beta
    }

    /// q = 1 + β(N−1)/2.
    pub fn q(&self) -> Rat {
        Rat::one() + &self.beta * int(self.n as i64 - 1) / int(2)
    }
}

/// ⟨P_λ^{(α)}⟩ with α = 2/β of the ensemble.
pub fn jack_average(lambda: &Partition, ens: &Ensemble) -> Result<Rat> {
    let alpha = ens.alpha();
    let w = lambda.weight();
    let nn = int(ens.n as i64);
    if lambda.len() > ens.n {
        return Ok(Rat::zero());
    }
    let p = jack(lambda, &alpha)?;
    match ens.kind {
        EnsembleKind::Gaussian => {
            if w % 2 == 1 {
                return Ok(Rat::zero());
            }
            let rho = Partition::new(vec![2; (w / 2) as usize])?;
            let c = p.p_coeff(&rho)?;
            Ok(lambda.b_coeff(&alpha, &nn) * rat_pow(&(int(2) * &alpha), -((w / 2) as i32)) * c)
        }
        EnsembleKind::Chiral => {
            let rho = Partition::new(vec![1; w as usize])?;
            let c = p.p_coeff(&rho)?;
            let u = &ens.gamma + ens.q();
            Ok(lambda.gen_pochhammer(&u, &alpha) * lambda.b_coeff(&alpha, &nn) * c)
        }
    }
}

/// ⟨f⟩ for a homogeneous symmetric function, through its Jack expansion.
pub fn average(f: &SymFunc, ens: &Ensemble) -> Result<Rat> {
    let alpha = ens.alpha();
    let j = f.to_basis(Basis::Jack, &alpha)?;
    let mut acc = Rat::zero();
    for (lam, c) in j.coeffs() {
        acc += c * jack_average(lam, ens)?;
    }
    Ok(acc)
}

/// Memoized monomial moments ⟨x^e⟩ of one ensemble.
///
/// By symmetry of the density, ⟨x^e⟩ = ⟨m_μ⟩ / #(distinct rearrangements of
/// e), μ = sort(e). This extends the average to any polynomial.
pub struct MomentEngine {
    ens: Ensemble,
    cache: HashMap<Partition, Rat>,
}

impl MomentEngine {
    pub fn new(ens: Ensemble) -> Self {
        Self { ens, cache: HashMap::new() }
    }

    pub fn ensemble(&self) -> &Ensemble {
        &self.ens
    }

    pub fn monomial_moment(&mut self, exps: &[u32]) -> Result<Rat> {
        if exps.len() != self.ens.n {
            return usage(format!("{} exponents for {} eigenvalues", exps.len(), self.ens.n));
        }
        let mu = Partition::new({
            let mut v = exps.to_vec();
            v.sort_unstable_by(|a, b| b.cmp(a));
            v
        })?;
        if let Some(v) = self.cache.get(&mu) {
            return Ok(v.clone());
        }
        let m = SymFunc::monomial(&mu);
        let count = factorial(self.ens.n as u32) / (factorial((self.ens.n - mu.len()) as u32) * mu.aut());
        let v = average(&m, &self.ens)? / Rat::from_integer(count);
        self.cache.insert(mu, v.clone());
        Ok(v)
    }

    /// Averages over the variables `xvars` (one per eigenvalue), leaving a
    /// polynomial in the remaining variables.
    pub fn average_over<C: Coeff>(&mut self, poly: &MPoly<C>, xvars: &[usize]) -> Result<MPoly<C>> {
        let mut out = MPoly::zero(poly.nvars());
        for (e, c) in poly.terms() {
            let xe: Vec<u32> = xvars.iter().map(|&v| e[v]).collect();
            let m = self.monomial_moment(&xe)?;
            if m.is_zero() {
                continue;
            }
            let mut rest = e.clone();
            for &v in xvars {
                rest[v] = 0;
            }
            out.add_term(rest, c.scale(&m));
        }
        Ok(out)
    }

    /// ⟨poly⟩ for a polynomial in exactly N variables.
    pub fn average_poly(&mut self, poly: &MPoly<Rat>) -> Result<Rat> {
        let vars: Vec<usize> = (0..poly.nvars()).collect();
        let r = self.average_over(poly, &vars)?;
        Ok(r.coeff(&vec![0; poly.nvars()]))
    }
}

/// Outcome of a duality comparison L/R against a predicted ratio.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DualityReport {
    pub lambda: Partition,
    pub lhs: Rat,
    pub rhs: Rat,
    pub ratio: Option<Rat>,
    pub predicted: Rat,
    /// The constant as commonly printed, where it differs from `predicted`.
    pub printed: Option<Rat>,
    pub passed: bool,
}

impl DualityReport {
    fn new(lambda: Partition, lhs: Rat, rhs: Rat, predicted: Rat, printed: Option<Rat>) -> Self {
        let (ratio, passed) = if rhs.is_zero() {
            (None, lhs.is_zero())
        } else {
            let r = &lhs / &rhs;
            let ok = r == predicted;
            (Some(r), ok)
        };
        Self { lambda, lhs, rhs, ratio, predicted, printed, passed }
    }

    /// Whether the printed constant would also have matched.
    pub fn printed_matches(&self) -> Option<bool> {
        match (&self.ratio, &self.printed) {
            (Some(r), Some(p)) => Some(r == p),
            _ => None,
        }
    }
}

fn normalized_average(lambda: &Partition, ens: &Ensemble) -> Result<Rat> {
    let alpha = ens.alpha();
    let spec = specialize(&jack(lambda, &alpha)?, ens.n)?;
    if spec.is_zero() {
        return usage(format!("{lambda} has more than {} parts", ens.n));
    }
    Ok(jack_average(lambda, ens)? / spec)
}

/// ⟨P_λ^{(α)}⟩/P_λ(1^N) over the Gaussian α-ensemble against
/// ⟨P_{λ'}^{(1/α)}⟩/P_{λ'}(1^{N'}) over the Gaussian 1/α-ensemble.
/// Predicted ratio (−1/α)^{|λ|/2}; the printed constant is (−α)^{|λ|/2}.
pub fn gaussian_duality_check(lambda: &Partition, alpha: &Rat, n: usize, n_dual: usize) -> Result<DualityReport> {
    let lhs = normalized_average(lambda, &Ensemble::gaussian_alpha(alpha, n)?)?;
    let rhs = normalized_average(&lambda.conjugate(), &Ensemble::gaussian_alpha(&alpha.recip(), n_dual)?)?;
    let k = (lambda.weight() / 2) as i32;
    let odd = lambda.weight() % 2 == 1;
    let predicted = if odd { Rat::zero() } else { rat_pow(&-alpha.recip(), k) };
    let printed = (!odd).then(|| rat_pow(&-alpha.clone(), k));
    Ok(DualityReport::new(lambda.clone(), lhs, rhs, predicted, printed))
}

/// Chiral analogue: the dual ensemble has α' = 1/α, N' eigenvalues and
/// exponent γ'. Predicted ratio [γ+q]_λ / [γ'+q']_{λ'} with q' = 1 + (N'−1)α.
pub fn chiral_duality_check(
    lambda: &Partition,
    alpha: &Rat,
    gamma: &Rat,
    gamma_dual: &Rat,
    n: usize,
    n_dual: usize,
) -> Result<DualityReport> {
    let ens = Ensemble::chiral_alpha(alpha, n, gamma.clone())?;
    let dual = Ensemble::chiral_alpha(&alpha.recip(), n_dual, gamma_dual.clone())?;
    let lhs = normalized_average(lambda, &ens)?;
    let conj = lambda.conjugate();
    let rhs = normalized_average(&conj, &dual)?;
    let num = lambda.gen_pochhammer(&(gamma + ens.q()), alpha);
    let den = conj.gen_pochhammer(&(gamma_dual + dual.q()), &alpha.recip());
    if den.is_zero() {
        return usage(format!("[gamma'+q']_{conj} vanishes"));
    }
    Ok(DualityReport::new(lambda.clone(), lhs, rhs, num / den, None))
}

/// The dual exponent γ' = 2(γ+1)/β − 1 = α(γ+1) − 1 of the rectangular
/// chiral identity.
pub fn dual_gamma(alpha: &Rat, gamma: &Rat) -> Rat {
    alpha * (gamma + Rat::one()) - Rat::one()
}

/// ⟨(x_1⋯x_N)^n⟩ over `ens` against ⟨(y_1⋯y_n)^N⟩ over the dual ensemble.
/// Gaussian prediction (−1/α)^{nN/2} (printed (−α)^{nN/2});
/// chiral prediction (β/2)^{nN} with γ' = α(γ+1) − 1.
pub fn det_moment_duality(n: u32, ens: &Ensemble) -> Result<DualityReport> {
    let alpha = ens.alpha();
    let big_n = ens.n;
    let rect = Partition::rectangle(n, big_n);
    let dual_rect = Partition::rectangle(big_n as u32, n as usize);
    let nn = (n as usize * big_n) as i32;
    match ens.kind {
        EnsembleKind::Gaussian => {
            let dual = Ensemble::gaussian_alpha(&alpha.recip(), n as usize)?;
            let lhs = jack_average(&rect, ens)?;
            let rhs = jack_average(&dual_rect, &dual)?;
            let odd = nn % 2 == 1;
            let predicted = if odd { Rat::zero() } else { rat_pow(&-alpha.recip(), nn / 2) };
            let printed = (!odd).then(|| rat_pow(&-alpha.clone(), nn / 2));
            Ok(DualityReport::new(rect, lhs, rhs, predicted, printed))
        }
        EnsembleKind::Chiral => {
            let dual = Ensemble::chiral_alpha(&alpha.recip(), n as usize, dual_gamma(&alpha, &ens.gamma))?;
            let lhs = jack_average(&rect, ens)?;
            let rhs = jack_average(&dual_rect, &dual)?;
            Ok(DualityReport::new(rect, lhs, rhs, rat_pow(&(&ens.beta / int(2)), nn), None))
        }
    }
}

fn binomial(n: u32, k: u32) -> Rat {
    Rat::from_integer(factorial(n) / (factorial(k) * factorial(n - k)))
}

fn double_factorial_odd(m: u32) -> Rat {
    // (2m−1)!!
    (1..=m).fold(Rat::one(), |a, j| a * int(2 * j as i64 - 1))
}

/// ⟨Π(t − x_i)⟩ over the Gaussian α-ensemble as coefficients of t^0..t^N,
/// from the Jack moment engine (e_k = P_{(1^k)}).
pub fn charpoly_average(n: usize, alpha: &Rat) -> Result<Vec<Rat>> {
    let ens = Ensemble::gaussian_alpha(alpha, n)?;
    let mut c = vec![Rat::zero(); n + 1];
    for k in 0..=n {
        let ek = if k == 0 { Rat::one() } else { jack_average(&Partition::new(vec![1; k])?, &ens)? };
        let sign = if k % 2 == 0 { Rat::one() } else { -Rat::one() };
        c[n - k] = sign * ek;
    }
    Ok(c)
}

/// One-variable Gaussian integral representation
/// Σ_m C(N,2m) t^{N−2m} c^m (2m−1)!!/2^m for a given constant c.
pub fn hermite_onevar_integral(n: usize, c: &Rat) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); n + 1];
    for m in 0..=(n / 2) as u32 {
        out[n - 2 * m as usize] =
            binomial(n as u32, 2 * m) * rat_pow(c, m as i32) * double_factorial_odd(m) / rat_pow(&int(2), m as i32);
    }
    out
}

/// ⟨Π(t − x_i)⟩ equals (1/√π)∫e^{−x²}(t − i x/√α)^N dx, i.e. the integral
/// representation with c = −1/α. The printed c = −α agrees only at α = 1.
pub fn hermite_onevar_check(n: usize, alpha: &Rat) -> Result<CheckReport> {
    let lhs = charpoly_average(n, alpha)?;
    let rhs = hermite_onevar_integral(n, &-alpha.recip());
    let printed = hermite_onevar_integral(n, &-alpha.clone());
    let name = format!("one-variable Hermite N={n} alpha={alpha}");
    let detail = format!("printed constant {}", if lhs == printed { "also agrees" } else { "disagrees" });
    Ok(CheckReport::from_bool(name, lhs == rhs, detail))
}

/// Replaces every variable x_i by x_i − c.
pub fn shift_poly(poly: &MPoly<Rat>, c: &Rat) -> MPoly<Rat> {
    let n = poly.nvars();
    let mut out = MPoly::zero(n);
    for (e, coef) in poly.terms() {
        let mut term = MPoly::constant(n, coef.clone());
        for (i, &k) in e.iter().enumerate() {
            let lin = &MPoly::var(n, i) - &MPoly::constant(n, c.clone());
            term = &term * &lin.pow(k);
        }
        out = &out + &term;
    }
    out
}

/// Result of the chiral-to-Gaussian limit sweep.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LimitReport {
    pub gammas: Vec<String>,
    pub errors: Vec<f64>,
    pub slope: f64,
    /// Differences strictly decrease and decay at least like γ^{-1/2}.
    pub passed: bool,
}

/// Least-squares slope of log(err) against log(x).
pub fn loglog_slope(xs: &[f64], errs: &[f64]) -> f64 {
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = errs.iter().map(|e| e.ln()).collect();
    let n = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = lx.iter().map(|x| (x - mx).powi(2)).sum();
    sxy / sxx
}

/// |⟨F((y−γ)/√(2γ))⟩_chiral − ⟨F⟩_Gaussian| along a γ grid. Each homogeneous
/// component F_k contributes (2γ)^{−k/2}⟨F_k(y−γ)⟩, so the difference is
/// A + B/√(2γ) with A, B exact.
pub fn chiral_to_gaussian_limit_check(f: &[SymFunc], beta: &Rat, n: usize, gammas: &[Rat]) -> Result<LimitReport> {
    let gauss = Ensemble::gaussian(beta.clone(), n)?;
    let target: Rat = f.iter().map(|fk| average(fk, &gauss)).sum::<Result<Rat>>()?;
    let mut errors = Vec::new();
    for g in gammas {
        let mut eng = MomentEngine::new(Ensemble::chiral(beta.clone(), n, g.clone())?);
        let two_g = int(2) * g;
        let (mut a, mut b) = (-target.clone(), Rat::zero());
        for fk in f {
            let k = fk.degree as i32;
            let v = eng.average_poly(&shift_poly(&to_mpoly(fk, n)?, g))?;
            if k % 2 == 0 {
                a += v * rat_pow(&two_g, -k / 2);
            } else {
                b += v * rat_pow(&two_g, -(k - 1) / 2);
            }
        }
        let err = rat_to_f64(&a) + rat_to_f64(&b) / rat_to_f64(&two_g).sqrt();
        errors.push(err.abs());
    }
    let xs: Vec<f64> = gammas.iter().map(rat_to_f64).collect();
    let slope = loglog_slope(&xs, &errors);
    let decreasing = errors.windows(2).all(|w| w[1] < w[0]);
    Ok(LimitReport {
        gammas: gammas.iter().map(|g| g.to_string()).collect(),
        errors,
        slope,
        passed: decreasing && slope <= -0.35,
    })
}

/// Γ(a+k)/Γ(a) for integer k ≥ 0.
pub fn rising(a: &Rat, k: u32) -> Rat {
    (0..k).fold(Rat::one(), |acc, j| acc * (a + int(j as i64)))
}

pub fn to_f64_vec(v: &[Rat]) -> Vec<f64> {
    v.iter().map(|r| r.to_f64().unwrap_or(f64::NAN)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::partition::part;

    #[test]
    fn gaussian_anchors() {
        let a = rat(3, 2);
        let n = 4;
        let ens = Ensemble::gaussian_alpha(&a, n).unwrap();
        let nn = int(n as i64);
        assert_eq!(jack_average(&part(&[2]), &ens).unwrap(), &nn * (&nn + &a) / (int(2) * (int(1) + &a)));
        assert_eq!(jack_average(&part(&[1, 1]), &ens).unwrap(), -&nn * (&nn - int(1)) / (int(4) * &a));
        let p2 = SymFunc::power_sum(&part(&[2]));
        assert_eq!(average(&p2, &ens).unwrap(), &nn * (&nn - int(1) + &a) / (int(2) * &a));
    }

    #[test]
    fn chiral_one_variable_anchors() {
        let g = rat(1, 2);
        let ens = Ensemble::chiral(int(2), 1, g.clone()).unwrap();
        assert_eq!(jack_average(&part(&[1]), &ens).unwrap(), &g + int(1));
        assert_eq!(jack_average(&part(&[2]), &ens).unwrap(), (&g + int(1)) * (&g + int(2)));
    }

    #[test]
    fn duality_at_degree_two() {
        let a = int(2);
        let r = gaussian_duality_check(&part(&[2]), &a, 3, 3).unwrap();
        assert!(r.passed);
        assert_eq!(r.lhs, rat(1, 2));
        assert_eq!(r.rhs, -&a / int(2));
        assert_eq!(r.printed_matches(), Some(false));
    }

    #[test]
    fn onevar_hermite() {
        for a in crate::exact::alpha_grid() {
            assert!(hermite_onevar_check(3, &a).unwrap().passed);
        }
    }
}
