use num_traits::{One, Zero};
use rand::Rng;

use super::{leading_block, Laplacian};
use crate::error::{usage, Error, Result};
use crate::exact::{int, Coeff, MPoly, QuadExt, Rat, RatFunc};
use crate::moments::{dual_gamma, Ensemble, MomentEngine};
use crate::partition::Partition;
use crate::report::{first_difference, CheckReport};
use crate::symfunc::{jack, to_mpoly_in};

/// Π_{j<n} Π_{k<N} (s_j + c·y_k) with s at variables 0..n and y at n..n+N.
pub fn pair_product<C: Coeff>(n: usize, big_n: usize, c: &C) -> MPoly<C> {
    let nv = n + big_n;
    let mut acc = MPoly::one(nv);
    for j in 0..n {
        for k in 0..big_n {
            let lin = &MPoly::var(nv, j) + &MPoly::<C>::var(nv, n + k).scale_by(c);
            acc = &acc * &lin;
        }
    }
    acc
}

fn blocks(n: usize, big_n: usize) -> (Vec<usize>, Vec<usize>) {
    ((0..n).collect(), (n..n + big_n).collect())
}

fn compare<C: Coeff>(name: String, lhs: &MPoly<C>, rhs: &MPoly<C>) -> CheckReport {
    match first_difference(lhs, rhs) {
        None => CheckReport::pass(name, format!("{} coefficients agree", lhs.len())),
        Some(d) => CheckReport::fail(name, d),
    }
}

/// G = ΠΠ(s_j + t f_k) with t² = −α (sign selects ±t). Checks
/// Δ_f^{(α)} G = Δ_s^{(1/α)} G and e^{Δ_f/4} G = e^{Δ_s/4} G exactly.
pub fn prop3_poly_check(n: usize, big_n: usize, alpha: &Rat, sign: i64) -> Result<CheckReport> {
    let t = QuadExt::radical(-alpha.clone()).scale(&int(sign));
    let g = pair_product(n, big_n, &t);
    let (sv, fv) = blocks(n, big_n);
    let lf = Laplacian::Gaussian { alpha: alpha.clone() };
    let ls = Laplacian::Gaussian { alpha: alpha.recip() };
    let name = format!("gaussian polynomial duality n={n} N={big_n} alpha={alpha} sign={sign}");
    let first = compare(name.clone(), &lf.apply(&g, &fv)?, &ls.apply(&g, &sv)?);
    if !first.passed {
        return Ok(first);
    }
    let quarter = Rat::new(1.into(), 4.into());
    Ok(compare(name, &lf.exp(&g, &fv, &quarter)?, &ls.exp(&g, &sv, &quarter)?))
}

/// G = ΠΠ(s_j + α f_k). Checks Δ_f^{(α,γ)} G = Δ_s^{(1/α, γ')} G with
/// γ' = α(γ+1) − 1, and the same for the exponentials e^{−Δ}.
pub fn prop4_poly_check(n: usize, big_n: usize, alpha: &Rat, gamma: &Rat) -> Result<CheckReport> {
    let g = pair_product(n, big_n, alpha);
    let (sv, fv) = blocks(n, big_n);
    let lf = Laplacian::Chiral { alpha: alpha.clone(), gamma: gamma.clone() };
    let ls = Laplacian::Chiral { alpha: alpha.recip(), gamma: dual_gamma(alpha, gamma) };
    let name = format!("chiral polynomial duality n={n} N={big_n} alpha={alpha} gamma={gamma}");
    let first = compare(name.clone(), &lf.apply(&g, &fv)?, &ls.apply(&g, &sv)?);
    if !first.passed {
        return Ok(first);
    }
    Ok(compare(name, &lf.exp(&g, &fv, &-Rat::one())?, &ls.exp(&g, &sv, &-Rat::one())?))
}

/// Operator-path 𝓗^{(1/α)}_{(N^n)}(s) = e^{−Δ_s^{(1/α)}/4} P^{(1/α)}_{(N^n)}(s).
pub fn hermite_rect_operator(n: usize, big_n: usize, alpha: &Rat) -> Result<MPoly<Rat>> {
    let inv = alpha.recip();
    let p = to_mpoly_in(&jack(&Partition::rectangle(big_n as u32, n), &inv)?, n, &(0..n).collect::<Vec<_>>())?;
    Laplacian::Gaussian { alpha: inv }.exp(&p, &(0..n).collect::<Vec<_>>(), &-Rat::new(1.into(), 4.into()))
}

/// Moment-path ⟨ΠΠ(s_j + sign·√α x_k)⟩ over the Gaussian α-ensemble of N
/// eigenvalues, computed in ℚ[t]/(t² − α).
pub fn hermite_rect_moment(n: usize, big_n: usize, alpha: &Rat, sign: i64) -> Result<MPoly<Rat>> {
    let t = QuadExt::radical(alpha.clone()).scale(&int(sign));
    let g = pair_product(n, big_n, &t);
    let (_, xv) = blocks(n, big_n);
    let mut eng = MomentEngine::new(Ensemble::gaussian_alpha(alpha, big_n)?);
    let avg = eng.average_over(&g, &xv)?;
    Ok(leading_block(&avg.try_map_coeffs(QuadExt::to_rat)?, n))
}

/// 𝓗^{(β/2)}_{(N^n)}(s) = ⟨ΠΠ(s_j ± √(2/β) x_k)⟩ over GβE_N, both signs.
pub fn hermite_rect_identity(n: usize, big_n: usize, alpha: &Rat) -> Result<CheckReport> {
    let op = hermite_rect_operator(n, big_n, alpha)?;
    let name = format!("rectangular Hermite n={n} N={big_n} alpha={alpha}");
    for sign in [1, -1] {
        let r = compare(name.clone(), &op, &hermite_rect_moment(n, big_n, alpha, sign)?);
        if !r.passed {
            return Ok(r);
        }
    }
    Ok(CheckReport::pass(name, format!("operator and moment paths agree ({} terms)", op.len())))
}

/// Operator-path 𝓛^{(1/α, γ')}_{(N^n)}(s) with γ' = α(γ+1) − 1.
pub fn laguerre_rect_operator(n: usize, big_n: usize, alpha: &Rat, gamma: &Rat) -> Result<MPoly<Rat>> {
    let inv = alpha.recip();
    let vars: Vec<usize> = (0..n).collect();
    let p = to_mpoly_in(&jack(&Partition::rectangle(big_n as u32, n), &inv)?, n, &vars)?;
    Laplacian::Chiral { alpha: inv, gamma: dual_gamma(alpha, gamma) }.exp(&p, &vars, &-Rat::one())
}

/// Moment-path ⟨ΠΠ(s_j − α x_k)⟩ over the chiral (α, γ) ensemble of N eigenvalues.
pub fn laguerre_rect_moment(n: usize, big_n: usize, alpha: &Rat, gamma: &Rat) -> Result<MPoly<Rat>> {
    let g = pair_product(n, big_n, &-alpha.clone());
    let (_, xv) = blocks(n, big_n);
    let mut eng = MomentEngine::new(Ensemble::chiral_alpha(alpha, big_n, gamma.clone())?);
    Ok(leading_block(&eng.average_over(&g, &xv)?, n))
}

pub fn laguerre_rect_identity(n: usize, big_n: usize, alpha: &Rat, gamma: &Rat) -> Result<CheckReport> {
    let name = format!("rectangular Laguerre n={n} N={big_n} alpha={alpha} gamma={gamma}");
    Ok(compare(name, &laguerre_rect_operator(n, big_n, alpha, gamma)?, &laguerre_rect_moment(n, big_n, alpha, gamma)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InverseCase {
    Gaussian,
    Chiral,
}

/// Values of the two bracketed expressions and the two directly computed
/// ratios Δ_f G / G and Δ_s G / G at one point.
#[derive(Debug, Clone)]
pub struct InverseValues {
    pub bracket_f: Option<Rat>,
    pub bracket_s: Option<Rat>,
    pub direct_f: Rat,
    pub direct_s: Rat,
}

/// G = Π(s_i − a f_k)^b with b = −1/α, dual parameters α' = α and (chiral)
/// γ' = 1/α − γ − 1. The Gaussian case also evaluates the bracketed
/// expressions that Δ_f G/G and Δ_s G/G reduce to.
pub fn inverse_power_values(
    case: InverseCase,
    alpha: &Rat,
    gamma: &Rat,
    s: &[Rat],
    f: &[Rat],
    a: &Rat,
) -> Result<InverseValues> {
    let (n, big_n) = (s.len(), f.len());
    let b = -alpha.recip();
    let alpha_d = alpha.clone();
    let gamma_d = alpha.recip() - gamma - Rat::one();
    let point: Vec<Rat> = s.iter().chain(f).cloned().collect();
    let nv = n + big_n;
    let mut u = vec![vec![Rat::zero(); big_n]; n];
    for i in 0..n {
        for k in 0..big_n {
            let lin = &MPoly::var(nv, i) - &MPoly::<Rat>::var(nv, n + k).scale(a);
            u[i][k] = RatFunc::inverse_of(lin)?.eval(&point)?;
        }
    }
    let distinct = |v: &[Rat]| v.iter().enumerate().all(|(i, x)| v[i + 1..].iter().all(|y| y != x));
    if !distinct(s) || !distinct(f) {
        return Err(Error::Pole("coincident coordinates".into()));
    }
    let a2 = a * a;
    // Log-derivatives of G.
    let dlf: Vec<Rat> = (0..big_n).map(|k| -(a * &b) * (0..n).map(|i| u[i][k].clone()).sum::<Rat>()).collect();
    let d2lf: Vec<Rat> = (0..big_n).map(|k| -(&a2 * &b) * (0..n).map(|i| &u[i][k] * &u[i][k]).sum::<Rat>()).collect();
    let dls: Vec<Rat> = (0..n).map(|i| &b * u[i].iter().sum::<Rat>()).collect();
    let d2ls: Vec<Rat> = (0..n).map(|i| -&b * u[i].iter().map(|x| x * x).sum::<Rat>()).collect();

    let mut direct_f = Rat::zero();
    let mut direct_s = Rat::zero();
    match case {
        InverseCase::Gaussian => {
            for k in 0..big_n {
                direct_f += &d2lf[k] + &dlf[k] * &dlf[k];
                for l in (0..big_n).filter(|&l| l != k) {
                    direct_f += int(2) / alpha * &dlf[k] / (&f[k] - &f[l]);
                }
            }
            for i in 0..n {
                direct_s += &d2ls[i] + &dls[i] * &dls[i];
                for j in (0..n).filter(|&j| j != i) {
                    direct_s += int(2) / &alpha_d * &dls[i] / (&s[i] - &s[j]);
                }
            }
        }
        InverseCase::Chiral => {
            for k in 0..big_n {
                direct_f += &f[k] * (&d2lf[k] + &dlf[k] * &dlf[k]) + (gamma + Rat::one()) * &dlf[k];
                for l in (0..big_n).filter(|&l| l != k) {
                    direct_f += int(2) / alpha * &f[k] * &dlf[k] / (&f[k] - &f[l]);
                }
            }
            for i in 0..n {
                direct_s += &s[i] * (&d2ls[i] + &dls[i] * &dls[i]) + (&gamma_d + Rat::one()) * &dls[i];
                for j in (0..n).filter(|&j| j != i) {
                    direct_s += int(2) / &alpha_d * &s[i] * &dls[i] / (&s[i] - &s[j]);
                }
            }
        }
    }

    let (bracket_f, bracket_s) = if case == InverseCase::Gaussian {
        let mut bf = Rat::zero();
        let mut bs = Rat::zero();
        for i in 0..n {
            for k in 0..big_n {
                let sum_j: Rat = (0..n).filter(|&j| j != i).map(|j| u[j][k].clone()).sum();
                let sum_l: Rat = (0..big_n).filter(|&l| l != k).map(|l| u[i][l].clone()).sum();
                let inner_f =
                    &a2 * &b * (&b - Rat::one()) * &u[i][k] + &a2 * &b * &b * &sum_j - &a2 * &b / alpha * &sum_l;
                let inner_s = &b * (&b - Rat::one()) * &u[i][k] - &b / &alpha_d * &sum_j + &b * &b * &sum_l;
                bf += &u[i][k] * inner_f;
                bs += &u[i][k] * inner_s;
            }
        }
        (Some(bf), Some(bs))
    } else {
        (None, None)
    };
    Ok(InverseValues { bracket_f, bracket_s, direct_f, direct_s })
}

/// Random rational in [−5, 5] with denominator at most 7.
pub fn random_rational(rng: &mut impl Rng) -> Rat {
    let d: i64 = rng.gen_range(1..=7);
    let n: i64 = rng.gen_range(-5 * d..=5 * d);
    Rat::new(n.into(), d.into())
}

/// Runs the inverse-power identity at `points` random points; points that
/// hit a pole are redrawn.
pub fn inverse_power_delta_check(
    case: InverseCase,
    alpha: &Rat,
    gamma: &Rat,
    n: usize,
    big_n: usize,
    a: &Rat,
    points: usize,
    rng: &mut impl Rng,
) -> Result<CheckReport> {
    if case == InverseCase::Chiral && gamma <= &-Rat::one() {
        return usage("gamma must exceed -1");
    }
    let name = format!("inverse-power {case:?} n={n} N={big_n} alpha={alpha} a={a}");
    let mut done = 0;
    let mut attempts = 0;
    while done < points {
        attempts += 1;
        if attempts > 100 * points {
            return usage("could not find pole-free points");
        }
        let mut draw = |m: usize| -> Vec<Rat> {
            (0..m)
                .map(|_| {
                    let x = random_rational(rng);
                    if case == InverseCase::Chiral {
                        x.abs() + Rat::new(1.into(), 3.into())
                    } else {
                        x
                    }
                })
                .collect()
        };
        let (s, f) = (draw(n), draw(big_n));
        let v = match inverse_power_values(case, alpha, gamma, &s, &f, a) {
            Ok(v) => v,
            Err(Error::Pole(_)) => continue,
            Err(e) => return Err(e),
        };
        let ok = v.direct_f == v.direct_s
            && v.bracket_f.as_ref().is_none_or(|b| *b == v.direct_f)
            && v.bracket_s.as_ref().is_none_or(|b| *b == v.direct_s);
        if !ok {
            return Ok(CheckReport::fail(name, format!("at s={s:?} f={f:?}: {v:?}")));
        }
        done += 1;
    }
    Ok(CheckReport::pass(name, format!("{points} random points")))
}

trait AbsExt {
    fn abs(&self) -> Self;
}

impl AbsExt for Rat {
    fn abs(&self) -> Self {
        num_traits::Signed::abs(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn smallest_cases() {
        let a = rat(3, 2);
        assert!(prop3_poly_check(1, 1, &a, 1).unwrap().passed);
        assert!(prop4_poly_check(1, 1, &a, &rat(1, 2)).unwrap().passed);
        // n = 1, N = 2: 𝓗_(2)(s) = s² − 1/2 for every α
        let h = hermite_rect_operator(1, 2, &a).unwrap();
        assert_eq!(h, &MPoly::var(1, 0).pow(2) - &MPoly::constant(1, rat(1, 2)));
        assert!(hermite_rect_identity(1, 2, &a).unwrap().passed);
        assert!(laguerre_rect_identity(1, 1, &a, &int(2)).unwrap().passed);
    }
}
