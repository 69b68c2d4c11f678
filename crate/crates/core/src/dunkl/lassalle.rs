use num_traits::Zero;

use super::Laplacian;
use crate::error::Result;
use crate::exact::{int, rat_pow, MPoly, Rat};
use crate::moments::{Ensemble, MomentEngine};
use crate::partition::Partition;
use crate::report::CheckReport;
use crate::symfunc::{jack, specialize, to_mpoly};

fn all_vars(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// Multivariate Hermite polynomial 𝓗_λ = e^{−Δ^{(α)}/4} P_λ in N variables.
pub fn hermite_poly(lambda: &Partition, alpha: &Rat, n: usize) -> Result<MPoly<Rat>> {
    let p = to_mpoly(&jack(lambda, alpha)?, n)?;
    Laplacian::Gaussian { alpha: alpha.clone() }.exp(&p, &all_vars(n), &-Rat::new(1.into(), 4.into()))
}

/// Multivariate Laguerre polynomial 𝓛_λ = e^{−Δ^{(α,γ)}} P_λ in N variables.
pub fn laguerre_poly(lambda: &Partition, alpha: &Rat, gamma: &Rat, n: usize) -> Result<MPoly<Rat>> {
    let p = to_mpoly(&jack(lambda, alpha)?, n)?;
    Laplacian::Chiral { alpha: alpha.clone(), gamma: gamma.clone() }.exp(&p, &all_vars(n), &-int(1))
}

/// A_λ = (2α)^{−|λ|} h_λ P_λ(1^N), the squared Hermite norm.
pub fn norm_a(lambda: &Partition, alpha: &Rat, n: usize) -> Result<Rat> {
    let spec = specialize(&jack(lambda, alpha)?, n)?;
    Ok(rat_pow(&(int(2) * alpha), -(lambda.weight() as i32)) * lambda.upper_hook(alpha) * spec)
}

/// B_λ = 2^{|λ|} [γ+q]_λ A_λ with q = 1 + (N−1)/α, the squared Laguerre norm.
pub fn norm_b(lambda: &Partition, alpha: &Rat, gamma: &Rat, n: usize) -> Result<Rat> {
    let q = int(1) + int(n as i64 - 1) / alpha;
    Ok(rat_pow(&int(2), lambda.weight() as i32)
        * lambda.gen_pochhammer(&(gamma + q), alpha)
        * norm_a(lambda, alpha, n)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrthoKind {
    Hermite,
    Laguerre,
}

/// ⟨F_λ F_μ⟩ over the matching ensemble against δ_{λμ} A_λ (Hermite) or
/// δ_{λμ} B_λ (Laguerre). `gamma` is ignored for Hermite.
pub fn orthogonality_check(
    kind: OrthoKind,
    lambda: &Partition,
    mu: &Partition,
    alpha: &Rat,
    gamma: &Rat,
    n: usize,
) -> Result<CheckReport> {
    let (f, g, ens, expected) = match kind {
        OrthoKind::Hermite => (
            hermite_poly(lambda, alpha, n)?,
            hermite_poly(mu, alpha, n)?,
            Ensemble::gaussian_alpha(alpha, n)?,
            norm_a(lambda, alpha, n)?,
        ),
        OrthoKind::Laguerre => (
            laguerre_poly(lambda, alpha, gamma, n)?,
            laguerre_poly(mu, alpha, gamma, n)?,
            Ensemble::chiral_alpha(alpha, n, gamma.clone())?,
            norm_b(lambda, alpha, gamma, n)?,
        ),
    };
    let expected = if lambda == mu { expected } else { Rat::zero() };
    let got = MomentEngine::new(ens).average_poly(&(&f * &g))?;
    let name = format!("{kind:?} orthogonality {lambda} {mu} alpha={alpha} N={n}");
    Ok(CheckReport::from_bool(name, got == expected, format!("average {got}, expected {expected}")))
}

/// e^{Δ^{(α)}/4} F over the block `vars`: the external-field average
/// e^{−p_2(y)} ⟨₀𝓕₀(2x; y) F(x)⟩ as a polynomial in y.
pub fn external_field_average(f: &MPoly<Rat>, vars: &[usize], alpha: &Rat) -> Result<MPoly<Rat>> {
    Laplacian::Gaussian { alpha: alpha.clone() }.exp(f, vars, &Rat::new(1.into(), 4.into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::partition::part;

    #[test]
    fn one_variable_anchors() {
        let a = rat(3, 2);
        let h2 = hermite_poly(&part(&[2]), &a, 1).unwrap();
        assert_eq!(h2, &MPoly::var(1, 0).pow(2) - &MPoly::constant(1, rat(1, 2)));
        assert_eq!(norm_a(&part(&[2]), &a, 1).unwrap(), rat(1, 2));
        let g = rat(1, 2);
        let l1 = laguerre_poly(&part(&[1]), &a, &g, 1).unwrap();
        assert_eq!(l1, &MPoly::var(1, 0) - &MPoly::constant(1, &g + int(1)));
        assert_eq!(norm_b(&part(&[1]), &a, &g, 1).unwrap(), &g + int(1));
        let y2 = external_field_average(&MPoly::var(1, 0).pow(2), &[0], &a).unwrap();
        assert_eq!(y2, &MPoly::var(1, 0).pow(2) + &MPoly::constant(1, rat(1, 2)));
    }

    #[test]
    fn laguerre_first_polynomial_in_n_variables() {
        // 𝓛_(1) = p_1 − N(γ+q)
        let (a, g, n) = (rat(1, 2), int(2), 3usize);
        let q = int(1) + int(n as i64 - 1) / &a;
        let l1 = laguerre_poly(&part(&[1]), &a, &g, n).unwrap();
        let p1 = (0..n).fold(MPoly::<Rat>::zero(n), |acc, i| &acc + &MPoly::var(n, i));
        assert_eq!(l1, &p1 - &MPoly::constant(n, int(n as i64) * (&g + q)));
    }
}
