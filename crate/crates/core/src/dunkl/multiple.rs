use num_traits::{One, Zero};

use super::{external_field_average, hermite_rect_moment, hermite_rect_operator, leading_block};
use crate::error::{usage, Error, Result};
use crate::exact::{int, Coeff, GaussRat, MPoly, QuadExt, Rat};
use crate::moments::{Ensemble, MomentEngine};
use crate::report::{first_difference, CheckReport};
use crate::symfunc::check_degree;

/// Expands the multiplicity vector: `g^mult` as a flat list of field eigenvalues.
pub fn field_eigenvalues(g: &[Rat], mult: &[u32]) -> Result<Vec<Rat>> {
    if g.len() != mult.len() {
        return usage("g and multiplicities differ in length");
    }
    Ok(g.iter().zip(mult).flat_map(|(x, &m)| std::iter::repeat_n(x.clone(), m as usize)).collect())
}

/// Multiple Hermite polynomial of type II in one variable z, from
/// (−i)^N/√π ∫ e^{−(y−iz)²} Π (y − i g_j/2)^{n_j} dy.
///
/// The shift y = u + iz leaves a Gaussian in u, whose even moments are
/// (2m−1)!!/2^m. The computation runs over ℚ(i); a surviving imaginary part
/// is an internal error.
pub fn multiple_hermite(g: &[Rat], mult: &[u32]) -> Result<MPoly<Rat>> {
    let f = field_eigenvalues(g, mult)?;
    check_degree(f.len() as u32)?;
    let i = GaussRat::i();
    let u = MPoly::<GaussRat>::var(2, 0);
    let iz = MPoly::<GaussRat>::var(2, 1).scale_by(&i);
    let mut prod = MPoly::<GaussRat>::one(2);
    for gj in &f {
        let shift = MPoly::constant(2, GaussRat::new(Rat::zero(), -gj / int(2)));
        prod = &prod * &(&(&u + &iz) + &shift);
    }
    let mut out = MPoly::<GaussRat>::zero(1);
    for (e, c) in prod.terms() {
        if e[0] % 2 == 1 {
            continue;
        }
        let m = e[0] / 2;
        let moment = (1..=m).fold(Rat::one(), |acc, k| acc * int(2 * k as i64 - 1) / int(2));
        out.add_term(vec![e[1]], c.scale(&moment));
    }
    // (−i)^N
    let phase = (0..f.len()).fold(GaussRat::one(), |acc, _| acc * GaussRat::new(Rat::zero(), -Rat::one()));
    out.scale_by(&phase)
        .try_map_coeffs(|c| c.to_rat().map_err(|_| Error::Internal(format!("imaginary coefficient {c}"))))
}

/// e^{−p₂(f)/4} ⟨Π(z − x_k) e^{tr XF}⟩ over GUE_N, computed as
/// (e^{Δ_y^{(1)}/4} Π(z − y_k)) at y = f/2.
///
/// The HCIZ integral ∫ e^{tr XUFU†} dU is ₀𝓕₀(x; f) = ₀𝓕₀(2x; f/2), so the
/// external-field average at y = f/2 carries the factor e^{p₂(f/2)} = e^{p₂(f)/4},
/// which the prefactor cancels.
pub fn multiple_hermite_matrix(g: &[Rat], mult: &[u32]) -> Result<MPoly<Rat>> {
    let f = field_eigenvalues(g, mult)?;
    let n = f.len();
    let nv = n + 1;
    let z = MPoly::<Rat>::var(nv, 0);
    let charpoly = (1..=n).fold(MPoly::one(nv), |acc, k| &acc * &(&z - &MPoly::var(nv, k)));
    let ys: Vec<usize> = (1..=n).collect();
    let avg = external_field_average(&charpoly, &ys, &int(1))?;
    let at: Vec<(usize, Rat)> = f.iter().enumerate().map(|(k, x)| (k + 1, x / int(2))).collect();
    Ok(leading_block(&avg.eval_partial(&at), 1))
}

pub fn mhermite_matrix_consistency(g: &[Rat], mult: &[u32]) -> Result<CheckReport> {
    let one_d = multiple_hermite(g, mult)?;
    let matrix = multiple_hermite_matrix(g, mult)?;
    let gs: Vec<String> = g.iter().map(|x| x.to_string()).collect();
    let name = format!("multiple Hermite g=({}) mult={mult:?}", gs.join(","));
    Ok(match first_difference(&one_d, &matrix) {
        None => CheckReport::pass(name, format!("H(z) = {one_d}")),
        Some(d) => CheckReport::fail(name, d),
    })
}

/// Σ_l x_l^k over `nvars` variables.
fn power_sum_poly<C: Coeff>(nvars: usize, k: u32) -> MPoly<C> {
    (0..nvars).fold(MPoly::zero(nvars), |acc, l| &acc + &MPoly::var(nvars, l).pow(k))
}

/// Σ_{m ≤ d} E^m / m!, truncated at total degree d. E must have no constant term.
fn exp_truncated<C: Coeff>(e: &MPoly<C>, d: u32) -> Result<MPoly<C>> {
    let nv = e.nvars();
    let mut acc = MPoly::one(nv);
    let mut term = MPoly::one(nv);
    for m in 1..=d {
        term = term.mul_truncated(e, d)?.scale(&int(m as i64).recip());
        if term.is_zero() {
            break;
        }
        acc = acc.try_add(&term)?;
    }
    Ok(acc)
}

fn qpow(v: &QuadExt, k: u32) -> QuadExt {
    (0..k).fold(QuadExt::one(), |acc, _| acc * v.clone())
}

/// The couplings t_1 = −2u + v p_1(1/s), t_2 = 2 + v² p_2(1/s),
/// t_k = v^k p_k(1/s) for k ≥ 3, for k = 1..=d.
pub fn formal_couplings(v: &QuadExt, u: &Rat, s: &[Rat], d: u32) -> Vec<QuadExt> {
    (1..=d)
        .map(|k| {
            let pk: Rat = s.iter().map(|x| crate::exact::rat_pow(x, -(k as i32))).sum();
            let shift = match k {
                1 => int(-2) * u,
                2 => int(2),
                _ => Rat::zero(),
            };
            QuadExt::rational(shift) + qpow(v, k).scale(&pk)
        })
        .collect()
}

/// exp(−Σ t_k p_k(x)/k) against (Π s_j)^{−N} ΠΠ(s_j − v x_l) e^{−p₂(x) + 2u p₁(x)}
/// as power series in N variables x through total degree d.
fn formal_product_identity(v: &QuadExt, big_n: usize, u: &Rat, s: &[Rat], d: u32) -> Result<Option<String>> {
    let t = formal_couplings(v, u, s, d);
    let mut expo = MPoly::<QuadExt>::zero(big_n);
    for (k, tk) in (1..=d).zip(&t) {
        let c = tk.scale(&-int(k as i64).recip());
        expo = expo.try_add(&power_sum_poly::<QuadExt>(big_n, k).scale_by(&c))?;
    }
    let lhs = exp_truncated(&expo, d)?;

    let det_s: Rat = s.iter().product();
    let mut prod = MPoly::<QuadExt>::constant(big_n, QuadExt::rational(crate::exact::rat_pow(&det_s, -(big_n as i32))));
    for sj in s {
        for l in 0..big_n {
            let lin = MPoly::constant(big_n, QuadExt::rational(sj.clone()))
                .try_add(&MPoly::var(big_n, l).scale_by(&v.negate()))?;
            prod = prod.try_mul(&lin)?;
        }
    }
    let gauss =
        power_sum_poly::<QuadExt>(big_n, 1).scale(&(int(2) * u)).try_add(&power_sum_poly::<QuadExt>(big_n, 2).neg())?;
    let rhs = prod.mul_truncated(&exp_truncated(&gauss, d)?, d)?;
    Ok(first_difference(&lhs, &rhs))
}

/// At u = 0 and real v = √α the couplings turn the normalized one-matrix
/// partition function into (Π s_j)^{−N} ⟨ΠΠ(s_j − v x_l)⟩, so
/// (Π s_j)^N Z / z_{N,β} = 𝓗^{(1/α)}_{(N^n)}(s). The series is checked to
/// terminate at degree nN before averaging.
pub fn zhermite_check(n: usize, big_n: usize, alpha: &Rat, s: &[Rat]) -> Result<CheckReport> {
    if s.len() != n {
        return usage("s must have n coordinates");
    }
    let name = format!("partition function as Hermite n={n} N={big_n} alpha={alpha}");
    let v = QuadExt::radical(alpha.clone());
    let deg = (n * big_n) as u32;
    check_degree(deg)?;
    if let Some(d) = formal_product_identity(&v, big_n, &Rat::zero(), s, deg)? {
        return Ok(CheckReport::fail(name, format!("formal product: {d}")));
    }
    // exp(−Σ_{k} v^k p_k(1/s) p_k(x)/k) = Π(1 − v x_l/s_j) is a polynomial, so
    // its truncation at any degree above nN is exact; averaging it against e^{−p₂} gives Z/z.
    let probe = deg + 2;
    let mut expo = MPoly::<QuadExt>::zero(big_n);
    for k in 1..=probe {
        let pk: Rat = s.iter().map(|x| crate::exact::rat_pow(x, -(k as i32))).sum();
        let c = qpow(&v, k).scale(&(-pk / int(k as i64)));
        expo = expo.try_add(&power_sum_poly::<QuadExt>(big_n, k).scale_by(&c))?;
    }
    let series = exp_truncated(&expo, probe)?;
    if series.total_degree().unwrap_or(0) > deg {
        return Ok(CheckReport::fail(name, "series does not terminate at degree nN"));
    }
    let xs: Vec<usize> = (0..big_n).collect();
    let mut eng = MomentEngine::new(Ensemble::gaussian_alpha(alpha, big_n)?);
    let z_ratio = eng.average_over(&series, &xs)?.coeff(&vec![0; big_n]).to_rat()?;
    let det_s: Rat = s.iter().product();
    let lhs = crate::exact::rat_pow(&det_s, big_n as i32) * z_ratio;
    let op = hermite_rect_operator(n, big_n, alpha)?;
    let rhs = op.eval(s);
    let moment = hermite_rect_moment(n, big_n, alpha, -1)?.eval(s);
    Ok(CheckReport::from_bool(
        name,
        lhs == rhs && moment == rhs,
        format!("(prod s)^N Z/z = {lhs}, Hermite = {rhs}, moment path = {moment}"),
    ))
}

/// Truncated formal identity in t² = −α for both signs of v, then the
/// Hermite reduction when u = 0.
pub fn formal_model_check(n: usize, big_n: usize, alpha: &Rat, u: &Rat, s: &[Rat], d: u32) -> Result<CheckReport> {
    if s.len() != n || s.iter().any(Zero::is_zero) {
        return usage("s must have n nonzero coordinates");
    }
    check_degree(d)?;
    let mut reports = Vec::new();
    for sign in [1i64, -1] {
        let v = QuadExt::radical(-alpha.clone()).scale(&int(sign));
        let name = format!("formal product n={n} N={big_n} alpha={alpha} u={u} d={d} sign={sign}");
        reports.push(match formal_product_identity(&v, big_n, u, s, d)? {
            None => CheckReport::pass(name, format!("agree through degree {d}")),
            Some(diff) => CheckReport::fail(name, diff),
        });
    }
    if u.is_zero() {
        reports.push(zhermite_check(n, big_n, alpha, s)?);
    }
    Ok(CheckReport::all(format!("formal one-matrix model n={n} N={big_n} alpha={alpha}"), reports))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn one_dimensional_anchors() {
        let g = rat(3, 5);
        let h1 = multiple_hermite(std::slice::from_ref(&g), &[1]).unwrap();
        assert_eq!(h1, &MPoly::var(1, 0) - &MPoly::constant(1, &g / int(2)));
        let h2 = multiple_hermite(std::slice::from_ref(&g), &[2]).unwrap();
        let shifted = &MPoly::var(1, 0) - &MPoly::constant(1, &g / int(2));
        assert_eq!(h2, &shifted.pow(2) - &MPoly::constant(1, rat(1, 2)));
        assert!(mhermite_matrix_consistency(&[g], &[1]).unwrap().passed);
    }

    #[test]
    fn formal_model_smallest() {
        let r = formal_model_check(1, 1, &int(1), &rat(1, 3), &[rat(2, 1)], 4).unwrap();
        assert!(r.passed, "{}", r.detail);
        let z = zhermite_check(1, 2, &rat(1, 2), &[rat(3, 2)]).unwrap();
        assert!(z.passed, "{}", z.detail);
    }
}
