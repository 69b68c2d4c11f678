//! Cauchy and dual Cauchy identities, expanded in explicit variables
//! x_1..x_N, y_1..y_M.

use num_traits::One;

use super::{jack_degree, tables, to_mpoly_in};
use crate::error::Result;
use crate::exact::{int, Coeff, MPoly, Rat};
use crate::partition::partitions_with_len;
use crate::report::{first_difference, CheckReport};

fn xy_vars(n: usize, m: usize) -> (Vec<usize>, Vec<usize>) {
    ((0..n).collect(), (n..n + m).collect())
}

/// Π (1 − x_i y_j)^{−1/α}, kept through x-degree `d`.
pub fn cauchy_product(alpha: &Rat, n: usize, m: usize, d: u32) -> MPoly<Rat> {
    let nv = n + m;
    let a = alpha.recip();
    let mut acc = MPoly::one(nv);
    for i in 0..n {
        for j in n..n + m {
            // Σ_k (1/α)_k / k! (x_i y_j)^k
            let mut factor = MPoly::zero(nv);
            let mut c = Rat::one();
            for k in 0..=d {
                let mut e = vec![0; nv];
                e[i] = k;
                e[j] = k;
                factor.add_term(e, c.clone());
                c = c * (&a + int(k as i64)) / int(k as i64 + 1);
            }
            acc = acc.mul_truncated(&factor, 2 * d).unwrap();
        }
    }
    acc
}

/// Σ_{|λ| ≤ d} P_λ(x) P_λ(y) / ‖P_λ‖².
pub fn cauchy_sum(alpha: &Rat, n: usize, m: usize, d: u32) -> Result<MPoly<Rat>> {
    let (xv, yv) = xy_vars(n, m);
    let mut acc = MPoly::zero(n + m);
    for k in 0..=d {
        let jd = jack_degree(k, alpha)?;
        for lam in partitions_with_len(k, n.min(m)) {
            let e = &jd.entries[jd.index[&lam]];
            let f = e.to_symfunc(super::Basis::Monomial);
            let px = to_mpoly_in(&f, n + m, &xv)?;
            let py = to_mpoly_in(&f, n + m, &yv)?;
            acc = &acc + &(&px * &py).scale(&e.norm.recip());
        }
    }
    Ok(acc)
}

pub fn cauchy_check(alpha: &Rat, n: usize, m: usize, d: u32) -> Result<CheckReport> {
    tables(d)?;
    let lhs = cauchy_product(alpha, n, m, d);
    let rhs = cauchy_sum(alpha, n, m, d)?;
    let name = format!("cauchy alpha={alpha} N={n} M={m} d={d}");
    Ok(match first_difference(&lhs, &rhs) {
        None => CheckReport::pass(name, format!("{} coefficients agree", lhs.len())),
        Some(diff) => CheckReport::fail(name, diff),
    })
}

/// Σ_λ P_λ^{(α)}(x) P_{λ'}^{(1/α)}(y) over λ inside the N×M box.
pub fn dual_cauchy_sum(alpha: &Rat, n: usize, m: usize) -> Result<MPoly<Rat>> {
    let (xv, yv) = xy_vars(n, m);
    let inv = alpha.recip();
    let mut acc = MPoly::zero(n + m);
    for k in 0..=(n * m) as u32 {
        for lam in partitions_with_len(k, n) {
            if lam.part(0) as usize > m {
                continue;
            }
            let px = to_mpoly_in(&super::jack(&lam, alpha)?, n + m, &xv)?;
            let py = to_mpoly_in(&super::jack(&lam.conjugate(), &inv)?, n + m, &yv)?;
            acc = &acc + &(&px * &py);
        }
    }
    Ok(acc)
}

pub fn dual_cauchy_product<C: Coeff>(n: usize, m: usize) -> MPoly<C> {
    let nv = n + m;
    let mut acc = MPoly::one(nv);
    for i in 0..n {
        for j in n..n + m {
            let mut e = vec![0; nv];
            e[i] = 1;
            e[j] = 1;
            let f = &MPoly::one(nv) + &MPoly::monomial(e, C::one());
            acc = &acc * &f;
        }
    }
    acc
}

pub fn dual_cauchy_check(alpha: &Rat, n: usize, m: usize) -> Result<CheckReport> {
    let lhs = dual_cauchy_product::<Rat>(n, m);
    let rhs = dual_cauchy_sum(alpha, n, m)?;
    let name = format!("dual cauchy alpha={alpha} N={n} M={m}");
    Ok(match first_difference(&lhs, &rhs) {
        None => CheckReport::pass(name, format!("{} coefficients agree", lhs.len())),
        Some(diff) => CheckReport::fail(name, diff),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn small_cauchy_cases() {
        assert!(cauchy_check(&rat(1, 2), 2, 2, 3).unwrap().passed);
        assert!(dual_cauchy_check(&rat(3, 2), 2, 2).unwrap().passed);
    }
}
