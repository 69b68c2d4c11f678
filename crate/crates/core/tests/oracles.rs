//! Independent oracles for the symmetric-function and moment layers. Each
//! oracle is computed without the code path it checks.

use betadual_core::exact::{alpha_grid, int, rat, rat_pow, MPoly, Rat};
use betadual_core::moments::{jack_average, Ensemble, MomentEngine};
use betadual_core::partition::{part, partitions_of, partitions_with_len, Partition};
use betadual_core::symfunc::{evaluate, jack, multiply, omega, scalar_product, specialize, to_mpoly, Basis, SymFunc};
use num_traits::{One, Zero};

/// h_k as Σ_{|μ|=k} m_μ.
fn complete(k: i64) -> SymFunc {
    if k < 0 {
        return SymFunc::zero(Basis::Monomial, Rat::one(), 0);
    }
    let k = k as u32;
    let mut f = SymFunc::zero(Basis::Monomial, Rat::one(), k);
    for mu in partitions_of(k) {
        f.add_term(mu, Rat::one());
    }
    f
}

/// det(h_{λ_i − i + j}) by cofactor expansion along the first row.
fn jacobi_trudi(rows: &[u32], offset: usize, cols: &[usize]) -> Option<SymFunc> {
    if rows.is_empty() {
        return Some(SymFunc::basis_element(Basis::PowerSum, Rat::one(), &Partition::empty()));
    }
    let mut acc: Option<SymFunc> = None;
    for (pos, &c) in cols.iter().enumerate() {
        let idx = rows[0] as i64 - offset as i64 + c as i64;
        if idx < 0 {
            continue;
        }
        let rest: Vec<usize> = cols.iter().enumerate().filter(|&(p, _)| p != pos).map(|(_, &c)| c).collect();
        let Some(minor) = jacobi_trudi(&rows[1..], offset + 1, &rest) else { continue };
        let mut term = multiply(&complete(idx), &minor).unwrap();
        if pos % 2 == 1 {
            term = term.scale(&-Rat::one());
        }
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term).unwrap(),
        });
    }
    acc
}

#[test]
fn alpha_one_jacks_are_schur_functions() {
    for d in 1..=6 {
        for lambda in partitions_of(d) {
            let n = lambda.len();
            let s = jacobi_trudi(lambda.parts(), 0, &(0..n).collect::<Vec<_>>()).unwrap();
            let s = s.to_basis(Basis::Monomial, &int(1)).unwrap();
            let p = jack(&lambda, &int(1)).unwrap();
            assert_eq!(s.coeffs(), p.coeffs(), "Schur mismatch at {lambda}");
        }
    }
}

#[test]
fn degree_two_jack_closed_form() {
    for a in alpha_grid() {
        let p = jack(&part(&[2]), &a).unwrap();
        assert_eq!(p.coeff(&part(&[2])), int(1));
        assert_eq!(p.coeff(&part(&[1, 1])), int(2) / (int(1) + &a));
        assert_eq!(jack(&part(&[1, 1, 1]), &a).unwrap().coeffs().len(), 1);
    }
}

#[test]
fn norm_and_specialization_formulas() {
    for a in alpha_grid() {
        for d in 0..=8 {
            for lambda in partitions_of(d) {
                let p = jack(&lambda, &a).unwrap();
                let norm = scalar_product(&p, &p, &a).unwrap();
                assert_eq!(norm, lambda.upper_hook(&a) / lambda.lower_hook(&a), "norm {lambda} alpha={a}");
                for n in [lambda.len(), lambda.len() + 2] {
                    let spec = specialize(&p, n).unwrap();
                    assert_eq!(spec, lambda.b_coeff(&a, &int(n as i64)) / lambda.lower_hook(&a));
                    if d <= 5 {
                        assert_eq!(spec, evaluate(&p, &vec![int(1); n]).unwrap());
                    }
                }
            }
        }
    }
    // P_(2)(1^N) = N(N + α)/(1 + α) and P_(1^n)(1^N) = C(N, n)
    let a = rat(2, 3);
    let n = int(5);
    assert_eq!(specialize(&jack(&part(&[2]), &a).unwrap(), 5).unwrap(), &n * (&n + &a) / (int(1) + &a));
    assert_eq!(specialize(&jack(&part(&[1, 1, 1]), &a).unwrap(), 5).unwrap(), int(10));
}

#[test]
fn omega_maps_jacks_to_dual_jacks() {
    for a in alpha_grid() {
        let dual = a.recip();
        for d in 1..=6 {
            for lambda in partitions_of(d) {
                let lhs = omega(&jack(&lambda, &a).unwrap(), &a).unwrap();
                let conj = lambda.conjugate();
                let pd = jack(&conj, &dual).unwrap();
                let norm = scalar_product(&pd, &pd, &dual).unwrap();
                let rhs = pd.scale(&norm.recip()).to_basis(Basis::PowerSum, &dual).unwrap();
                assert_eq!(lhs.coeffs(), rhs.coeffs(), "omega duality {lambda} alpha={a}");
            }
        }
    }
}

#[test]
fn omega_is_self_adjoint() {
    let a = rat(3, 2);
    let k = rat(-2, 5);
    let f = jack(&part(&[3, 1]), &a).unwrap().add(&SymFunc::monomial(&part(&[2, 2]))).unwrap();
    let g = jack(&part(&[2, 1, 1]), &a).unwrap();
    let lhs = scalar_product(&omega(&f, &k).unwrap(), &g, &a).unwrap();
    let rhs = scalar_product(&f, &omega(&g, &k).unwrap(), &a).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn hook_products_swap_under_conjugation() {
    for a in alpha_grid() {
        for lambda in partitions_of(6) {
            let conj = lambda.conjugate();
            assert_eq!(lambda.upper_hook(&a), rat_pow(&a, 6) * conj.lower_hook(&a.recip()));
        }
    }
}

/// (2m − 1)!! / 2^m, the 2m-th moment of e^{−x²}/√π.
fn gauss_moment(k: u32) -> Rat {
    if k % 2 == 1 {
        return Rat::zero();
    }
    (1..=k / 2).fold(Rat::one(), |acc, j| acc * int(2 * j as i64 - 1) / int(2))
}

/// Γ(c + k)/Γ(c) for rational c.
fn gamma_ratio(c: &Rat, k: u32) -> Rat {
    (0..k).fold(Rat::one(), |acc, i| acc * (c + int(i as i64)))
}

/// ⟨x1^a x2^b⟩ for the weight |x1 − x2|^β e^{−x1² − x2²}. With
/// s = (x1 + x2)/√2, u = (x1 − x2)/√2 the weight factorizes into e^{−s²} and
/// |u|^β e^{−u²}; ⟨u^{2k}⟩ = Γ(k + (β+1)/2)/Γ((β+1)/2).
fn two_variable_moment(beta: &Rat, a: u32, b: u32) -> Rat {
    let total = a + b;
    if total % 2 == 1 {
        return Rat::zero();
    }
    let c = (beta + int(1)) / int(2);
    // (s + u)^a (s − u)^b, collected by powers of u
    let nv = 2;
    let s = MPoly::<Rat>::var(nv, 0);
    let u = MPoly::<Rat>::var(nv, 1);
    let poly = &(&s + &u).pow(a) * &(&s - &u).pow(b);
    let mut acc = Rat::zero();
    for (e, coef) in poly.terms() {
        if e[1] % 2 == 1 {
            continue;
        }
        acc += coef * gauss_moment(e[0]) * gamma_ratio(&c, e[1] / 2);
    }
    acc / rat_pow(&int(2), (total / 2) as i32)
}

#[test]
fn gaussian_averages_match_integral_oracles() {
    for a in alpha_grid() {
        let beta = int(2) / &a;
        let ens1 = Ensemble::gaussian_alpha(&a, 1).unwrap();
        let ens2 = Ensemble::gaussian_alpha(&a, 2).unwrap();
        for d in 0..=6 {
            let one = Partition::new(vec![d]).unwrap();
            assert_eq!(jack_average(&one, &ens1).unwrap(), gauss_moment(d), "N=1 ({d}) alpha={a}");
            for lambda in partitions_with_len(d, 2) {
                let poly = to_mpoly(&jack(&lambda, &a).unwrap(), 2).unwrap();
                let oracle: Rat = poly.terms().map(|(e, c)| c * two_variable_moment(&beta, e[0], e[1])).sum();
                assert_eq!(jack_average(&lambda, &ens2).unwrap(), oracle, "N=2 {lambda} alpha={a}");
            }
        }
    }
    // ⟨x1 x2⟩ = −1/2 and ⟨p_1²⟩ = 1 for GUE_2
    let mut eng = MomentEngine::new(Ensemble::gaussian(int(2), 2).unwrap());
    assert_eq!(eng.monomial_moment(&[1, 1]).unwrap(), rat(-1, 2));
    let p1 = &MPoly::<Rat>::var(2, 0) + &MPoly::var(2, 1);
    assert_eq!(eng.average_poly(&p1.pow(2)).unwrap(), int(1));
}

#[test]
fn chiral_single_eigenvalue_matches_gamma_moments() {
    for a in alpha_grid() {
        for g in [int(0), rat(1, 2), int(1), int(2)] {
            let ens = Ensemble::chiral_alpha(&a, 1, g.clone()).unwrap();
            for k in 0..=6 {
                let lambda = Partition::new(vec![k]).unwrap();
                assert_eq!(jack_average(&lambda, &ens).unwrap(), gamma_ratio(&(&g + int(1)), k));
            }
        }
    }
}

#[test]
fn normalized_gaussian_average_is_independent_of_n() {
    for a in [rat(1, 2), int(2)] {
        for lambda in partitions_of(4) {
            let values: Vec<Rat> = (lambda.len()..lambda.len() + 4)
                .map(|n| {
                    let ens = Ensemble::gaussian_alpha(&a, n).unwrap();
                    jack_average(&lambda, &ens).unwrap() / specialize(&jack(&lambda, &a).unwrap(), n).unwrap()
                })
                .collect();
            assert!(values.windows(2).all(|w| w[0] == w[1]), "{lambda}: {values:?}");
        }
    }
}
