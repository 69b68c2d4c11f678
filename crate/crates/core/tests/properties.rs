use betadual_core::dunkl::{hermite_poly, Laplacian};
use betadual_core::exact::{alpha_grid, int, rat, MPoly, QuadExt, Rat};
use betadual_core::hypergeom::HyperSeries;
use betadual_core::partition::{partitions_of, Dominance, Partition};
use betadual_core::symfunc::{jack, scalar_product, to_mpoly, Basis, SymFunc};
use betadual_core::Error;
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn poly(nvars: usize) -> impl Strategy<Value = MPoly<Rat>> {
    prop::collection::vec((prop::collection::vec(0u32..3, nvars), small_rat()), 0..5)
        .prop_map(move |terms| MPoly::from_terms(nvars, terms))
}

fn partition(max: u32) -> impl Strategy<Value = Partition> {
    (1..=max).prop_flat_map(|d| {
        let all = partitions_of(d);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn alpha() -> impl Strategy<Value = Rat> {
    let grid = alpha_grid();
    (0..grid.len()).prop_map(move |i| grid[i].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomial_ring_axioms(f in poly(3), g in poly(3), h in poly(3)) {
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&(&f - &f), &MPoly::zero(3));
    }

    #[test]
    fn antisymmetric_part_divides_by_difference(f in poly(3)) {
        let num = &f - &f.swap_vars(0, 2);
        let q = num.div_by_difference(0, 2).unwrap();
        let diff = &MPoly::var(3, 0) - &MPoly::<Rat>::var(3, 2);
        prop_assert_eq!(&q * &diff, num);
    }

    #[test]
    fn quadratic_extension_squares_back(d in small_rat(), a in small_rat()) {
        prop_assume!(d != Rat::from_integer(0.into()));
        let t = QuadExt::radical(d.clone());
        prop_assert_eq!((t.clone() * t).to_rat().unwrap(), d.clone());
        let other = QuadExt::radical(&d + int(1));
        prop_assert!(QuadExt::radical(d).try_mul(&other).is_err());
        prop_assert_eq!(QuadExt::rational(a.clone()).to_rat().unwrap(), a);
    }

    #[test]
    fn conjugation_is_an_involution(l in partition(10)) {
        prop_assert_eq!(l.conjugate().conjugate(), l.clone());
        prop_assert_eq!(l.conjugate().weight(), l.weight());
    }

    #[test]
    fn dominance_reverses_under_conjugation(l in partition(8), m in partition(8)) {
        prop_assume!(l.weight() == m.weight());
        let forward = m.dominated_by(&l);
        prop_assert_eq!(forward, l.conjugate().dominated_by(&m.conjugate()));
        if forward {
            prop_assert!(m <= l, "lexicographic order refines dominance");
        }
        if l != m {
            prop_assert!(!(forward && l.dominated_by(&m)));
        }
        if !forward && !l.dominated_by(&m) {
            prop_assert_eq!(m.dominance(&l).unwrap(), Dominance::Incomparable);
        }
    }

    #[test]
    fn basis_round_trip(l in partition(8), c in small_rat()) {
        let f = SymFunc::monomial(&l).scale(&c);
        let back = f.to_basis(Basis::PowerSum, &int(1)).unwrap().to_basis(Basis::Monomial, &int(1)).unwrap();
        prop_assert_eq!(back.coeffs(), f.coeffs());
    }

    #[test]
    fn jacks_are_monic_and_triangular(l in partition(8), a in alpha()) {
        let p = jack(&l, &a).unwrap();
        prop_assert_eq!(p.coeff(&l), int(1));
        for mu in p.coeffs().keys() {
            prop_assert!(mu.dominated_by(&l), "{} not below {}", mu, l);
        }
    }

    #[test]
    fn jacks_of_equal_degree_are_orthogonal(l in partition(7), m in partition(7), a in alpha()) {
        prop_assume!(l.weight() == m.weight() && l != m);
        let (p, q) = (jack(&l, &a).unwrap(), jack(&m, &a).unwrap());
        prop_assert_eq!(scalar_product(&p, &q, &a).unwrap(), int(0));
    }

    #[test]
    fn hermite_series_terminates_early(l in partition(5), a in alpha(), n in 1usize..=3) {
        prop_assume!(l.len() <= n);
        // e^{−Δ/4} on degree D needs at most ⌊D/2⌋ + 1 nonzero terms
        let vars: Vec<usize> = (0..n).collect();
        let lap = Laplacian::Gaussian { alpha: a.clone() };
        let mut f = to_mpoly(&jack(&l, &a).unwrap(), n).unwrap();
        let mut nonzero = 0;
        while !f.is_zero() {
            nonzero += 1;
            f = lap.apply(&f, &vars).unwrap();
        }
        prop_assert!(nonzero <= l.weight() / 2 + 1);
        prop_assert_eq!(hermite_poly(&l, &a, n).unwrap().total_degree(), Some(l.weight()));
    }

    #[test]
    fn hypergeometric_truncation_is_graded(a in alpha(), n in 1usize..=3, lo in 1u32..=4) {
        let small = HyperSeries::new(&[rat(1, 2)], &[], &a, n, lo).unwrap();
        let large = HyperSeries::new(&[rat(1, 2)], &[], &a, n, lo + 2).unwrap();
        for (lambda, c) in small.terms() {
            prop_assert_eq!(large.coeff(lambda), c.clone());
        }
    }
}

#[test]
fn non_symmetric_input_is_an_error() {
    let f = &MPoly::<Rat>::var(2, 0).pow(2) + &MPoly::var(2, 1);
    assert_eq!(Laplacian::Gaussian { alpha: int(1) }.apply(&f, &[0, 1]), Err(Error::NonSymmetric));
}
