use betadual_core::exact::{alpha_grid, int, rat};
use betadual_core::moments::Ensemble;
use betadual_numerics::airy::{airy, ode_residual};
use betadual_numerics::checks::*;
use betadual_numerics::edge::*;
use betadual_numerics::mc::estimate;
use betadual_numerics::quad::{quad_check_prop2, quad_check_prop2_swapped, PoleSign};
use betadual_numerics::sampler::sample_tridiagonal_gaussian;
use num_complex::Complex64;

const SAMPLES: usize = 100_000;

fn all_pass(comps: &[McComparison]) {
    let r = summarize("mc", comps);
    assert!(r.passed, "{}", r.detail);
}

#[test]
fn dense_sampler_matches_exact_moments() {
    for beta in [1u8, 2, 4] {
        for n in 1..=3 {
            let s = EigenSampler::new(Ensemble::gaussian(int(beta as i64), n).unwrap(), GaussianModel::Dense);
            all_pass(&moment_check(&s, SAMPLES, 17).unwrap());
        }
    }
}

#[test]
fn tridiagonal_model_agrees_with_dense_matrices() {
    for beta in [1u8, 2, 4] {
        for n in 2..=3 {
            all_pass(&tridiagonal_vs_dense(beta, n, SAMPLES, 23).unwrap());
        }
    }
}

#[test]
fn tridiagonal_examples() {
    let gauss = |beta, n| EigenSampler::new(Ensemble::gaussian(beta, n).unwrap(), GaussianModel::Tridiagonal);
    let p2 = Statistic::Power(2);
    assert!(sample_statistic(&gauss(int(2), 2), p2, SAMPLES, 1).z_score(2.0) < 5.0);
    assert!(sample_statistic(&gauss(int(1), 3), p2, SAMPLES, 2).z_score(3.0) < 5.0);
    assert!(sample_statistic(&gauss(rat(2, 3), 2), Statistic::E2, SAMPLES, 3).z_score(-1.0 / 6.0) < 5.0);
    for a in alpha_grid() {
        let s = gauss(int(2) / &a, 3);
        all_pass(&moment_check(&s, SAMPLES, 4).unwrap());
    }
}

#[test]
fn chiral_examples() {
    let chiral = |beta, n, g| EigenSampler::new(Ensemble::chiral(beta, n, g).unwrap(), GaussianModel::Tridiagonal);
    let p1 = Statistic::Power(1);
    assert!(sample_statistic(&chiral(int(2), 1, rat(1, 2)), p1, SAMPLES, 5).z_score(1.5) < 5.0);
    assert!(sample_statistic(&chiral(int(2), 2, int(0)), p1, SAMPLES, 6).z_score(4.0) < 5.0);
    // N(γ + q) with q = 1 + β(N − 1)/2 = 3/2
    assert!(sample_statistic(&chiral(int(1), 2, rat(1, 2)), p1, SAMPLES, 7).z_score(4.0) < 5.0);
    all_pass(&moment_check(&chiral(rat(2, 3), 3, int(1)), SAMPLES, 8).unwrap());
}

#[test]
fn estimates_are_reproducible() {
    let f = |rng: &mut rand_chacha::ChaCha8Rng| sample_tridiagonal_gaussian(1.5, 3, rng)[0];
    let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let a = single.install(|| estimate(20_000, 99, f));
    let b = estimate(20_000, 99, f);
    assert_eq!(a, b);
    assert_ne!(a, estimate(20_000, 100, f));
}

#[test]
fn gauss_transform_and_quaternion_invariants() {
    for beta in [1u8, 2, 4] {
        for n in 1..=3 {
            let c = gauss_transform_check(beta, n, SAMPLES, 31);
            assert_eq!(c.verdict, Verdict::Pass, "{c:?}");
        }
    }
    for n in 1..=3 {
        let r = quaternion_invariants_check(n, 100, 5);
        assert!(r.passed, "{}", r.detail);
    }
}

#[test]
fn field_duality_small_cases() {
    // odd moment at s = 0 vanishes on both sides
    let r = mc_check_prop1(2, &[0.0], &[0.0], FieldEstimator::Tilted, SAMPLES, 1).unwrap();
    all_pass(&r.comparisons);
    assert_eq!(r.comparisons[1].reference, (0.0, 0.0));
    // ⟨det(s + iX)⟩ over GUE_2 at s = 1 is s² + 1/2
    let r = mc_check_prop1(2, &[1.0], &[0.0, 0.0], FieldEstimator::Tilted, SAMPLES, 2).unwrap();
    all_pass(&r.comparisons);
    assert_eq!(r.comparisons[1].reference, (1.5, 0.0));
    let r = mc_check_prop1(1, &[0.4, -0.3], &[0.25], FieldEstimator::Direct, SAMPLES, 3).unwrap();
    all_pass(&r.comparisons);
}

#[test]
fn inverse_duality_by_quadrature() {
    let i = Complex64::i();
    let r = quad_check_prop2(i, i, 1e-6).unwrap();
    assert!(r.passed && r.sign == PoleSign::Plus, "{r:?}");
    for rep in quad_check_prop2_swapped(1.0 + i, 2.0 - i, 1e-6).unwrap() {
        assert!(rep.passed && rep.sign == PoleSign::Minus, "{rep:?}");
    }
    assert!(quad_check_prop2(Complex64::new(1.0, 0.0), i, 1e-6).is_err());
}

#[test]
fn airy_differential_equation_and_decay() {
    assert!((airy(0.0).unwrap() - 0.3550280539).abs() < 1e-10);
    for x in -2..=2 {
        assert!(ode_residual(x as f64).unwrap() <= 1e-8);
    }
    let vals: Vec<f64> = (0..=12).map(|k| airy(2.0 + 0.5 * k as f64).unwrap()).collect();
    assert!(vals.iter().all(|v| *v > 0.0));
    assert!(vals.windows(2).all(|w| w[1] < w[0]));
}

#[test]
fn edge_average_matches_exact_values() {
    let points: Vec<_> = [-5, -2, -1, 0, 1, 3, 7].iter().map(|&k| rat(k, 4)).collect();
    for a in alpha_grid() {
        for n in 1..=12 {
            let rel = exact_comparison(n, &a, &points).unwrap();
            assert!(rel <= 1e-10, "N={n} alpha={a}: {rel:e}");
        }
    }
}

#[test]
fn edge_limit_converges_at_the_expected_rate() {
    let grid = s_grid(-3.0, 2.0, 0.5);
    let r = edge_convergence_report(2.0, &[50, 100, 200, 400], &grid).unwrap();
    assert!(r.passed, "slope {} errors {:?}", r.slope, r.max_errors);
    // one polynomial: the scaled average does not depend on β
    let r1 = edge_convergence_report(1.0, &[50, 100, 200], &grid).unwrap();
    let r4 = edge_convergence_report(4.0, &[50, 100, 200], &grid).unwrap();
    assert_eq!(r1.scaled, r4.scaled);
}
