//! Samplers for the Gaussian ensembles with weight e^{−tr X²} and the chiral
//! ensembles with eigenvalue weight Π x^γ e^{−x}.

use nalgebra::DMatrix;
use rand::Rng;
use rand_distr::{ChiSquared, Distribution, StandardNormal};

use crate::matrix::BetaHermitian;

fn normal(rng: &mut impl Rng, var: f64) -> f64 {
    let z: f64 = rng.sample(StandardNormal);
    z * var.sqrt()
}

fn chi(rng: &mut impl Rng, k: f64) -> f64 {
    ChiSquared::new(k).expect("positive degrees of freedom").sample(rng).sqrt()
}

/// Dense Hermitian β-matrix with density ∝ e^{−tr X²}.
///
/// tr X² = Σ_i (X⁰_ii)² + 2 Σ_{i<j} Σ_k (X^k_ij)², so diagonal entries have
/// variance 1/2 and each independent off-diagonal component variance 1/4.
pub fn sample_dense(beta: u8, n: usize, rng: &mut impl Rng) -> BetaHermitian {
    let mut comps = vec![DMatrix::<f64>::zeros(n, n); beta as usize];
    for i in 0..n {
        comps[0][(i, i)] = normal(rng, 0.5);
        for j in i + 1..n {
            for (k, m) in comps.iter_mut().enumerate() {
                let v = normal(rng, 0.25);
                m[(i, j)] = v;
                m[(j, i)] = if k == 0 { v } else { -v };
            }
        }
    }
    BetaHermitian::new(beta, comps).expect("sampler builds Hermitian components")
}

/// Eigenvalues of the symmetric tridiagonal model for any β > 0:
/// diagonal N(0, 1/2), off-diagonal χ_{β(N−k)}/2, k = 1..N−1.
pub fn sample_tridiagonal_gaussian(beta: f64, n: usize, rng: &mut impl Rng) -> Vec<f64> {
    let mut t = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        t[(i, i)] = normal(rng, 0.5);
    }
    for k in 1..n {
        let v = chi(rng, beta * (n - k) as f64) / 2.0;
        t[(k - 1, k)] = v;
        t[(k, k - 1)] = v;
    }
    sorted(t.symmetric_eigenvalues().iter().copied().collect())
}

/// Eigenvalues of L = B Bᵀ/2 with B lower bidiagonal, diagonal
/// χ_{2γ+2+β(N−i)} and subdiagonal χ_{β(N−i)}; density ∝ Π x^γ e^{−x} |Δ|^β.
pub fn sample_chiral(beta: f64, n: usize, gamma: f64, rng: &mut impl Rng) -> Vec<f64> {
    let mut b = DMatrix::<f64>::zeros(n, n);
    for i in 1..=n {
        b[(i - 1, i - 1)] = chi(rng, 2.0 * gamma + 2.0 + beta * (n - i) as f64);
        if i < n {
            b[(i, i - 1)] = chi(rng, beta * (n - i) as f64);
        }
    }
    let l = &b * b.transpose() / 2.0;
    sorted(l.symmetric_eigenvalues().iter().copied().collect())
}

fn sorted(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(|a, b| a.total_cmp(b));
    v
}
