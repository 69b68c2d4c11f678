//! Monte Carlo checks against exact values from the moment engine, and the
//! matrix-level checks of the external-field duality.

use betadual_core::dunkl::pair_product;
use betadual_core::exact::{int, rat_to_f64, MPoly, QuadExt, Rat};
use betadual_core::moments::{jack_average, Ensemble, MomentEngine};
use betadual_core::partition::{partitions_with_len, Partition};
use betadual_core::symfunc::{jack, to_mpoly};
use betadual_core::CheckReport;
use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::{FromPrimitive, Zero};
use rand::Rng;
use serde::Serialize;

use crate::matrix::BetaHermitian;
use crate::mc::{estimate_complex, estimate_many, ComplexEstimate, MCEstimate};
use crate::sampler::{sample_chiral, sample_dense, sample_tridiagonal_gaussian};

pub const Z_LIMIT: f64 = 5.0;
/// A comparison against a nonzero reference whose standard error exceeds
/// this fraction of max(|reference|, 1) is reported as inconclusive. Zero
/// references are decided by the z-score alone.
pub const INCONCLUSIVE_REL: f64 = 0.25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Debug, Clone, Serialize)]
pub struct McComparison {
    pub label: String,
    pub estimate: (f64, f64),
    pub reference: (f64, f64),
    pub stderr: f64,
    pub z: f64,
    pub verdict: Verdict,
}

impl McComparison {
    fn new(label: String, est: Complex64, reference: Complex64, stderr: f64) -> Self {
        let diff = (est - reference).norm();
        let z = if stderr > 0.0 {
            diff / stderr
        } else if diff <= 1e-12 {
            0.0
        } else {
            f64::INFINITY
        };
        let verdict = if reference.norm() > 0.0 && stderr > INCONCLUSIVE_REL * reference.norm().max(1.0) {
            Verdict::Inconclusive
        } else if z <= Z_LIMIT {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        Self { label, estimate: (est.re, est.im), reference: (reference.re, reference.im), stderr, z, verdict }
    }

    pub fn real(label: impl Into<String>, est: &MCEstimate, exact: f64) -> Self {
        Self::new(label.into(), Complex64::new(est.mean, 0.0), Complex64::new(exact, 0.0), est.stderr)
    }

    pub fn complex(label: impl Into<String>, est: &ComplexEstimate, exact: Complex64) -> Self {
        Self::new(label.into(), est.mean, exact, est.stderr)
    }

    /// Two independent estimates; the reference is the second one.
    pub fn two_sample(label: impl Into<String>, a: &ComplexEstimate, b: &ComplexEstimate) -> Self {
        Self::new(label.into(), a.mean, b.mean, a.stderr.hypot(b.stderr))
    }
}

/// Passes when every comparison passes; the detail names the worst one.
pub fn summarize(name: impl Into<String>, comps: &[McComparison]) -> CheckReport {
    let name = name.into();
    if let Some(c) = comps.iter().find(|c| c.verdict != Verdict::Pass) {
        return CheckReport::fail(
            name,
            format!("{}: {:?}, estimate {:?} vs {:?}, z = {:.2}", c.label, c.verdict, c.estimate, c.reference, c.z),
        );
    }
    let worst = comps.iter().map(|c| c.z).fold(0.0, f64::max);
    CheckReport::pass(name, format!("{} comparisons, max z = {worst:.2}", comps.len()))
}

/// A polynomial with f64 coefficients for evaluation at sampled points.
#[derive(Debug, Clone)]
pub struct FloatPoly {
    terms: Vec<(Vec<u32>, f64)>,
}

impl FloatPoly {
    pub fn from_mpoly(p: &MPoly<Rat>) -> Self {
        Self { terms: p.terms().map(|(e, c)| (e.clone(), rat_to_f64(c))).collect() }
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        self.terms.iter().map(|(e, c)| c * e.iter().zip(x).map(|(&k, &v)| v.powi(k as i32)).product::<f64>()).sum()
    }
}

fn power_sum(n: usize, k: u32) -> MPoly<Rat> {
    (0..n).fold(MPoly::zero(n), |acc, i| &acc + &MPoly::var(n, i).pow(k))
}

fn e2(n: usize) -> MPoly<Rat> {
    let mut acc = MPoly::zero(n);
    for i in 0..n {
        for j in i + 1..n {
            acc = &acc + &(&MPoly::var(n, i) * &MPoly::var(n, j));
        }
    }
    acc
}

/// Named statistics of an eigenvalue vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Statistic {
    Power(u32),
    E2,
}

impl Statistic {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "e2" => Some(Statistic::E2),
            _ => s.strip_prefix('p')?.parse().ok().map(Statistic::Power),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Statistic::Power(k) => format!("p{k}"),
            Statistic::E2 => "e2".into(),
        }
    }

    pub fn poly(&self, n: usize) -> MPoly<Rat> {
        match self {
            Statistic::Power(k) => power_sum(n, *k),
            Statistic::E2 => e2(n),
        }
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        match self {
            Statistic::Power(k) => x.iter().map(|v| v.powi(*k as i32)).sum(),
            Statistic::E2 => {
                let s: f64 = x.iter().sum();
                let s2: f64 = x.iter().map(|v| v * v).sum();
                0.5 * (s * s - s2)
            }
        }
    }

    pub fn exact(&self, ens: &Ensemble) -> betadual_core::Result<Rat> {
        MomentEngine::new(ens.clone()).average_poly(&self.poly(ens.n))
    }
}

pub const BASIC_STATS: [Statistic; 4] = [Statistic::Power(1), Statistic::Power(2), Statistic::E2, Statistic::Power(4)];

/// Which sampler draws Gaussian eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GaussianModel {
    Dense,
    Tridiagonal,
}

/// Eigenvalue sampler for one ensemble.
#[derive(Debug, Clone)]
pub struct EigenSampler {
    pub ensemble: Ensemble,
    pub model: GaussianModel,
    beta: f64,
    gamma: f64,
}

impl EigenSampler {
    /// Dense for β ∈ {1, 2, 4} unless `model` says otherwise; other β always
    /// use the tridiagonal or bidiagonal models.
    pub fn new(ensemble: Ensemble, model: GaussianModel) -> Self {
        let beta = rat_to_f64(&ensemble.beta);
        let gamma = rat_to_f64(&ensemble.gamma);
        let dense_ok = dense_beta(&ensemble.beta).is_some();
        let model = if model == GaussianModel::Dense && !dense_ok { GaussianModel::Tridiagonal } else { model };
        Self { ensemble, model, beta, gamma }
    }

    pub fn sample(&self, rng: &mut impl Rng) -> Vec<f64> {
        use betadual_core::moments::EnsembleKind::*;
        let n = self.ensemble.n;
        match (self.ensemble.kind, self.model) {
            (Chiral, _) => sample_chiral(self.beta, n, self.gamma, rng),
            (Gaussian, GaussianModel::Tridiagonal) => sample_tridiagonal_gaussian(self.beta, n, rng),
            (Gaussian, GaussianModel::Dense) => {
                let b = dense_beta(&self.ensemble.beta).expect("checked in new");
                sample_dense(b, n, rng).eigenvalues().expect("sampled quaternion spectrum pairs")
            }
        }
    }
}

fn dense_beta(beta: &Rat) -> Option<u8> {
    [1u8, 2, 4].into_iter().find(|&b| *beta == int(b as i64))
}

/// Estimates a statistic under an ensemble.
pub fn sample_statistic(sampler: &EigenSampler, stat: Statistic, samples: usize, seed: u64) -> MCEstimate {
    estimate_many(samples, seed, 1, |rng, out| out[0] = stat.eval(&sampler.sample(rng)))[0]
}

/// p1, p2, e2 and p4 against exact moments.
pub fn moment_check(sampler: &EigenSampler, samples: usize, seed: u64) -> betadual_core::Result<Vec<McComparison>> {
    let ests = estimate_many(samples, seed, BASIC_STATS.len(), |rng, out| {
        let x = sampler.sample(rng);
        for (o, s) in out.iter_mut().zip(BASIC_STATS) {
            *o = s.eval(&x);
        }
    });
    let ens = &sampler.ensemble;
    BASIC_STATS
        .iter()
        .zip(&ests)
        .map(|(s, e)| {
            let label = format!(
                "{:?} {:?} beta={} N={} gamma={} {}",
                ens.kind,
                sampler.model,
                ens.beta,
                ens.n,
                ens.gamma,
                s.name()
            );
            Ok(McComparison::real(label, e, rat_to_f64(&s.exact(ens)?)))
        })
        .collect()
}

/// Two-sample comparison of the dense and tridiagonal models.
pub fn tridiagonal_vs_dense(beta: u8, n: usize, samples: usize, seed: u64) -> betadual_core::Result<Vec<McComparison>> {
    let ens = Ensemble::gaussian(int(beta as i64), n)?;
    let dense = EigenSampler::new(ens.clone(), GaussianModel::Dense);
    let tri = EigenSampler::new(ens, GaussianModel::Tridiagonal);
    let stats = [Statistic::Power(2), Statistic::E2, Statistic::Power(4)];
    let run = |s: &EigenSampler, seed: u64| {
        estimate_many(samples, seed, stats.len(), |rng, out| {
            let x = s.sample(rng);
            for (o, st) in out.iter_mut().zip(stats) {
                *o = st.eval(&x);
            }
        })
    };
    let (a, b) = (run(&dense, seed), run(&tri, seed ^ 0x5eed));
    let lift = |e: &MCEstimate| ComplexEstimate { mean: Complex64::new(e.mean, 0.0), stderr: e.stderr, samples, seed };
    Ok(stats
        .iter()
        .zip(a.iter().zip(&b))
        .map(|(s, (x, y))| {
            McComparison::two_sample(format!("dense vs tridiagonal beta={beta} N={n} {}", s.name()), &lift(x), &lift(y))
        })
        .collect())
}

/// ⟨P_λ⟩ for every λ with |λ| ≤ max_degree and ℓ(λ) ≤ N, against the exact
/// averages, from one shared sample.
pub fn jack_average_mc(
    ens: &Ensemble,
    max_degree: u32,
    samples: usize,
    seed: u64,
) -> betadual_core::Result<Vec<McComparison>> {
    let alpha = ens.alpha();
    let mut lambdas: Vec<Partition> = Vec::new();
    for d in 1..=max_degree {
        lambdas.extend(partitions_with_len(d, ens.n));
    }
    let polys = lambdas
        .iter()
        .map(|l| Ok(FloatPoly::from_mpoly(&to_mpoly(&jack(l, &alpha)?, ens.n)?)))
        .collect::<betadual_core::Result<Vec<_>>>()?;
    let sampler = EigenSampler::new(ens.clone(), GaussianModel::Tridiagonal);
    let ests = estimate_many(samples, seed, polys.len(), |rng, out| {
        let x = sampler.sample(rng);
        for (o, p) in out.iter_mut().zip(&polys) {
            *o = p.eval(&x);
        }
    });
    lambdas
        .iter()
        .zip(&ests)
        .map(|(l, e)| {
            let label = format!("{:?} alpha={alpha} N={} gamma={} P_{l}", ens.kind, ens.n, ens.gamma);
            Ok(McComparison::real(label, e, rat_to_f64(&jack_average(l, ens)?)))
        })
        .collect()
}

/// A fixed, non-diagonal β-Hermitian test matrix with entries of size ~0.3.
pub fn probe_matrix(beta: u8, n: usize) -> BetaHermitian {
    let mut comps = vec![DMatrix::<f64>::zeros(n, n); beta as usize];
    for i in 0..n {
        comps[0][(i, i)] = 0.3 - 0.2 * i as f64;
        for j in i + 1..n {
            for (k, m) in comps.iter_mut().enumerate() {
                let v = 0.15 + 0.05 * (k + i + j) as f64;
                m[(i, j)] = v;
                m[(j, i)] = if k == 0 { v } else { -v };
            }
        }
    }
    BetaHermitian::new(beta, comps).expect("probe matrix is Hermitian")
}

/// E[e^{tr XY}] = e^{tr Y²/4} for the density ∝ e^{−tr X²}.
pub fn gauss_transform_check(beta: u8, n: usize, samples: usize, seed: u64) -> McComparison {
    let y = probe_matrix(beta, n);
    let exact = (y.trace_product(&y) / 4.0).exp();
    let est =
        estimate_many(samples, seed, 1, |rng, out| out[0] = sample_dense(beta, n, rng).trace_product(&y).exp())[0];
    McComparison::real(format!("e^(tr XY) beta={beta} N={n}"), &est, exact)
}

/// Trace, determinant and spectrum of the quaternion Pauli form against
/// the quaternion-level quantities, on sampled matrices.
pub fn quaternion_invariants_check(n: usize, trials: usize, seed: u64) -> CheckReport {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let name = format!("quaternion invariants N={n}");
    for t in 0..trials {
        let x = sample_dense(4, n, &mut rng);
        let p = x.to_complex();
        let ev = match x.eigenvalues() {
            Ok(ev) => ev,
            Err(e) => return CheckReport::fail(name, format!("trial {t}: {e}")),
        };
        let tr_ok = (p.trace() - Complex64::new(2.0 * x.re_trace(), 0.0)).norm() <= 1e-12;
        let det = p.clone().determinant();
        let q = ev.iter().product::<f64>();
        let det_ok = (det - Complex64::new(q * q, 0.0)).norm() <= 1e-10 * det.norm().max(1.0);
        let sq: f64 = ev.iter().map(|v| v * v).sum();
        let tp_ok = (x.trace_product(&x) - sq).abs() <= 1e-10 * sq.max(1.0);
        let sum_ok = (ev.iter().sum::<f64>() - x.re_trace()).abs() <= 1e-10;
        if !(tr_ok && det_ok && tp_ok && sum_ok) {
            return CheckReport::fail(
                name,
                format!(
                    "trial {t}: trace {tr_ok}, det {det_ok} ({det} vs {}), tr X² {tp_ok}, spectrum sum {sum_ok}",
                    q * q
                ),
            );
        }
    }
    CheckReport::pass(name, format!("{trials} sampled matrices"))
}

/// How the exponential weights of the external-field duality are sampled.
///
/// `Direct` draws X from the plain ensemble and multiplies by
/// e^{−tr F²} e^{2 tr XF}. `Tilted` absorbs that weight into the density,
/// e^{−tr X² + 2 tr XF − tr F²} = e^{−tr (X − F)²}, and averages the
/// polynomial at X + F. Both are unbiased; the tilted one has no lognormal
/// factor and far lighter tails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldEstimator {
    Direct,
    Tilted,
}

fn char_product(left: &[f64], right: &[f64], c: f64, left_first: bool) -> Complex64 {
    let mut prod = Complex64::new(1.0, 0.0);
    for &a in left {
        for &b in right {
            prod *= if left_first { Complex64::new(a, c * b) } else { Complex64::new(b, c * a) };
        }
    }
    prod
}

/// e^{−Σf²} ⟨Π_j Π_k (s_j + i c x_k) e^{2 tr XF}⟩ over GβE_N, c = √(2/β).
fn field_side(beta: u8, s: &[f64], f: &[f64], est: FieldEstimator, samples: usize, seed: u64) -> ComplexEstimate {
    let c = (2.0 / beta as f64).sqrt();
    let pre = (-f.iter().map(|v| v * v).sum::<f64>()).exp();
    estimate_complex(samples, seed, |rng| {
        let x = sample_dense(beta, f.len(), rng);
        match est {
            FieldEstimator::Tilted => {
                let ev = x.add_diagonal(f).eigenvalues().expect("sampled quaternion spectrum pairs");
                char_product(s, &ev, c, true)
            }
            FieldEstimator::Direct => {
                let ev = x.eigenvalues().expect("sampled quaternion spectrum pairs");
                let field: f64 = (0..f.len()).map(|i| x.component(0)[(i, i)] * f[i]).sum();
                char_product(s, &ev, c, true) * pre * (2.0 * field).exp()
            }
        }
    })
}

/// e^{−Σs²} ⟨Π_j Π_k (y_k + i c f_j) e^{2 tr YS}⟩ over G(4/β)E_n, with the
/// same c = √(2/β).
fn source_side(beta: u8, s: &[f64], f: &[f64], est: FieldEstimator, samples: usize, seed: u64) -> ComplexEstimate {
    let c = (2.0 / beta as f64).sqrt();
    let dual = 4 / beta;
    let pre = (-s.iter().map(|v| v * v).sum::<f64>()).exp();
    estimate_complex(samples, seed, |rng| {
        let y = sample_dense(dual, s.len(), rng);
        match est {
            FieldEstimator::Tilted => {
                let ev = y.add_diagonal(s).eigenvalues().expect("sampled quaternion spectrum pairs");
                char_product(f, &ev, c, false)
            }
            FieldEstimator::Direct => {
                let ev = y.eigenvalues().expect("sampled quaternion spectrum pairs");
                let source: f64 = (0..s.len()).map(|i| y.component(0)[(i, i)] * s[i]).sum();
                char_product(f, &ev, c, false) * pre * (2.0 * source).exp()
            }
        }
    })
}

/// ⟨Π_j Π_k (s_j + i√(2/β) x_k)⟩ exactly, as a + b i√α with a, b rational.
pub fn field_free_exact(beta: u8, s: &[Rat], big_n: usize) -> betadual_core::Result<Complex64> {
    let n = s.len();
    let alpha = int(2) / int(beta as i64);
    let t = QuadExt::radical(-alpha.clone());
    let g = pair_product(n, big_n, &t);
    let mut eng = MomentEngine::new(Ensemble::gaussian(int(beta as i64), big_n)?);
    let avg = eng.average_over(&g, &(n..n + big_n).collect::<Vec<_>>())?;
    let mut point: Vec<QuadExt> = s.iter().cloned().map(QuadExt::rational).collect();
    point.extend(std::iter::repeat_n(QuadExt::rational(Rat::zero()), big_n));
    let v = avg.eval(&point);
    Ok(Complex64::new(rat_to_f64(v.rational_part()), rat_to_f64(v.radical_part()) * rat_to_f64(&alpha).sqrt()))
}

#[derive(Debug, Clone, Serialize)]
pub struct FieldDualityReport {
    pub beta: u8,
    pub estimator: FieldEstimator,
    pub s: Vec<f64>,
    pub f: Vec<f64>,
    pub comparisons: Vec<McComparison>,
}

/// Both sides of the external-field duality by dense-matrix Monte Carlo.
/// When F = 0 and s is dyadic each side is also compared with the exact
/// field-free average.
pub fn mc_check_prop1(
    beta: u8,
    s: &[f64],
    f: &[f64],
    estimator: FieldEstimator,
    samples: usize,
    seed: u64,
) -> betadual_core::Result<FieldDualityReport> {
    if !matches!(beta, 1 | 2 | 4) || s.is_empty() || f.is_empty() {
        return Err(betadual_core::Error::Usage("needs beta in {1, 2, 4} and non-empty s and f".into()));
    }
    let lhs = field_side(beta, s, f, estimator, samples, seed);
    let rhs = source_side(beta, s, f, estimator, samples, seed.wrapping_add(0x9e37_79b9));
    let tag = format!("beta={beta} n={} N={} {estimator:?}", s.len(), f.len());
    let mut comparisons = vec![McComparison::two_sample(format!("{tag} field vs source side"), &lhs, &rhs)];
    if f.iter().all(|v| *v == 0.0) {
        let exact_s: Option<Vec<Rat>> = s.iter().map(|&v| Rat::from_f64(v)).collect();
        if let Some(sr) = exact_s {
            let exact = field_free_exact(beta, &sr, f.len())?;
            comparisons.push(McComparison::complex(format!("{tag} field side vs exact"), &lhs, exact));
            comparisons.push(McComparison::complex(format!("{tag} source side vs exact"), &rhs, exact));
        }
    }
    Ok(FieldDualityReport { beta, estimator, s: s.to_vec(), f: f.to_vec(), comparisons })
}

#[cfg(test)]
mod tests {
    use super::*;
    use betadual_core::exact::rat;

    #[test]
    fn field_free_anchor_values() {
        // ⟨det(1 + iX)⟩ over GUE_2 is 1 + 1/2
        let v = field_free_exact(2, &[int(1)], 2).unwrap();
        assert!((v - Complex64::new(1.5, 0.0)).norm() < 1e-15);
        let v = field_free_exact(1, &[rat(1, 2)], 1).unwrap();
        assert!((v - Complex64::new(0.5, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn statistics_parse() {
        assert_eq!(Statistic::parse("p4"), Some(Statistic::Power(4)));
        assert_eq!(Statistic::parse("e2"), Some(Statistic::E2));
        assert_eq!(Statistic::parse("q"), None);
        assert_eq!(Statistic::E2.eval(&[1.0, 2.0, 3.0]), 11.0);
    }
}
