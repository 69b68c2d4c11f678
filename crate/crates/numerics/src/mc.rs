//! Reproducible Monte Carlo estimation.
//!
//! Samples are drawn in fixed-size chunks; chunk c uses ChaCha8 stream c of
//! the master seed. Chunk statistics are merged in chunk order, so results
//! do not depend on the number of worker threads.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub const CHUNK: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MCEstimate {
    pub mean: f64,
    pub stderr: f64,
    pub samples: usize,
    pub seed: u64,
}

impl MCEstimate {
    /// |mean − exact| in units of the standard error.
    pub fn z_score(&self, exact: f64) -> f64 {
        z(self.mean - exact, self.stderr)
    }
}

fn z(diff: f64, se: f64) -> f64 {
    if se > 0.0 {
        diff.abs() / se
    } else if diff.abs() <= 1e-12 {
        0.0
    } else {
        f64::INFINITY
    }
}

/// Complex-valued estimate; `stderr` is √(se_re² + se_im²).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexEstimate {
    pub mean: Complex64,
    pub stderr: f64,
    pub samples: usize,
    pub seed: u64,
}

impl ComplexEstimate {
    pub fn from_parts(re: &MCEstimate, im: &MCEstimate) -> Self {
        Self {
            mean: Complex64::new(re.mean, im.mean),
            stderr: re.stderr.hypot(im.stderr),
            samples: re.samples,
            seed: re.seed,
        }
    }

    pub fn z_score(&self, exact: Complex64) -> f64 {
        z((self.mean - exact).norm(), self.stderr)
    }

    /// Distance to another estimate in combined standard errors.
    pub fn z_against(&self, other: &Self) -> f64 {
        z((self.mean - other.mean).norm(), self.stderr.hypot(other.stderr))
    }
}

/// Running count, mean and sum of squared deviations.
#[derive(Debug, Clone, Copy, Default)]
struct Moments {
    n: f64,
    mean: f64,
    m2: f64,
}

impl Moments {
    fn push(&mut self, x: f64) {
        self.n += 1.0;
        let d = x - self.mean;
        self.mean += d / self.n;
        self.m2 += d * (x - self.mean);
    }

    fn merge(self, o: Self) -> Self {
        if o.n == 0.0 {
            return self;
        }
        if self.n == 0.0 {
            return o;
        }
        let n = self.n + o.n;
        let d = o.mean - self.mean;
        Self { n, mean: self.mean + d * o.n / n, m2: self.m2 + o.m2 + d * d * self.n * o.n / n }
    }
}

/// Estimates `dim` statistics at once. `f` fills one sample's values.
pub fn estimate_many<F>(samples: usize, seed: u64, dim: usize, f: F) -> Vec<MCEstimate>
where
    F: Fn(&mut ChaCha8Rng, &mut [f64]) + Sync,
{
    let chunks = samples.div_ceil(CHUNK);
    let partial: Vec<Vec<Moments>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(c as u64);
            let count = CHUNK.min(samples - c * CHUNK);
            let mut acc = vec![Moments::default(); dim];
            let mut buf = vec![0.0; dim];
            for _ in 0..count {
                f(&mut rng, &mut buf);
                for (m, &x) in acc.iter_mut().zip(&buf) {
                    m.push(x);
                }
            }
            acc
        })
        .collect();
    let total = partial
        .into_iter()
        .fold(vec![Moments::default(); dim], |acc, p| acc.into_iter().zip(p).map(|(a, b)| a.merge(b)).collect());
    total
        .into_iter()
        .map(|m| {
            let var = if m.n > 1.0 { m.m2 / (m.n - 1.0) } else { 0.0 };
            MCEstimate { mean: m.mean, stderr: (var / m.n).sqrt(), samples, seed }
        })
        .collect()
}

pub fn estimate<F>(samples: usize, seed: u64, f: F) -> MCEstimate
where
    F: Fn(&mut ChaCha8Rng) -> f64 + Sync,
{
    estimate_many(samples, seed, 1, |rng, out| out[0] = f(rng))[0]
}

pub fn estimate_complex<F>(samples: usize, seed: u64, f: F) -> ComplexEstimate
where
    F: Fn(&mut ChaCha8Rng) -> Complex64 + Sync,
{
    let e = estimate_many(samples, seed, 2, |rng, out| {
        let z = f(rng);
        out[0] = z.re;
        out[1] = z.im;
    });
    ComplexEstimate::from_parts(&e[0], &e[1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn thread_count_does_not_change_the_result() {
        let f = |rng: &mut ChaCha8Rng| rng.gen::<f64>();
        let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap().install(|| estimate(10_000, 9, f));
        let many = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap().install(|| estimate(10_000, 9, f));
        assert_eq!(one, many);
        assert!(one.z_score(0.5) < 5.0);
    }
}
