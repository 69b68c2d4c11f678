//! Piecewise double-exponential quadrature and the one-dimensional check of
//! the inverse characteristic polynomial duality.

use num_complex::Complex64;
use quadrature::double_exponential;
use serde::Serialize;
use std::f64::consts::PI;

#[derive(Debug, Clone, PartialEq)]
pub struct QuadError {
    pub a: f64,
    pub b: f64,
    pub estimate: f64,
}

impl std::fmt::Display for QuadError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "quadrature did not converge on [{}, {}] (error estimate {:e})", self.a, self.b, self.estimate)
    }
}

impl std::error::Error for QuadError {}

/// ∫_a^b f over `pieces` equal subintervals, real and imaginary parts
/// separately. Each piece must reach `tol`, floored at the integrator's
/// rounding level, or the call fails.
pub fn integrate_complex<F>(f: F, a: f64, b: f64, pieces: usize, tol: f64) -> Result<Complex64, QuadError>
where
    F: Fn(f64) -> Complex64,
{
    let h = (b - a) / pieces as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..pieces {
        let (lo, hi) = (a + k as f64 * h, a + (k + 1) as f64 * h);
        let re = double_exponential::integrate(|x| f(x).re, lo, hi, tol);
        let im = double_exponential::integrate(|x| f(x).im, lo, hi, tol);
        let est = re.error_estimate.max(im.error_estimate);
        let size = re.integral.abs().max(im.integral.abs()).max(1.0);
        if !(est <= tol.max(1e-12 * (hi - lo).max(1.0) * size)) {
            return Err(QuadError { a: lo, b: hi, estimate: est });
        }
        acc += Complex64::new(re.integral, im.integral);
    }
    Ok(acc)
}

/// Sign in det(s ± X)^{-1}. The one-dimensional identity needs the
/// contour shift by f not to cross the pole, which fixes the sign from the
/// half-planes of s and f.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PoleSign {
    Plus,
    Minus,
}

impl PoleSign {
    pub fn for_point(s: Complex64, f: Complex64) -> Option<Self> {
        if s.im == 0.0 || f.im == 0.0 {
            None
        } else if (s.im > 0.0) == (f.im > 0.0) {
            Some(PoleSign::Plus)
        } else {
            Some(PoleSign::Minus)
        }
    }

    fn apply(self, a: Complex64, b: Complex64) -> Complex64 {
        match self {
            PoleSign::Plus => a + b,
            PoleSign::Minus => a - b,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InverseDualityReport {
    pub s: (f64, f64),
    pub f: (f64, f64),
    pub sign: PoleSign,
    pub lhs: (f64, f64),
    pub rhs: (f64, f64),
    pub diff: f64,
    pub passed: bool,
}

const WINDOW: f64 = 10.0;
const PIECES: usize = 40;

/// e^{−f²} ∫ (s ± x)^{-1} e^{2xf} e^{−x²} dx / √π.
fn matrix_side(s: Complex64, f: Complex64, sign: PoleSign) -> Result<Complex64, QuadError> {
    let c = f.re;
    let val = integrate_complex(
        |x| {
            let x = Complex64::new(x, 0.0);
            (2.0 * x * f - x * x - f * f).exp() / sign.apply(s, x)
        },
        c - WINDOW,
        c + WINDOW,
        PIECES,
        1e-13,
    )?;
    Ok(val / PI.sqrt())
}

/// e^{−s²} ∫ (y ± f)^{-1} e^{2ys} e^{−y²} dy / √π.
fn dual_side(s: Complex64, f: Complex64, sign: PoleSign) -> Result<Complex64, QuadError> {
    let c = s.re;
    let val = integrate_complex(
        |y| {
            let y = Complex64::new(y, 0.0);
            (2.0 * y * s - y * y - s * s).exp() / sign.apply(y, f)
        },
        c - WINDOW,
        c + WINDOW,
        PIECES,
        1e-13,
    )?;
    Ok(val / PI.sqrt())
}

/// Both sides of the n = N = 1, β = 2 identity by quadrature.
pub fn quad_check_prop2(s: Complex64, f: Complex64, tol: f64) -> Result<InverseDualityReport, QuadError> {
    let sign = PoleSign::for_point(s, f).ok_or(QuadError { a: f64::NAN, b: f64::NAN, estimate: f64::NAN })?;
    let lhs = matrix_side(s, f, sign)?;
    let rhs = dual_side(s, f, sign)?;
    let diff = (lhs - rhs).norm();
    Ok(InverseDualityReport {
        s: (s.re, s.im),
        f: (f.re, f.im),
        sign,
        lhs: (lhs.re, lhs.im),
        rhs: (rhs.re, rhs.im),
        diff,
        passed: diff <= tol,
    })
}

/// The identity at (s, f) and at (f, s).
pub fn quad_check_prop2_swapped(s: Complex64, f: Complex64, tol: f64) -> Result<[InverseDualityReport; 2], QuadError> {
    Ok([quad_check_prop2(s, f, tol)?, quad_check_prop2(f, s, tol)?])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_integral() {
        let v = integrate_complex(|x| Complex64::new((-x * x).exp(), 0.0), -10.0, 10.0, 8, 1e-14).unwrap();
        assert!((v.re - PI.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn sign_follows_half_planes() {
        let i = Complex64::i();
        assert_eq!(PoleSign::for_point(i, i), Some(PoleSign::Plus));
        assert_eq!(PoleSign::for_point(1.0 + i, 2.0 - i), Some(PoleSign::Minus));
        assert_eq!(PoleSign::for_point(Complex64::new(1.0, 0.0), i), None);
    }
}
