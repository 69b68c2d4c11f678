//! The Airy function Ai on [−30, 30].
//!
//! Maclaurin series on |x| ≤ 6; beyond that, contour integrals of
//! exp(i(w³/3 + xw))/2π along paths through the saddle points.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::quad::integrate_complex;

pub const AIRY_RANGE: f64 = 30.0;
const SERIES_RANGE: f64 = 6.0;

/// Ai(0) = 3^{−2/3}/Γ(2/3) and −Ai'(0) = 3^{−1/3}/Γ(1/3).
const AI0: f64 = 0.355_028_053_887_817_2;
const AIP0: f64 = 0.258_819_403_792_806_8;

#[derive(Debug, Clone, PartialEq)]
pub enum AiryError {
    OutOfRange(f64),
    Quadrature(String),
}

impl std::fmt::Display for AiryError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AiryError::OutOfRange(x) => write!(f, "airy argument {x} outside [-{AIRY_RANGE}, {AIRY_RANGE}]"),
            AiryError::Quadrature(m) => write!(f, "airy quadrature failed: {m}"),
        }
    }
}

impl std::error::Error for AiryError {}

pub fn airy(x: f64) -> Result<f64, AiryError> {
    if !(x.abs() <= AIRY_RANGE) {
        return Err(AiryError::OutOfRange(x));
    }
    if x.abs() <= SERIES_RANGE {
        Ok(airy_series(x))
    } else if x > 0.0 {
        airy_positive(x)
    } else {
        airy_negative(x)
    }
}

/// Ai(x) = Ai(0) f(x) + Ai'(0) g(x) with f, g the even-step solutions of
/// y'' = xy; terms recur as t_{k+1} = t_k x³ / ((3k+2)(3k+3)) and
/// u_{k+1} = u_k x³ / ((3k+3)(3k+4)).
pub fn airy_series(x: f64) -> f64 {
    let x3 = x * x * x;
    let (mut f, mut g) = (1.0, x);
    let (mut t, mut u) = (1.0, x);
    for k in 0..200 {
        let k = k as f64;
        t *= x3 / ((3.0 * k + 2.0) * (3.0 * k + 3.0));
        u *= x3 / ((3.0 * k + 3.0) * (3.0 * k + 4.0));
        f += t;
        g += u;
        if t.abs() < 1e-18 * f.abs().max(1.0) && u.abs() < 1e-18 * g.abs().max(1.0) {
            break;
        }
    }
    AI0 * f - AIP0 * g
}

/// Shifting the real line to Im w = √x gives
/// Ai(x) = e^{−ζ}/π ∫_0^∞ e^{−√x u²} cos(u³/3) du, ζ = (2/3)x^{3/2}.
fn airy_positive(x: f64) -> Result<f64, AiryError> {
    let r = x.sqrt();
    let upper = (42.0 / r).sqrt();
    let v =
        integrate_complex(|u| Complex64::new((-r * u * u).exp() * (u * u * u / 3.0).cos(), 0.0), 0.0, upper, 4, 1e-14)
            .map_err(|e| AiryError::Quadrature(e.to_string()))?;
    Ok((-(2.0 / 3.0) * x * r).exp() * v.re / PI)
}

/// For x < 0 the saddles ±b, b = √|x|, lie on the real axis. The path runs
/// along [−b, b] and leaves along the rays arg w = π/4 and 3π/4.
fn airy_negative(x: f64) -> Result<f64, AiryError> {
    let b = (-x).sqrt();
    let tail = 6.0;
    let integrand = |u: f64| {
        let lift = (u.abs() - b).max(0.0);
        let w = Complex64::new(u, lift);
        let dw = if u.abs() > b { Complex64::new(1.0, u.signum()) } else { Complex64::new(1.0, 0.0) };
        (Complex64::i() * (w * w * w / 3.0 + x * w)).exp() * dw
    };
    let pieces = (8.0 * (b + tail)).ceil() as usize;
    // the kinks at ±b must fall on piece boundaries
    let inner = integrate_complex(integrand, -b, b, pieces, 1e-14);
    let left = integrate_complex(integrand, -b - tail, -b, 24, 1e-14);
    let right = integrate_complex(integrand, b, b + tail, 24, 1e-14);
    let total = inner.and_then(|i| Ok(i + left? + right?)).map_err(|e| AiryError::Quadrature(e.to_string()))?;
    Ok(total.re / (2.0 * PI))
}

/// |Ai''(x) − x Ai(x)| with Ai'' from a Richardson-extrapolated central
/// second difference.
pub fn ode_residual(x: f64) -> Result<f64, AiryError> {
    let d2 = |h: f64| -> Result<f64, AiryError> { Ok((airy(x + h)? - 2.0 * airy(x)? + airy(x - h)?) / (h * h)) };
    let h = 0.02;
    let second = (4.0 * d2(h / 2.0)? - d2(h)?) / 3.0;
    Ok((second - x * airy(x)?).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_values() {
        let table = [
            (0.0, 0.3550280538878172),
            (1.0, 0.13529241631288147),
            (-1.0, 0.5355608832923522),
            (5.5, 3.368531190859981e-05),
            (6.5, 2.795882343204915e-06),
            (10.0, 1.1047532552898654e-10),
            (-6.5, -0.2380203019971157),
            (-10.0, 0.040241238486441955),
            (-20.0, -0.17640612707798434),
            (30.0, 3.2082175915505265e-49),
            (-30.0, -0.08796818845684005),
        ];
        for (x, want) in table {
            let got = airy(x).unwrap();
            assert!((got - want).abs() <= 1e-10, "Ai({x}) = {got}, want {want}");
        }
    }

    #[test]
    fn branches_agree_where_they_overlap() {
        for x in [-6.5, -6.0, 6.0, 6.5] {
            let s = airy_series(x);
            let q = if x > 0.0 { airy_positive(x) } else { airy_negative(x) }.unwrap();
            assert!((s - q).abs() < 1e-10, "x={x}: series {s} vs contour {q}");
        }
    }

    #[test]
    fn rejects_out_of_range() {
        assert_eq!(airy(31.0), Err(AiryError::OutOfRange(31.0)));
        assert!(airy(f64::NAN).is_err());
    }
}
