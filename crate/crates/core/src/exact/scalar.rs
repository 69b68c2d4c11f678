use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact rational number. Always reduced with a positive denominator.
pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `"p/q"`, `"p"` or a decimal literal such as `"0.25"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let t = s.trim();
    if let Some((whole, frac)) = t.split_once('.') {
        if frac.chars().all(|c| c.is_ascii_digit()) && !frac.is_empty() {
            let neg = whole.starts_with('-');
            let w = if whole.is_empty() || whole == "-" { "0" } else { whole.trim_start_matches('-') };
            let digits = format!("{w}{frac}");
            let num = BigInt::from_str(&digits).map_err(|e| Error::Parse(format!("{s}: {e}")))?;
            let den = num_traits::pow(BigInt::from(10), frac.len());
            let r = Rat::new(num, den);
            return Ok(if neg { -r } else { r });
        }
    }
    Rat::from_str(t).map_err(|e| Error::Parse(format!("{s:?}: {e}")))
}

/// Formats as `"p/q"`, or `"p"` when the denominator is one.
pub fn fmt_rat(r: &Rat) -> String {
    r.to_string()
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        // Very large numerators or denominators: scale through logarithms.
        let n = r.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = r.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

pub fn rat_pow(r: &Rat, e: i32) -> Rat {
    if e >= 0 {
        num_traits::pow(r.clone(), e as usize)
    } else {
        num_traits::pow(r.recip(), (-e) as usize)
    }
}

/// Coefficient ring interface used by [`super::MPoly`]. The by-reference
/// methods are named to stay clear of `std::ops`.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One + Send + Sync + 'static {
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negate(&self) -> Self;
    fn from_rat(r: Rat) -> Self;
    fn scale(&self, r: &Rat) -> Self;
    /// Identifies the ring instance for parametrised rings. `None` means the
    /// element is compatible with every instance.
    fn ring_tag(&self) -> Option<Rat> {
        None
    }
}

impl Coeff for Rat {
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negate(&self) -> Self {
        -self
    }
    fn from_rat(r: Rat) -> Self {
        r
    }
    fn scale(&self, r: &Rat) -> Self {
        self * r
    }
}

/// Element `re + im·i` of ℚ(i).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        Self { re, im }
    }
    pub fn i() -> Self {
        Self::new(Rat::zero(), Rat::one())
    }
    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }
    pub fn to_rat(&self) -> Result<Rat> {
        if self.im.is_zero() {
            Ok(self.re.clone())
        } else {
            Err(Error::RadicalPart)
        }
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) if self.im.is_negative() => write!(f, "{}-{}i", self.re, -&self.im),
            _ => write!(f, "{}+{}i", self.re, self.im),
        }
    }
}

impl Zero for GaussRat {
    fn zero() -> Self {
        Self::new(Rat::zero(), Rat::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRat {
    fn one() -> Self {
        Self::new(Rat::one(), Rat::zero())
    }
}

impl std::ops::Add for GaussRat {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self.plus(&o)
    }
}

impl std::ops::Mul for GaussRat {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.times(&o)
    }
}

impl Coeff for GaussRat {
    fn plus(&self, o: &Self) -> Self {
        Self::new(&self.re + &o.re, &self.im + &o.im)
    }
    fn minus(&self, o: &Self) -> Self {
        Self::new(&self.re - &o.re, &self.im - &o.im)
    }
    fn times(&self, o: &Self) -> Self {
        Self::new(&self.re * &o.re - &self.im * &o.im, &self.re * &o.im + &self.im * &o.re)
    }
    fn negate(&self) -> Self {
        Self::new(-&self.re, -&self.im)
    }
    fn from_rat(r: Rat) -> Self {
        Self::new(r, Rat::zero())
    }
    fn scale(&self, r: &Rat) -> Self {
        Self::new(&self.re * r, &self.im * r)
    }
}

/// Element `a + b·t` of the quotient ring ℚ[t]/(t² − d).
///
/// Elements with `b = 0` carry no discriminant and mix freely with any ring
/// instance. Combining two elements with nonzero radical parts over different
/// discriminants is a ring mismatch: the `try_*` methods return an error and the
/// [`Coeff`] methods panic.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct QuadExt {
    a: Rat,
    b: Rat,
    d: Option<Rat>,
}

impl QuadExt {
    pub fn new(a: Rat, b: Rat, d: Rat) -> Self {
        let d = if b.is_zero() { None } else { Some(d) };
        Self { a, b, d }
    }

    pub fn rational(a: Rat) -> Self {
        Self { a, b: Rat::zero(), d: None }
    }

    /// The generator `t` with `t² = d`.
    pub fn radical(d: Rat) -> Self {
        Self::new(Rat::zero(), Rat::one(), d)
    }

    pub fn rational_part(&self) -> &Rat {
        &self.a
    }

    pub fn radical_part(&self) -> &Rat {
        &self.b
    }

    pub fn discriminant(&self) -> Option<&Rat> {
        self.d.as_ref()
    }

    pub fn to_rat(&self) -> Result<Rat> {
        if self.b.is_zero() {
            Ok(self.a.clone())
        } else {
            Err(Error::RadicalPart)
        }
    }

    fn join(&self, o: &Self) -> Result<Option<Rat>> {
        match (&self.d, &o.d) {
            (Some(x), Some(y)) if x != y => Err(Error::RingMismatch(format!("t^2 = {x} combined with t^2 = {y}"))),
            (Some(x), _) | (None, Some(x)) => Ok(Some(x.clone())),
            (None, None) => Ok(None),
        }
    }

    fn build(a: Rat, b: Rat, d: Option<Rat>) -> Self {
        match d {
            Some(d) if !b.is_zero() => Self { a, b, d: Some(d) },
            _ => Self { a, b: Rat::zero(), d: None },
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        let d = self.join(o)?;
        Ok(Self::build(&self.a + &o.a, &self.b + &o.b, d))
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        let d = self.join(o)?;
        let dd = d.clone().unwrap_or_else(Rat::zero);
        let a = &self.a * &o.a + &self.b * &o.b * dd;
        let b = &self.a * &o.b + &self.b * &o.a;
        Ok(Self::build(a, b, d))
    }

    pub fn conj(&self) -> Self {
        Self { a: self.a.clone(), b: -&self.b, d: self.d.clone() }
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.d {
            None => write!(f, "{}", self.a),
            Some(d) => write!(f, "({} + {}*t | t^2={})", self.a, self.b, d),
        }
    }
}

impl Zero for QuadExt {
    fn zero() -> Self {
        Self::rational(Rat::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadExt {
    fn one() -> Self {
        Self::rational(Rat::one())
    }
}

impl std::ops::Add for QuadExt {
    type Output = Self;
    /// Panics on a ring mismatch.
    fn add(self, o: Self) -> Self {
        self.plus(&o)
    }
}

impl std::ops::Mul for QuadExt {
    type Output = Self;
    /// Panics on a ring mismatch.
    fn mul(self, o: Self) -> Self {
        self.times(&o)
    }
}

impl Coeff for QuadExt {
    fn plus(&self, o: &Self) -> Self {
        self.try_add(o).expect("QuadExt ring mismatch")
    }
    fn minus(&self, o: &Self) -> Self {
        self.try_add(&o.negate()).expect("QuadExt ring mismatch")
    }
    fn times(&self, o: &Self) -> Self {
        self.try_mul(o).expect("QuadExt ring mismatch")
    }
    fn negate(&self) -> Self {
        Self { a: -&self.a, b: -&self.b, d: self.d.clone() }
    }
    fn from_rat(r: Rat) -> Self {
        Self::rational(r)
    }
    fn scale(&self, r: &Rat) -> Self {
        Self::build(&self.a * r, &self.b * r, self.d.clone())
    }
    fn ring_tag(&self) -> Option<Rat> {
        self.d.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["5/6", "-3/4", "7", "0"] {
            assert_eq!(fmt_rat(&parse_rat(s).unwrap()), s);
        }
        assert_eq!(parse_rat("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_rat("-1.5").unwrap(), rat(-3, 2));
        assert_eq!(parse_rat("4/6").unwrap(), rat(2, 3));
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn quad_ext_arithmetic() {
        let t = QuadExt::radical(int(-2));
        let sq = t.times(&t);
        assert_eq!(sq.to_rat().unwrap(), int(-2));
        assert_eq!(t.to_rat(), Err(Error::RadicalPart));
        let one_plus_t = QuadExt::one().plus(&t);
        // (1+t)(1-t) = 1 - t^2 = 3
        assert_eq!(one_plus_t.times(&one_plus_t.conj()).to_rat().unwrap(), int(3));
    }

    #[test]
    fn quad_ext_mismatch_is_an_error() {
        let t2 = QuadExt::radical(int(2));
        let t3 = QuadExt::radical(int(3));
        assert!(matches!(t2.try_mul(&t3), Err(Error::RingMismatch(_))));
        // rational elements mix with any instance
        assert!(t2.try_add(&QuadExt::rational(int(5))).is_ok());
    }

    #[test]
    fn gauss_rat_i_squared() {
        let i = GaussRat::i();
        assert_eq!(i.times(&i), GaussRat::from_rat(int(-1)));
        assert_eq!(GaussRat::new(int(1), int(-2)).to_string(), "1-2i");
    }
}
