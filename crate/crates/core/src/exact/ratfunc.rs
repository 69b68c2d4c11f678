use num_traits::Zero;

use super::mpoly::MPoly;
use super::scalar::Rat;
use crate::error::{Error, Result};

/// Quotient of two rational polynomials, kept unreduced.
///
/// Used for pointwise evaluation of rational expressions; no gcd
/// simplification is attempted.
#[derive(Clone, Debug, PartialEq)]
pub struct RatFunc {
    num: MPoly<Rat>,
    den: MPoly<Rat>,
}

impl RatFunc {
    pub fn new(num: MPoly<Rat>, den: MPoly<Rat>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Pole("zero denominator".into()));
        }
        if num.nvars() != den.nvars() {
            return Err(Error::RingMismatch("numerator and denominator variable counts".into()));
        }
        Ok(Self { num, den })
    }

    pub fn from_poly(p: MPoly<Rat>) -> Self {
        let n = p.nvars();
        Self { num: p, den: MPoly::one(n) }
    }

    /// `1 / p`.
    pub fn inverse_of(p: MPoly<Rat>) -> Result<Self> {
        let n = p.nvars();
        Self::new(MPoly::one(n), p)
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self { num: &self.num + &o.num, den: self.den.clone() };
        }
        Self { num: &(&self.num * &o.den) + &(&o.num * &self.den), den: &self.den * &o.den }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self { num: &self.num * &o.num, den: &self.den * &o.den }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        Self { num: self.num.scale(r), den: self.den.clone() }
    }

    pub fn eval(&self, point: &[Rat]) -> Result<Rat> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return Err(Error::Pole(format!("denominator vanishes at {point:?}")));
        }
        Ok(self.num.eval(point) / d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::{int, rat};

    #[test]
    fn eval_and_pole() {
        let x = MPoly::<Rat>::var(2, 0);
        let y = MPoly::<Rat>::var(2, 1);
        let f = RatFunc::inverse_of(&x - &y).unwrap();
        let g = f.add(&RatFunc::from_poly(x.clone()));
        assert_eq!(g.eval(&[int(3), int(1)]).unwrap(), rat(7, 2));
        assert!(matches!(f.eval(&[int(1), int(1)]), Err(Error::Pole(_))));
        assert!(RatFunc::new(x, MPoly::zero(2)).is_err());
    }
}
