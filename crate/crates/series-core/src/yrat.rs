//! Laurent polynomials in `y` divided by a power of `(1+y)`.

use std::ops::{Add, Mul, Neg, Sub};

use num::Zero;

use crate::rat::{rat, Rat};
use crate::ypoly::YPoly;
use crate::SeriesError;

/// `poly / (1+y)^denom_pow`, kept normalized: either `denom_pow == 0` or
/// `(1+y)` does not divide `poly`. Equality is plain field equality (the
/// normalization makes the representation canonical).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct YRat {
    poly: YPoly,
    denom_pow: u32,
}

impl YRat {
    pub fn zero() -> Self {
        YRat::default()
    }

    pub fn one() -> Self {
        YRat::from_poly(YPoly::one())
    }

    pub fn from_poly(poly: YPoly) -> Self {
        YRat { poly, denom_pow: 0 }
    }

    pub fn constant(c: Rat) -> Self {
        YRat::from_poly(YPoly::constant(c))
    }

    pub fn monomial(k: i64, c: Rat) -> Self {
        YRat::from_poly(YPoly::monomial(k, c))
    }

    /// Build `poly / (1+y)^denom_pow` and normalize.
    pub fn new(poly: YPoly, denom_pow: u32) -> Self {
        let mut r = YRat { poly, denom_pow };
        r.normalize();
        r
    }

    fn normalize(&mut self) {
        if self.poly.is_zero() {
            self.denom_pow = 0;
            return;
        }
        while self.denom_pow > 0 {
            match self.poly.div_one_plus_y() {
                Some(q) => {
                    self.poly = q;
                    self.denom_pow -= 1;
                }
                None => break,
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn denom_pow(&self) -> u32 {
        self.denom_pow
    }

    /// The numerator as stored (meaningful together with `denom_pow`).
    pub fn numer(&self) -> &YPoly {
        &self.poly
    }

    /// View as a plain Laurent polynomial; errors if a pole at `y = -1` remains.
    pub fn as_poly(&self) -> Result<&YPoly, SeriesError> {
        if self.denom_pow == 0 {
            Ok(&self.poly)
        } else {
            Err(SeriesError::PoleAtMinusOne { d: 0 })
        }
    }

    /// True iff the leading data is a single monomial `c*y^e` with no pole.
    pub fn unit_monomial(&self) -> Option<(i64, Rat)> {
        if self.denom_pow == 0 && self.poly.is_monomial() {
            let (k, c) = self.poly.terms().next().unwrap();
            Some((k, c.clone()))
        } else {
            None
        }
    }

    /// Multiplicative inverse of a unit monomial.
    pub fn inv_unit(&self) -> Result<YRat, SeriesError> {
        let (k, c) = self.unit_monomial().ok_or(SeriesError::NotAUnit)?;
        Ok(YRat::monomial(-k, rat(1) / c))
    }

    pub fn scale(&self, c: &Rat) -> YRat {
        if c.is_zero() {
            return YRat::zero();
        }
        YRat {
            poly: self.poly.scale(c),
            denom_pow: self.denom_pow,
        }
    }

    /// Numerator lifted to the common denominator `(1+y)^pow` (pow >= denom_pow).
    fn lift(&self, pow: u32) -> YPoly {
        let mut p = self.poly.clone();
        let opy = YPoly::from_terms([(0, rat(1)), (1, rat(1))]);
        for _ in self.denom_pow..pow {
            p = &p * &opy;
        }
        p
    }

    /// The operator `y d/dy`, via the quotient rule through the denominator.
    pub fn dy(&self) -> YRat {
        // y d/dy [ p / (1+y)^m ] = [ (1+y) y p' - m y p ] / (1+y)^{m+1}
        if self.is_zero() {
            return YRat::zero();
        }
        let m = self.denom_pow;
        let opy = YPoly::from_terms([(0, rat(1)), (1, rat(1))]);
        let y = YPoly::monomial(1, rat(1));
        let num = &(&opy * &self.poly.dy()) - &(&y * &self.poly).scale(&rat(m as i64));
        YRat::new(num, m + 1)
    }

    /// True iff invariant under `y -> 1/y`.
    pub fn is_y_symmetric(&self) -> bool {
        // For p/(1+y)^m: f(1/y) = p(1/y) y^m / (1+y)^m, so compare p(1/y)*y^m to p.
        let mirrored = &self.poly.mirror() * &YPoly::monomial(self.denom_pow as i64, rat(1));
        mirrored == self.poly
    }
}

impl Add for &YRat {
    type Output = YRat;
    fn add(self, rhs: &YRat) -> YRat {
        let pow = self.denom_pow.max(rhs.denom_pow);
        YRat::new(&self.lift(pow) + &rhs.lift(pow), pow)
    }
}

impl Sub for &YRat {
    type Output = YRat;
    fn sub(self, rhs: &YRat) -> YRat {
        self + &-rhs
    }
}

impl Neg for &YRat {
    type Output = YRat;
    fn neg(self) -> YRat {
        YRat {
            poly: -&self.poly,
            denom_pow: self.denom_pow,
        }
    }
}

impl Mul for &YRat {
    type Output = YRat;
    fn mul(self, rhs: &YRat) -> YRat {
        if self.is_zero() || rhs.is_zero() {
            return YRat::zero();
        }
        YRat::new(&self.poly * &rhs.poly, self.denom_pow + rhs.denom_pow)
    }
}
