//! Laurent polynomials in `y` with exact rational coefficients.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num::Zero;

use crate::rat::{rat, Rat};

/// A Laurent polynomial in `y`: a finite map from y-exponent to coefficient.
/// No zero coefficients are stored; negative exponents are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct YPoly {
    terms: BTreeMap<i64, Rat>,
}

impl YPoly {
    pub fn zero() -> Self {
        YPoly::default()
    }

    pub fn one() -> Self {
        YPoly::monomial(0, rat(1))
    }

    /// The single term `c * y^k` (zero if `c` is zero).
    pub fn monomial(k: i64, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        YPoly { terms }
    }

    pub fn constant(c: Rat) -> Self {
        YPoly::monomial(0, c)
    }

    pub fn from_terms(it: impl IntoIterator<Item = (i64, Rat)>) -> Self {
        let mut p = YPoly::zero();
        for (k, c) in it {
            p.add_term(k, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: i64) -> Rat {
        self.terms.get(&k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rat)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// True iff the polynomial is a single term.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn add_term(&mut self, k: i64, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(k) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> YPoly {
        if c.is_zero() {
            return YPoly::zero();
        }
        YPoly {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    /// The operator `y d/dy`: each term `c y^k` maps to `k c y^k`.
    pub fn dy(&self) -> YPoly {
        YPoly::from_terms(self.terms.iter().map(|(&k, c)| (k, c * rat(k))))
    }

    /// Substitute `y -> 1/y`.
    pub fn mirror(&self) -> YPoly {
        YPoly {
            terms: self.terms.iter().map(|(&k, c)| (-k, c.clone())).collect(),
        }
    }

    /// Evaluate at `y = -1` (well defined for Laurent polynomials).
    pub fn eval_at_minus_one(&self) -> Rat {
        let mut acc = Rat::zero();
        for (&k, c) in &self.terms {
            if k.rem_euclid(2) == 0 {
                acc += c;
            } else {
                acc -= c;
            }
        }
        acc
    }

    /// Exact division by `(1+y)`, or `None` if `(1+y)` does not divide.
    pub fn div_one_plus_y(&self) -> Option<YPoly> {
        if self.is_zero() {
            return Some(YPoly::zero());
        }
        let m = self.min_exp().unwrap();
        let deg = self.max_exp().unwrap() - m;
        // Shift to an ordinary polynomial in y and synthetically divide by (y+1):
        // processing coefficients from the top, q_i = c_{i+1} + q_{i+1}... standard
        // Horner at root -1; the remainder is the value at y = -1.
        let mut quot: BTreeMap<i64, Rat> = BTreeMap::new();
        let mut carry = Rat::zero(); // quotient coefficient just above current exp
        for i in (0..deg).rev() {
            // quotient coefficient of y^i equals c_{i+1} - (coefficient above)... with
            // divisor (1+y): c_{i+1} = q_i + q_{i+1}  =>  q_i = c_{i+1} - q_{i+1}.
            let c = self.coeff(m + i + 1);
            let q = c - carry;
            if !q.is_zero() {
                quot.insert(m + i, q.clone());
            }
            carry = q;
        }
        // Remainder check: c_0 must equal q_0.
        if self.coeff(m) != carry {
            return None;
        }
        Some(YPoly { terms: quot })
    }
}

impl Add for &YPoly {
    type Output = YPoly;
    fn add(self, rhs: &YPoly) -> YPoly {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Sub for &YPoly {
    type Output = YPoly;
    fn sub(self, rhs: &YPoly) -> YPoly {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k, -c.clone());
        }
        out
    }
}

impl Neg for &YPoly {
    type Output = YPoly;
    fn neg(self) -> YPoly {
        YPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect(),
        }
    }
}

impl Mul for &YPoly {
    type Output = YPoly;
    fn mul(self, rhs: &YPoly) -> YPoly {
        let mut out = YPoly::zero();
        for (ka, ca) in self.terms() {
            for (kb, cb) in rhs.terms() {
                out.add_term(ka + kb, ca * cb);
            }
        }
        out
    }
}
