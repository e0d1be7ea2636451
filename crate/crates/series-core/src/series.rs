//! Truncated Laurent series in `q` with [`YRat`] coefficients.

use std::ops::{Add, Mul, Neg, Sub};

use num::Zero;
use serde_json::{json, Value};

use crate::rat::{parse_rat, rat, rat_to_string, Rat};
use crate::ypoly::YPoly;
use crate::yrat::YRat;
use crate::SeriesError;

/// A series `sum_{d = lead}^{trunc - 1} c_d q^d + O(q^trunc)`.
///
/// Stored densely: `coeffs[i]` is the coefficient of `q^{lead + i}`, and
/// `coeffs.len() == trunc - lead >= 1`. The representation is normalized so
/// that the first coefficient is nonzero, except for the zero series, which
/// keeps a single zero coefficient at `lead == trunc - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QYSeries {
    lead: i64,
    trunc: i64,
    coeffs: Vec<YRat>,
}

impl QYSeries {
    /// The zero series, known up to `O(q^trunc)`.
    pub fn zero(trunc: i64) -> Self {
        QYSeries {
            lead: trunc - 1,
            trunc,
            coeffs: vec![YRat::zero()],
        }
    }

    /// The constant series 1.
    pub fn one(trunc: i64) -> Self {
        QYSeries::monomial(0, YRat::one(), trunc)
    }

    /// The single term `c * q^d`.
    pub fn monomial(d: i64, c: YRat, trunc: i64) -> Self {
        assert!(d < trunc, "monomial exponent at or beyond truncation");
        if c.is_zero() {
            return QYSeries::zero(trunc);
        }
        let mut coeffs = vec![YRat::zero(); (trunc - d) as usize];
        coeffs[0] = c;
        QYSeries {
            lead: d,
            trunc,
            coeffs,
        }
    }

    /// The constant series `c`.
    pub fn constant(c: Rat, trunc: i64) -> Self {
        QYSeries::monomial(0, YRat::constant(c), trunc)
    }

    /// Build from explicit coefficients for `q^lead, q^{lead+1}, ...`.
    pub fn from_coeffs(lead: i64, coeffs: Vec<YRat>) -> Self {
        assert!(!coeffs.is_empty());
        let trunc = lead + coeffs.len() as i64;
        let mut s = QYSeries {
            lead,
            trunc,
            coeffs,
        };
        s.normalize();
        s
    }

    /// Build coefficients by evaluating `f(d)` for each `d` in `[lead, trunc)`.
    pub fn from_fn(lead: i64, trunc: i64, mut f: impl FnMut(i64) -> YRat) -> Self {
        assert!(lead < trunc);
        QYSeries::from_coeffs(lead, (lead..trunc).map(|d| f(d)).collect())
    }

    fn normalize(&mut self) {
        let lead_zeros = self
            .coeffs
            .iter()
            .take_while(|c| c.is_zero())
            .count()
            .min(self.coeffs.len() - 1);
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.lead += lead_zeros as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Exponent of the first stored coefficient (for the zero series, `trunc - 1`).
    pub fn lead(&self) -> i64 {
        self.lead
    }

    /// All exponents `>= trunc` are unknown.
    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    /// The coefficient of `q^d` as a y-rational. Exponents below `lead` are
    /// genuinely zero; exponents at or past `trunc` are an error.
    pub fn coeff_yrat(&self, d: i64) -> Result<YRat, SeriesError> {
        if d >= self.trunc {
            return Err(SeriesError::OutOfRange {
                d,
                trunc: self.trunc,
            });
        }
        if d < self.lead {
            return Ok(YRat::zero());
        }
        Ok(self.coeffs[(d - self.lead) as usize].clone())
    }

    /// The coefficient of `q^d y^k`. Errors if the q^d coefficient has a pole
    /// at `y = -1` (so no Laurent expansion in `y` exists).
    pub fn coeff(&self, d: i64, k: i64) -> Result<Rat, SeriesError> {
        let c = self.coeff_yrat(d)?;
        let p = c
            .as_poly()
            .map_err(|_| SeriesError::PoleAtMinusOne { d })?
            .clone();
        Ok(p.coeff(k))
    }

    /// Drop precision down to `O(q^new_trunc)`.
    pub fn truncate(&self, new_trunc: i64) -> QYSeries {
        assert!(new_trunc <= self.trunc, "cannot extend precision");
        if new_trunc <= self.lead {
            return QYSeries::zero(new_trunc);
        }
        QYSeries::from_coeffs(
            self.lead,
            self.coeffs[..(new_trunc - self.lead) as usize].to_vec(),
        )
    }

    pub fn scale(&self, c: &Rat) -> QYSeries {
        if c.is_zero() {
            return QYSeries::zero(self.trunc);
        }
        QYSeries {
            lead: self.lead,
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|v| v.scale(c)).collect(),
        }
    }

    /// Multiply by `q^n` (shifts both lead and trunc).
    pub fn shift(&self, n: i64) -> QYSeries {
        QYSeries {
            lead: self.lead + n,
            trunc: self.trunc + n,
            coeffs: self.coeffs.clone(),
        }
    }

    /// The operator `q d/dq`.
    pub fn dq(&self) -> QYSeries {
        QYSeries::from_coeffs(
            self.lead,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c.scale(&rat(self.lead + i as i64)))
                .collect(),
        )
    }

    /// The operator `y d/dy`, applied coefficientwise.
    pub fn dy(&self) -> QYSeries {
        QYSeries::from_coeffs(self.lead, self.coeffs.iter().map(YRat::dy).collect())
    }

    /// Substitute `y -> 1/y` coefficientwise.
    pub fn mirror_y(&self) -> QYSeries {
        QYSeries::from_coeffs(
            self.lead,
            self.coeffs
                .iter()
                .map(|c| {
                    let num = &c.numer().mirror()
                        * &YPoly::monomial(c.denom_pow() as i64, rat(1));
                    YRat::new(num, c.denom_pow())
                })
                .collect(),
        )
    }

    /// True iff every coefficient is invariant under `y -> 1/y`.
    pub fn is_y_symmetric(&self) -> bool {
        self.coeffs.iter().all(YRat::is_y_symmetric)
    }

    /// Multiplicative inverse. The leading coefficient must be a nonzero
    /// monomial `c y^e`; the relative precision is preserved.
    pub fn inv(&self) -> Result<QYSeries, SeriesError> {
        let lead_inv = self.coeffs[0].inv_unit()?;
        let n = self.coeffs.len();
        // Write self = c y^e q^lead (1 + g); invert 1 + g by the usual
        // recursion h_0 = 1, h_m = -sum_{j=1..m} g_j h_{m-j}.
        let g: Vec<YRat> = self.coeffs.iter().map(|c| c * &lead_inv).collect();
        let mut h = vec![YRat::zero(); n];
        h[0] = YRat::one();
        for m in 1..n {
            let mut acc = YRat::zero();
            for j in 1..=m {
                if g[j].is_zero() || h[m - j].is_zero() {
                    continue;
                }
                acc = &acc + &(&g[j] * &h[m - j]);
            }
            h[m] = -&acc;
        }
        let coeffs = h.iter().map(|c| c * &lead_inv).collect();
        Ok(QYSeries::from_coeffs(-self.lead, coeffs))
    }

    /// Integer power; negative exponents require an invertible leading term.
    pub fn pow(&self, e: i64) -> Result<QYSeries, SeriesError> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut acc = QYSeries::one(self.trunc - self.lead);
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Serialize to the shared JSON schema: nonzero `q^d y^k` entries only.
    /// Errors if any coefficient has a pole at `y = -1`.
    pub fn to_json(&self) -> Result<Value, SeriesError> {
        let mut entries = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            let d = self.lead + i as i64;
            let p = c
                .as_poly()
                .map_err(|_| SeriesError::PoleAtMinusOne { d })?;
            for (k, v) in p.terms() {
                entries.push(json!({ "d": d, "k": k, "v": rat_to_string(v) }));
            }
        }
        Ok(json!({ "lead": self.lead, "trunc": self.trunc, "coeffs": entries }))
    }

    /// Parse a series emitted by [`QYSeries::to_json`].
    pub fn from_json(v: &Value) -> Result<QYSeries, SeriesError> {
        let bad = |m: &str| SeriesError::BadSerialization(m.to_string());
        let lead = v
            .get("lead")
            .and_then(Value::as_i64)
            .ok_or_else(|| bad("missing lead"))?;
        let trunc = v
            .get("trunc")
            .and_then(Value::as_i64)
            .ok_or_else(|| bad("missing trunc"))?;
        if lead >= trunc {
            return Err(bad("lead must be below trunc"));
        }
        let entries = v
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing coeffs"))?;
        let mut polys = vec![YPoly::zero(); (trunc - lead) as usize];
        for e in entries {
            let d = e
                .get("d")
                .and_then(Value::as_i64)
                .ok_or_else(|| bad("entry missing d"))?;
            let k = e
                .get("k")
                .and_then(Value::as_i64)
                .ok_or_else(|| bad("entry missing k"))?;
            let val = e
                .get("v")
                .and_then(Value::as_str)
                .and_then(parse_rat)
                .ok_or_else(|| bad("entry missing rational v"))?;
            if d < lead || d >= trunc {
                return Err(bad("entry exponent outside [lead, trunc)"));
            }
            polys[(d - lead) as usize].add_term(k, val);
        }
        Ok(QYSeries::from_coeffs(
            lead,
            polys.into_iter().map(YRat::from_poly).collect(),
        ))
    }
}

impl Add for &QYSeries {
    type Output = QYSeries;
    fn add(self, rhs: &QYSeries) -> QYSeries {
        let lead = self.lead.min(rhs.lead);
        let trunc = self.trunc.min(rhs.trunc);
        if lead >= trunc {
            return QYSeries::zero(trunc);
        }
        QYSeries::from_fn(lead, trunc, |d| {
            let a = self.coeff_yrat(d).unwrap_or_else(|_| YRat::zero());
            let b = rhs.coeff_yrat(d).unwrap_or_else(|_| YRat::zero());
            &a + &b
        })
    }
}

impl Sub for &QYSeries {
    type Output = QYSeries;
    fn sub(self, rhs: &QYSeries) -> QYSeries {
        self + &-rhs
    }
}

impl Neg for &QYSeries {
    type Output = QYSeries;
    fn neg(self) -> QYSeries {
        QYSeries {
            lead: self.lead,
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &QYSeries {
    type Output = QYSeries;
    fn mul(self, rhs: &QYSeries) -> QYSeries {
        // Relative precision of a product is the minimum of the factors'.
        let na = self.coeffs.len();
        let nb = rhs.coeffs.len();
        let n = na.min(nb);
        let lead = self.lead + rhs.lead;
        let mut out = vec![YRat::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n - i) {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        QYSeries::from_coeffs(lead, out)
    }
}

/// `prod_{n >= 1} (1 - q^n)^e` up to `O(q^trunc)`. Negative powers allowed.
pub fn eta_power(e: i64, trunc: i64) -> QYSeries {
    assert!(trunc >= 1);
    // The base product has q-only coefficients, so keep it as plain rationals.
    let n = trunc as usize;
    let mut base = vec![Rat::zero(); n];
    base[0] = rat(1);
    for m in 1..n {
        for i in (m..n).rev() {
            let c = base[i - m].clone();
            if !c.is_zero() {
                base[i] -= c;
            }
        }
    }
    let series = QYSeries::from_coeffs(
        0,
        base.into_iter().map(YRat::constant).collect(),
    );
    series.pow(e).expect("unit constant term")
}
