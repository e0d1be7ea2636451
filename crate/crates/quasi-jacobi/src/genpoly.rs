//! Polynomials in the abstract generator symbols, and their expansion.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num::Zero;
use serde_json::{json, Value};

use series_core::rat::{parse_rat, rat_to_string};
use series_core::{rat, QYSeries, Rat};

use crate::generators::{generator_series, GeneratorSymbol};
use crate::QjError;

/// A monomial in the generators: symbol -> positive exponent.
pub type Mono = BTreeMap<GeneratorSymbol, u32>;

/// A polynomial over the generator alphabet with rational coefficients.
/// No zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GenPoly {
    terms: BTreeMap<Mono, Rat>,
}

impl GenPoly {
    pub fn zero() -> Self {
        GenPoly::default()
    }

    pub fn one() -> Self {
        GenPoly::constant(rat(1))
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = GenPoly::zero();
        p.add_term(Mono::new(), c);
        p
    }

    /// The single generator `g` to the first power.
    pub fn generator(g: GeneratorSymbol) -> Self {
        GenPoly::monomial([(g, 1)], rat(1))
    }

    /// `c` times a product of generator powers; zero exponents are dropped.
    pub fn monomial(powers: impl IntoIterator<Item = (GeneratorSymbol, u32)>, c: Rat) -> Self {
        let mono: Mono = powers.into_iter().filter(|&(_, e)| e > 0).collect();
        let mut p = GenPoly::zero();
        p.add_term(mono, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, mono: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
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

    pub fn scale(&self, c: &Rat) -> GenPoly {
        if c.is_zero() {
            return GenPoly::zero();
        }
        GenPoly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Serialize as a list of `{"mono": {"E2": e, ...}, "c": "num/den"}`.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mono: serde_json::Map<String, Value> = m
                    .iter()
                    .map(|(g, &e)| (g.name().to_string(), json!(e)))
                    .collect();
                json!({ "mono": mono, "c": rat_to_string(c) })
            })
            .collect();
        json!(terms)
    }

    pub fn from_json(v: &Value) -> Result<GenPoly, QjError> {
        let bad = |m: &str| QjError::BadSerialization(m.to_string());
        let terms = v.as_array().ok_or_else(|| bad("expected a list"))?;
        let mut p = GenPoly::zero();
        for t in terms {
            let mono_obj = t
                .get("mono")
                .and_then(Value::as_object)
                .ok_or_else(|| bad("term missing mono"))?;
            let mut mono = Mono::new();
            for (name, e) in mono_obj {
                let g = GeneratorSymbol::parse(name)
                    .ok_or_else(|| bad(&format!("unknown generator {name}")))?;
                let e = e
                    .as_u64()
                    .ok_or_else(|| bad("exponent must be a non-negative integer"))?;
                if e > 0 {
                    mono.insert(g, e as u32);
                }
            }
            let c = t
                .get("c")
                .and_then(Value::as_str)
                .and_then(parse_rat)
                .ok_or_else(|| bad("term missing rational c"))?;
            p.add_term(mono, c);
        }
        Ok(p)
    }
}

impl Add for &GenPoly {
    type Output = GenPoly;
    fn add(self, rhs: &GenPoly) -> GenPoly {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &GenPoly {
    type Output = GenPoly;
    fn sub(self, rhs: &GenPoly) -> GenPoly {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &GenPoly {
    type Output = GenPoly;
    fn neg(self) -> GenPoly {
        GenPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Mul for &GenPoly {
    type Output = GenPoly;
    fn mul(self, rhs: &GenPoly) -> GenPoly {
        let mut out = GenPoly::zero();
        for (ma, ca) in self.terms() {
            for (mb, cb) in rhs.terms() {
                let mut m = ma.clone();
                for (&g, &e) in mb {
                    *m.entry(g).or_insert(0) += e;
                }
                out.add_term(m, ca * cb);
            }
        }
        out
    }
}

/// Evaluation homomorphism: substitute the concrete series for each symbol.
///
/// The result carries precision `O(q^trunc)` regardless of how many
/// `DELTA_INV` factors (lead -1) appear: each term is expanded with enough
/// slack to compensate.
pub fn expand(p: &GenPoly, trunc: i64) -> QYSeries {
    let mut acc = QYSeries::zero(trunc);
    for (mono, c) in p.terms() {
        let slack = mono
            .get(&GeneratorSymbol::DELTA_INV)
            .copied()
            .unwrap_or(0) as i64;
        let t = trunc + slack;
        let mut term = QYSeries::one(t);
        for (&g, &e) in mono {
            let base = generator_series(g, t);
            term = &term * &base.pow(e as i64).unwrap();
        }
        acc = &acc + &term.scale(c).truncate(trunc);
    }
    acc
}

/// Formal derivative with respect to G2 on the polynomial layer.
///
/// Only E2 depends on G2 (E2 = -24 G2), so this is -24 times the partial
/// derivative in E2; every other symbol is a constant for this operator.
#[allow(non_snake_case)]
pub fn d_dG2(p: &GenPoly) -> GenPoly {
    let mut out = GenPoly::zero();
    for (mono, c) in p.terms() {
        let e = match mono.get(&GeneratorSymbol::E2) {
            Some(&e) => e,
            None => continue,
        };
        let mut m = mono.clone();
        if e == 1 {
            m.remove(&GeneratorSymbol::E2);
        } else {
            m.insert(GeneratorSymbol::E2, e - 1);
        }
        out.add_term(m, c * rat(-24 * e as i64));
    }
    out
}
