//! Integrality criteria for the curve-counting classes of the Hilbert
//! square, and exhaustive sweeps over all effective class squares.
//!
//! The genus 1 class is integral iff an explicit list of rational numbers
//! are integers (with one parity condition); the genus 2 count must itself
//! be an integer. Sweeps never abort on failure: every square in range gets
//! a report, and the interesting output of a sweep is precisely the set of
//! failing rows.

use hilb2_forms::{gv1, gv2, BBSquare, GV1Class, Hilb2Error};
use serde_json::{json, Value};
use series_core::rat::{is_even_integer, is_integer, rat_to_string};
use series_core::{rat, ratio, Rat};

/// One named condition of an integrality criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condition {
    pub name: String,
    pub value: Rat,
    pub pass: bool,
}

impl Condition {
    fn integer(name: &str, value: Rat) -> Condition {
        let pass = is_integer(&value);
        Condition {
            name: name.to_string(),
            value,
            pass,
        }
    }

    fn even_integer(name: &str, value: Rat) -> Condition {
        let pass = is_even_integer(&value);
        Condition {
            name: name.to_string(),
            value,
            pass,
        }
    }
}

/// The outcome of one integrality check at a fixed class square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralityReport {
    pub bb: BBSquare,
    pub genus: u8,
    pub conditions: Vec<Condition>,
}

impl IntegralityReport {
    pub fn pass(&self) -> bool {
        self.conditions.iter().all(|c| c.pass)
    }

    /// One JSON object per report, stable field order.
    pub fn to_json(&self) -> Value {
        json!({
            "bb": self.bb.to_string(),
            "genus": self.genus,
            "conditions": self.conditions.iter().map(|c| json!({
                "name": c.name,
                "value": rat_to_string(&c.value),
                "pass": c.pass,
            })).collect::<Vec<_>>(),
            "pass": self.pass(),
        })
    }
}

/// Integrality criterion for the genus 1 class of square `bb`, written
/// `a/2 h^2 + b c2`:
///
/// - integral square: `a` even and `3b` an integer;
/// - half-integral square (`bb = 2d - 1/2`): `a`, `24b` and `a/8 - 3b`
///   all integers.
pub fn check_gv1(bb: BBSquare) -> Result<IntegralityReport, Hilb2Error> {
    let GV1Class { a, b } = gv1(bb)?;
    let conditions = if bb.is_integral() {
        vec![
            Condition::even_integer("a even", a),
            Condition::integer("3b integer", rat(3) * b),
        ]
    } else {
        vec![
            Condition::integer("a integer", a.clone()),
            Condition::integer("24b integer", rat(24) * &b),
            Condition::integer("a/8 - 3b integer", &a / rat(8) - rat(3) * &b),
        ]
    };
    Ok(IntegralityReport {
        bb,
        genus: 1,
        conditions,
    })
}

/// Integer check for the genus 2 count of square `bb`.
pub fn check_gv2(bb: BBSquare) -> Result<IntegralityReport, Hilb2Error> {
    let n2 = gv2(bb)?;
    Ok(IntegralityReport {
        bb,
        genus: 2,
        conditions: vec![Condition::integer("n2 integer", n2)],
    })
}

/// Runs the genus `1` or `2` criterion at every valid square from `-5/2`
/// through `max_bb`. Always completes; failures show up as failing reports.
pub fn sweep(genus: u8, max_bb: &Rat) -> Result<Vec<IntegralityReport>, Hilb2Error> {
    assert!(genus == 1 || genus == 2);
    BBSquare::effective_range(max_bb)
        .into_iter()
        .map(|bb| {
            if genus == 1 {
                check_gv1(bb)
            } else {
                check_gv2(bb)
            }
        })
        .collect()
}

/// The five intersection pairings of the square of the dual of the model
/// class with divisibility data `(d, k)`: against the fiber-squared Nakajima
/// class, the point class, the double-fiber class, the mixed section-fiber
/// class, and the second Chern class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvePairings {
    pub q1f_sq: Rat,
    pub point: Rat,
    pub q2f: Rat,
    pub section_fiber: Rat,
    pub c2: Rat,
}

pub fn curve_pairings(d: i64, k: i64) -> CurvePairings {
    let point = rat(2 * d) - ratio(k * k, 4);
    CurvePairings {
        q1f_sq: rat(2),
        point: point.clone(),
        q2f: rat(-2 * k),
        section_fiber: point,
        c2: rat(30) * (rat(2 * d) - ratio(k * k, 2)),
    }
}

/// The seven coefficients of the genus 1 class in the integral basis of
/// Hodge classes of the model, for the `(d, k)` representative. All seven
/// are integers exactly when [`check_gv1`] passes.
pub fn basis_coefficients(a: &Rat, b: &Rat, d: i64, k: i64) -> Vec<Rat> {
    vec![
        ratio(k + 1, 2) * a,
        rat(-k) * a,
        ratio(d * (d + k), 2) * a,
        rat(-k * d) * a,
        rat(d) * a,
        rat(24) * b,
        ratio(k * k, 8) * a - rat(3) * b,
    ]
}
