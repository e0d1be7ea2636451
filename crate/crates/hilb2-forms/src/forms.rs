//! The eight closed-form series and coefficient extraction by class square.

use std::collections::HashMap;
use std::sync::Mutex;

use once_cell::sync::Lazy;

use quasi_jacobi::{expand, GenPoly, GeneratorSymbol};
use series_core::{rat, ratio, QYSeries, Rat};

use crate::bb::BBSquare;
use crate::Hilb2Error;

/// Names of the eight series, as they appear in tables and on the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormName {
    /// Genus 0, two divisor insertions.
    F,
    /// Genus 0 companion series.
    G,
    /// Genus 1, coefficient of the half h^2 class.
    A,
    /// Genus 1, coefficient of c2.
    B,
    /// Genus 2, no insertions.
    I,
    /// Genus 1 correction from the second cover layer.
    Aprime,
    /// Genus 1 correction from the second cover layer.
    Bprime,
    /// The genus 2 integer invariant series.
    Itilde,
}

impl FormName {
    pub const ALL: [FormName; 8] = [
        FormName::F,
        FormName::G,
        FormName::A,
        FormName::B,
        FormName::I,
        FormName::Aprime,
        FormName::Bprime,
        FormName::Itilde,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FormName::F => "F",
            FormName::G => "G",
            FormName::A => "A",
            FormName::B => "B",
            FormName::I => "I",
            FormName::Aprime => "Aprime",
            FormName::Bprime => "Bprime",
            FormName::Itilde => "Itilde",
        }
    }

    pub fn parse(s: &str) -> Option<FormName> {
        FormName::ALL.into_iter().find(|f| f.name() == s)
    }
}

fn term(c: Rat, powers: &[(GeneratorSymbol, u32)]) -> GenPoly {
    GenPoly::monomial(powers.iter().copied(), c)
}

/// The bracketed generator polynomial of a form, including the overall
/// `TH2 * DELTA_INV` prefactor.
pub fn form(name: FormName) -> GenPoly {
    use GeneratorSymbol::{DELTA_INV, DWP, E2, E4, E6, TH2, WP};
    let bracket = match name {
        FormName::F => GenPoly::one(),
        FormName::G => [
            term(rat(-1), &[(WP, 1)]),
            term(ratio(1, 12), &[(E2, 1)]),
        ]
        .iter()
        .fold(GenPoly::zero(), |a, t| &a + t),
        FormName::A => [
            term(ratio(1, 4), &[(WP, 1), (E2, 1)]),
            term(ratio(3, 32), &[(E2, 2)]),
            term(ratio(1, 96), &[(E4, 1)]),
        ]
        .iter()
        .fold(GenPoly::zero(), |a, t| &a + t),
        FormName::B => [
            term(ratio(-5, 46), &[(WP, 3)]),
            term(ratio(5, 384), &[(WP, 1), (E2, 2)]),
            term(ratio(5, 1536), &[(E2, 3)]),
            term(ratio(-1, 2944), &[(WP, 1), (E4, 1)]),
            term(ratio(5, 4608), &[(E2, 1), (E4, 1)]),
            term(ratio(5, 184), &[(DWP, 2)]),
            term(ratio(-5, 39744), &[(E6, 1)]),
        ]
        .iter()
        .fold(GenPoly::zero(), |a, t| &a + t),
        FormName::I => [
            term(ratio(5, 384), &[(WP, 1), (E2, 3)]),
            term(ratio(25, 6144), &[(E2, 4)]),
            term(ratio(5, 384), &[(WP, 1), (E2, 1), (E4, 1)]),
            term(ratio(7, 3072), &[(E2, 2), (E4, 1)]),
            term(ratio(-13, 18432), &[(E4, 2)]),
            term(ratio(-1, 96), &[(WP, 1), (E6, 1)]),
            term(ratio(1, 1152), &[(E2, 1), (E6, 1)]),
        ]
        .iter()
        .fold(GenPoly::zero(), |a, t| &a + t),
        FormName::Aprime => [
            term(ratio(-1, 4), &[(WP, 1)]),
            term(ratio(-5, 48), &[(E2, 1)]),
        ]
        .iter()
        .fold(GenPoly::zero(), |a, t| &a + t),
        FormName::Bprime => [
            term(ratio(-1, 96), &[(WP, 1), (E2, 1)]),
            term(ratio(-1, 256), &[(E2, 2)]),
            term(ratio(-1, 2304), &[(E4, 1)]),
        ]
        .iter()
        .fold(GenPoly::zero(), |a, t| &a + t),
        FormName::Itilde => [
            term(ratio(5, 384), &[(WP, 1), (E2, 3)]),
            term(ratio(25, 6144), &[(E2, 4)]),
            term(ratio(35, 384), &[(WP, 1), (E2, 2)]),
            term(ratio(-5, 512), &[(E2, 3)]),
            term(ratio(5, 384), &[(WP, 1), (E2, 1), (E4, 1)]),
            term(ratio(7, 3072), &[(E2, 2), (E4, 1)]),
            term(ratio(-71, 64), &[(WP, 1), (E2, 1)]),
            term(ratio(27, 512), &[(E2, 2)]),
            term(ratio(-47, 384), &[(WP, 1), (E4, 1)]),
            term(ratio(5, 4608), &[(E2, 1), (E4, 1)]),
            term(ratio(-13, 18432), &[(E4, 2)]),
            term(ratio(-1, 96), &[(WP, 1), (E6, 1)]),
            term(ratio(1, 1152), &[(E2, 1), (E6, 1)]),
            term(ratio(9, 8), &[(WP, 1)]),
            term(ratio(-5, 32), &[(E2, 1)]),
            term(ratio(-23, 1536), &[(E4, 1)]),
            term(ratio(-5, 1152), &[(E6, 1)]),
            term(ratio(1, 8), &[]),
        ]
        .iter()
        .fold(GenPoly::zero(), |a, t| &a + t),
    };
    let front = term(rat(1), &[(TH2, 1), (DELTA_INV, 1)]);
    &front * &bracket
}

static FORM_CACHE: Lazy<Mutex<HashMap<(FormName, i64), QYSeries>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Expand a form to `O(q^trunc)`, memoized.
pub fn expand_form(name: FormName, trunc: i64) -> QYSeries {
    if let Some(s) = FORM_CACHE.lock().unwrap().get(&(name, trunc)) {
        return s.clone();
    }
    let s = expand(&form(name), trunc);
    FORM_CACHE.lock().unwrap().insert((name, trunc), s.clone());
    s
}

/// The coefficient of the series at a class of square `bb`.
///
/// Reads the representative with `k` in {0, 1}; whenever the independent
/// representative with `k` in {2, 3} also lies inside the truncation, the two
/// must agree, and a mismatch is an error rather than a silent choice.
pub fn beta_coeff(s: &QYSeries, bb: BBSquare) -> Result<Rat, Hilb2Error> {
    let (k, d) = bb.primary_rep();
    if d >= s.trunc() {
        return Err(Hilb2Error::TruncationTooSmall {
            needed: d + 1,
            have: s.trunc(),
        });
    }
    let v = s.coeff(d, k)?;
    let (k2, d2) = bb.secondary_rep();
    if d2 < s.trunc() {
        let v2 = s.coeff(d2, k2)?;
        if v != v2 {
            return Err(Hilb2Error::WellDefinednessViolation {
                bb: bb.to_string(),
            });
        }
    }
    Ok(v)
}

/// Truncation used to serve a query at a given square: enough for both
/// representatives, rounded up so that sweeps reuse one cached expansion.
pub(crate) fn working_trunc(bb: BBSquare) -> i64 {
    let (_, d) = bb.secondary_rep();
    let needed = (d + 1).max(5);
    (needed + 24) / 25 * 25
}

/// The beta coefficient of a named form, at automatic truncation.
pub fn form_beta(name: FormName, bb: BBSquare) -> Result<Rat, Hilb2Error> {
    beta_coeff(&expand_form(name, working_trunc(bb)), bb)
}
