//! Differential-equation consistency checks on the closed forms.
//!
//! The genus-1 and genus-2 series are overdetermined: their formal G2
//! derivatives are fixed by lower-genus data. These tests verify those
//! relations exactly to q-order 20.

use hilb2_forms::{expand_form, form, FormName};
use quasi_jacobi::{d_dG2, expand, GenPoly, GeneratorSymbol};
use series_core::{rat, ratio, QYSeries};

const T: i64 = 20;

fn front() -> GenPoly {
    GenPoly::monomial(
        [(GeneratorSymbol::TH2, 1), (GeneratorSymbol::DELTA_INV, 1)],
        rat(1),
    )
}

fn compare(lhs: &QYSeries, rhs: &QYSeries) {
    let t = lhs.trunc().min(rhs.trunc());
    assert_eq!(lhs.truncate(t), rhs.truncate(t));
}

#[test]
fn genus_two_anomaly_equation() {
    // d/dG2 of the genus-2 series equals 3 (2 q d/dq - 1/2 (y d/dy)^2) A + 60 B.
    let lhs = expand(&d_dG2(&form(FormName::I)), T);
    let a = expand_form(FormName::A, T);
    let b = expand_form(FormName::B, T);
    let rhs = &(&a.dq().scale(&rat(2)) - &a.dy().dy().scale(&ratio(1, 2))).scale(&rat(3))
        + &b.scale(&rat(60));
    compare(&lhs, &rhs);
}

#[test]
fn genus_one_anomaly_equation() {
    // d/dG2 A = Theta^2/Delta (-6 wp + 108 G2), with G2 = -E2/24.
    let lhs = expand(&d_dG2(&form(FormName::A)), T);
    let bracket = &GenPoly::generator(GeneratorSymbol::WP).scale(&rat(-6))
        + &GenPoly::generator(GeneratorSymbol::E2).scale(&ratio(-108, 24));
    let rhs = expand(&(&front() * &bracket), T);
    compare(&lhs, &rhs);
}

#[test]
fn c2_series_from_a_and_b() {
    // The one-point c2 series both as a closed form and as
    // 30 (q d/dq - 1/4 (y d/dy)^2) A + 828 B.
    use GeneratorSymbol::{E2, E4, E6, WP};
    let bracket = [
        GenPoly::monomial([(WP, 1), (E2, 2)], ratio(35, 16)),
        GenPoly::monomial([(E2, 3)], ratio(-15, 64)),
        GenPoly::monomial([(WP, 1), (E4, 1)], ratio(-47, 16)),
        GenPoly::monomial([(E2, 1), (E4, 1)], ratio(5, 192)),
        GenPoly::monomial([(E6, 1)], ratio(-5, 48)),
    ]
    .iter()
    .fold(GenPoly::zero(), |a, t| &a + t);
    let closed = expand(&(&front() * &bracket), T);
    assert_eq!(closed.coeff(-1, 1).unwrap(), ratio(-3, 8));
    assert_eq!(closed.coeff(-1, -1).unwrap(), ratio(-3, 8));
    assert_eq!(closed.coeff(-1, 0).unwrap(), rat(0));
    assert_eq!(closed.coeff(0, 0).unwrap(), rat(828));

    let a = expand_form(FormName::A, T);
    let b = expand_form(FormName::B, T);
    let assembled = &(&a.dq() - &a.dy().dy().scale(&ratio(1, 4))).scale(&rat(30))
        + &b.scale(&rat(828));
    compare(&closed, &assembled);
}
