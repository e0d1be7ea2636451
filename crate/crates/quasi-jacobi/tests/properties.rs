use proptest::prelude::*;

use quasi_jacobi::{d_dG2, expand, GenPoly, GeneratorSymbol};
use series_core::{rat, ratio, Rat};

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-12i64..=12, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

fn arb_genpoly() -> impl Strategy<Value = GenPoly> {
    let mono = prop::collection::vec(
        (prop::sample::select(GeneratorSymbol::ALL.to_vec()), 0u32..=2),
        0..3,
    );
    prop::collection::vec((mono, arb_rat()), 0..3).prop_map(|terms| {
        let mut p = GenPoly::zero();
        for (m, c) in terms {
            p = &p + &GenPoly::monomial(m, c);
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn expand_is_a_ring_homomorphism(p in arb_genpoly(), r in arb_genpoly()) {
        let t = 10;
        let lhs = expand(&(&p * &r), t);
        let prod = &expand(&p, t) * &expand(&r, t);
        let cut = lhs.trunc().min(prod.trunc());
        prop_assert_eq!(lhs.truncate(cut), prod.truncate(cut));
        let sum = expand(&(&p + &r), t);
        prop_assert_eq!(sum, &expand(&p, t) + &expand(&r, t));
    }

    #[test]
    fn anomaly_derivative_satisfies_leibniz(p in arb_genpoly(), r in arb_genpoly()) {
        let lhs = d_dG2(&(&p * &r));
        let rhs = &(&d_dG2(&p) * &r) + &(&p * &d_dG2(&r));
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn second_series_constant_coefficient() {
    // Theta^2/Delta * (-wp + E2/12) has q^0 coefficient 4y + 30 + 4/y.
    let bracket = &(-&GenPoly::generator(GeneratorSymbol::WP))
        + &GenPoly::generator(GeneratorSymbol::E2).scale(&ratio(1, 12));
    let front = GenPoly::monomial(
        [(GeneratorSymbol::TH2, 1), (GeneratorSymbol::DELTA_INV, 1)],
        rat(1),
    );
    let g = expand(&(&front * &bracket), 8);
    assert_eq!(g.coeff(-1, 0).unwrap(), rat(1));
    assert_eq!(g.coeff(0, 0).unwrap(), rat(30));
    assert_eq!(g.coeff(0, 1).unwrap(), rat(4));
    assert_eq!(g.coeff(0, -1).unwrap(), rat(4));
    assert!(g.is_y_symmetric());
}
