//! Exact q,y-expansions of the individual generators.

use std::collections::HashMap;
use std::sync::Mutex;

use num::BigInt;
use once_cell::sync::Lazy;

use series_core::rat::ratio;
use series_core::{eta_power, rat, QYSeries, Rat, YPoly, YRat};

use crate::QjError;

/// The fixed generator alphabet.
///
/// `TH2` is the squared theta function (so only integer powers of `y`
/// appear), `WP` the Weierstrass function, `DWP` its image under `y d/dy`,
/// and `DELTA_INV` the inverse discriminant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[allow(non_camel_case_types)]
pub enum GeneratorSymbol {
    E2,
    E4,
    E6,
    TH2,
    WP,
    DWP,
    DELTA_INV,
}

impl GeneratorSymbol {
    pub const ALL: [GeneratorSymbol; 7] = [
        GeneratorSymbol::E2,
        GeneratorSymbol::E4,
        GeneratorSymbol::E6,
        GeneratorSymbol::TH2,
        GeneratorSymbol::WP,
        GeneratorSymbol::DWP,
        GeneratorSymbol::DELTA_INV,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GeneratorSymbol::E2 => "E2",
            GeneratorSymbol::E4 => "E4",
            GeneratorSymbol::E6 => "E6",
            GeneratorSymbol::TH2 => "TH2",
            GeneratorSymbol::WP => "WP",
            GeneratorSymbol::DWP => "DWP",
            GeneratorSymbol::DELTA_INV => "DELTA_INV",
        }
    }

    pub fn parse(s: &str) -> Option<GeneratorSymbol> {
        GeneratorSymbol::ALL.into_iter().find(|g| g.name() == s)
    }
}

/// Sum of the k-th powers of the divisors of `n` (n >= 1).
fn sigma(k: u32, n: i64) -> Rat {
    let mut acc = BigInt::from(0);
    for d in 1..=n {
        if n % d == 0 {
            acc += BigInt::from(d).pow(k);
        }
    }
    Rat::from_integer(acc)
}

/// E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n for k in {2, 4, 6}.
fn eisenstein_e(k: i64, trunc: i64) -> QYSeries {
    let mult = match k {
        2 => rat(-24),
        4 => rat(240),
        6 => rat(-504),
        _ => unreachable!(),
    };
    QYSeries::from_fn(0, trunc.max(1), |d| {
        if d == 0 {
            YRat::one()
        } else {
            YRat::constant(&mult * sigma(k as u32 - 1, d))
        }
    })
}

/// 1/12 - y/(1+y)^2 + sum_d sum_{m|d} m ((-y)^m - 2 + (-y)^{-m}) q^d.
fn weierstrass(trunc: i64) -> QYSeries {
    QYSeries::from_fn(0, trunc.max(1), |d| {
        if d == 0 {
            return &YRat::constant(ratio(1, 12)) - &YRat::new(YPoly::monomial(1, rat(1)), 2);
        }
        let mut p = YPoly::zero();
        for m in 1..=d {
            if d % m != 0 {
                continue;
            }
            let sign = if m % 2 == 0 { rat(m) } else { rat(-m) };
            p.add_term(m, sign.clone());
            p.add_term(0, rat(-2 * m));
            p.add_term(-m, sign);
        }
        YRat::from_poly(p)
    })
}

/// (y + 2 + 1/y) prod_m (1 + y q^m)^2 (1 + q^m/y)^2 (1 - q^m)^{-4}.
fn theta_square(trunc: i64) -> QYSeries {
    let trunc = trunc.max(1);
    let mut th = QYSeries::monomial(
        0,
        YRat::from_poly(YPoly::from_terms([(-1, rat(1)), (0, rat(2)), (1, rat(1))])),
        trunc,
    );
    for m in 1..trunc {
        for e in [1i64, -1] {
            // (1 + y^{±1} q^m)^2 = 1 + 2 y^{±1} q^m + y^{±2} q^{2m}
            let mut factor = QYSeries::one(trunc);
            factor = &factor + &QYSeries::monomial(m, YRat::monomial(e, rat(2)), trunc);
            if 2 * m < trunc {
                factor = &factor + &QYSeries::monomial(2 * m, YRat::monomial(2 * e, rat(1)), trunc);
            }
            th = &th * &factor;
        }
    }
    &th * &eta_power(-4, trunc)
}

static GENERATOR_CACHE: Lazy<Mutex<HashMap<(GeneratorSymbol, i64), QYSeries>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Exact expansion of one generator to `O(q^trunc)`.
///
/// `DELTA_INV` has lead -1; everything else starts at q^0.
pub fn generator_series(g: GeneratorSymbol, trunc: i64) -> QYSeries {
    if let Some(s) = GENERATOR_CACHE.lock().unwrap().get(&(g, trunc)) {
        return s.clone();
    }
    let s = match g {
        GeneratorSymbol::E2 => eisenstein_e(2, trunc),
        GeneratorSymbol::E4 => eisenstein_e(4, trunc),
        GeneratorSymbol::E6 => eisenstein_e(6, trunc),
        GeneratorSymbol::TH2 => theta_square(trunc),
        GeneratorSymbol::WP => weierstrass(trunc),
        GeneratorSymbol::DWP => weierstrass(trunc).dy(),
        GeneratorSymbol::DELTA_INV => eta_power(-24, trunc + 1).shift(-1),
    };
    GENERATOR_CACHE
        .lock()
        .unwrap()
        .insert((g, trunc), s.clone());
    s
}

/// G_k = -(B_k/2k) E_k, so G2 = -1/24 + sum sigma(n) q^n etc.
#[allow(non_snake_case)]
pub fn eisenstein_G(k: i64, trunc: i64) -> Result<QYSeries, QjError> {
    let (sym, c) = match k {
        2 => (GeneratorSymbol::E2, ratio(-1, 24)),
        4 => (GeneratorSymbol::E4, ratio(1, 240)),
        6 => (GeneratorSymbol::E6, ratio(-1, 504)),
        _ => return Err(QjError::UnsupportedWeight(k)),
    };
    Ok(generator_series(sym, trunc).scale(&c))
}

/// Checks q dG2/dq = -2 G2^2 + (5/6) G4 exactly to the given truncation.
pub fn verify_ramanujan(trunc: i64) -> bool {
    let g2 = eisenstein_G(2, trunc).unwrap();
    let g4 = eisenstein_G(4, trunc).unwrap();
    let lhs = g2.dq();
    let rhs = &(&g2 * &g2).scale(&rat(-2)) + &g4.scale(&ratio(5, 6));
    let t = lhs.trunc().min(rhs.trunc());
    lhs.truncate(t) == rhs.truncate(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_leading_terms() {
        let th2 = generator_series(GeneratorSymbol::TH2, 8);
        assert_eq!(th2.coeff(0, -1).unwrap(), rat(1));
        assert_eq!(th2.coeff(0, 0).unwrap(), rat(2));
        assert_eq!(th2.coeff(0, 1).unwrap(), rat(1));

        let wp = generator_series(GeneratorSymbol::WP, 8);
        for k in [-1, 0, 1] {
            assert_eq!(wp.coeff(1, k).unwrap(), if k == 0 { rat(-2) } else { rat(-1) });
        }

        let e2 = generator_series(GeneratorSymbol::E2, 8);
        assert_eq!(e2.coeff(0, 0).unwrap(), rat(1));
        assert_eq!(e2.coeff(1, 0).unwrap(), rat(-24));
        assert_eq!(e2.coeff(2, 0).unwrap(), rat(-72));

        let di = generator_series(GeneratorSymbol::DELTA_INV, 8);
        assert_eq!(di.lead(), -1);
        assert_eq!(di.coeff(-1, 0).unwrap(), rat(1));
        assert_eq!(di.coeff(0, 0).unwrap(), rat(24));
    }

    #[test]
    fn g_series_values() {
        let g2 = eisenstein_G(2, 8).unwrap();
        for (d, c) in [(0, ratio(-1, 24)), (1, rat(1)), (2, rat(3)), (3, rat(4))] {
            assert_eq!(g2.coeff(d, 0).unwrap(), c);
        }
        assert_eq!(eisenstein_G(4, 4).unwrap().coeff(0, 0).unwrap(), ratio(1, 240));
        assert_eq!(eisenstein_G(6, 4).unwrap().coeff(0, 0).unwrap(), ratio(-1, 504));
        assert_eq!(eisenstein_G(3, 4), Err(QjError::UnsupportedWeight(3)));
    }

    #[test]
    fn ramanujan_identity() {
        assert!(verify_ramanujan(2));
        assert!(verify_ramanujan(40));
        // Same identity in the E basis: q dE2/dq = (E2^2 - E4)/12.
        let e2 = generator_series(GeneratorSymbol::E2, 40);
        let e4 = generator_series(GeneratorSymbol::E4, 40);
        let rhs = (&(&e2 * &e2) - &e4).scale(&ratio(1, 12));
        assert_eq!(e2.dq().truncate(rhs.trunc()), rhs);
    }

    #[test]
    fn eta_derivative_identity() {
        // q d/dq prod (1-q^n)^{-24} = prod (1-q^n)^{-24} (1 + 24 G2).
        let m = eta_power(-24, 30);
        let g2 = eisenstein_G(2, 30).unwrap();
        let rhs = &m * &(&QYSeries::one(30) + &g2.scale(&rat(24)));
        assert_eq!(m.dq().truncate(rhs.trunc()), rhs);
    }
}
