//! Arbitrary-precision rational numbers, the coefficient field everywhere.

use num::bigint::BigInt;
use num::{BigRational, One, Zero};

/// Exact rational number. Always stored in lowest terms with positive
/// denominator; zero is 0/1. (These invariants are maintained by the
/// underlying implementation.)
pub type Rat = BigRational;

/// The integer `n` as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// The fraction `n/d` in lowest terms.
///
/// Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Render as the lossless "num/den" string used by all machine formats.
/// Integers still carry the "/1" suffix.
pub fn rat_to_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parse a "num/den" or bare integer string.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.trim().parse().ok()?;
    let d: BigInt = d.trim().parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rat::new(n, d))
}

/// True iff `r` is an integer.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// True iff `r` is an even integer.
pub fn is_even_integer(r: &Rat) -> bool {
    is_integer(r) && (r.numer() % BigInt::from(2)).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        let r = ratio(-35, 8);
        assert_eq!(parse_rat(&rat_to_string(&r)), Some(r));
        assert_eq!(parse_rat("6"), Some(rat(6)));
        assert_eq!(parse_rat("1/0"), None);
    }
}
