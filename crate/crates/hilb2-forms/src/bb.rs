//! The square of a curve class on the Hilbert square.

use num::BigInt;
use series_core::rat::rat_to_string;
use series_core::{ratio, Rat};

use crate::Hilb2Error;

/// A possible value of `(beta, beta)`: an element of `2Z` or `2Z - 1/2`,
/// stored as twice its value so ordering and hashing are plain integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BBSquare {
    twice: i64,
}

impl BBSquare {
    /// The smallest square of an effective class, -5/2.
    pub const MIN_EFFECTIVE: BBSquare = BBSquare { twice: -5 };

    /// Build from twice the value; `2*(2Z)` is `4Z`, `2*(2Z - 1/2)` is `4Z - 1`.
    pub fn from_twice(twice: i64) -> Result<BBSquare, Hilb2Error> {
        match twice.rem_euclid(4) {
            0 | 3 => Ok(BBSquare { twice }),
            _ => Err(Hilb2Error::InvalidSquare(ratio_string(twice))),
        }
    }

    pub fn from_rat(v: &Rat) -> Result<BBSquare, Hilb2Error> {
        let twice = v * series_core::rat(2);
        if !twice.is_integer() {
            return Err(Hilb2Error::InvalidSquare(rat_to_string(v)));
        }
        let twice: i64 = twice
            .numer()
            .try_into()
            .map_err(|_| Hilb2Error::InvalidSquare(rat_to_string(v)))?;
        BBSquare::from_twice(twice)
    }

    pub fn value(&self) -> Rat {
        ratio(self.twice, 2)
    }

    pub fn twice(&self) -> i64 {
        self.twice
    }

    pub fn is_integral(&self) -> bool {
        self.twice % 2 == 0
    }

    pub fn is_effective(&self) -> bool {
        self.twice >= -5
    }

    /// The representative `(k, d)` with `k` in {0, 1} and `(beta, beta) = 2d - k^2/2`.
    pub fn primary_rep(&self) -> (i64, i64) {
        if self.twice.rem_euclid(4) == 0 {
            (0, self.twice / 4)
        } else {
            (1, (self.twice + 1) / 4)
        }
    }

    /// An independent representative with `k` in {2, 3}, used for cross-checks.
    pub fn secondary_rep(&self) -> (i64, i64) {
        let (k, d) = self.primary_rep();
        (k + 2, d + k + 1)
    }

    /// All valid squares from -5/2 up to and including `max` (when valid).
    pub fn effective_range(max: &Rat) -> Vec<BBSquare> {
        let top = (max * series_core::rat(2)).floor();
        let top: i64 = match BigInt::try_into(top.numer().clone()) {
            Ok(t) => t,
            Err(_) => return Vec::new(),
        };
        (-5..=top)
            .filter_map(|t| BBSquare::from_twice(t).ok())
            .collect()
    }
}

impl std::fmt::Display for BBSquare {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

fn ratio_string(twice: i64) -> String {
    rat_to_string(&ratio(twice, 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use series_core::rat;

    #[test]
    fn validity_and_representatives() {
        assert!(BBSquare::from_rat(&rat(1)).is_err());
        assert!(BBSquare::from_rat(&ratio(1, 2)).is_err());
        assert!(BBSquare::from_rat(&ratio(1, 3)).is_err());

        let bb = BBSquare::from_rat(&ratio(3, 2)).unwrap();
        assert_eq!(bb.primary_rep(), (1, 1));
        assert_eq!(bb.secondary_rep(), (3, 3));

        let bb = BBSquare::from_rat(&rat(-2)).unwrap();
        assert_eq!(bb.primary_rep(), (0, -1));
        assert_eq!(bb.secondary_rep(), (2, 0));

        let bb = BBSquare::from_rat(&ratio(-5, 2)).unwrap();
        assert_eq!(bb.primary_rep(), (1, -1));
        assert!(bb.is_effective());
        assert!(!BBSquare::from_twice(-8).unwrap().is_effective());
    }

    #[test]
    fn effective_range_is_interleaved() {
        let vals: Vec<String> = BBSquare::effective_range(&rat(4))
            .iter()
            .map(|b| b.to_string())
            .collect();
        assert_eq!(vals, ["-5/2", "-2", "-1/2", "0", "3/2", "2", "7/2", "4"]);
    }
}
