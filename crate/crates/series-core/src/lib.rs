//! Exact arithmetic kernel for truncated two-variable series.
//!
//! The universal container is [`QYSeries`]: a truncated Laurent series in `q`
//! whose coefficients are Laurent polynomials in `y` divided by a power of
//! `(1+y)` ([`YRat`]). All arithmetic is exact over arbitrary-precision
//! rationals; there is no floating point anywhere.

pub mod rat;
pub mod ypoly;
pub mod yrat;
pub mod series;

pub use rat::{rat, ratio, rat_to_string, parse_rat, Rat};
pub use series::{eta_power, QYSeries};
pub use ypoly::YPoly;
pub use yrat::YRat;

/// Errors produced by the series kernel.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    /// Inversion requires the leading coefficient to be a nonzero monomial c*y^e.
    #[error("leading coefficient is not a unit monomial")]
    NotAUnit,
    /// A plain y-coefficient was requested from a coefficient with a pole at y = -1.
    #[error("coefficient at q^{d} has a pole at y = -1")]
    PoleAtMinusOne { d: i64 },
    /// A q-exponent at or beyond the truncation order was requested.
    #[error("q-exponent {d} is outside the computed range (trunc {trunc})")]
    OutOfRange { d: i64, trunc: i64 },
    /// Malformed serialized data.
    #[error("invalid serialized series: {0}")]
    BadSerialization(String),
}
