//! The generator ring behind all series in this workspace.
//!
//! Concrete q,y-expansions of the Eisenstein series, the discriminant, the
//! squared theta function and the Weierstrass function live here, together
//! with a small symbolic layer ([`GenPoly`]) of polynomials in those
//! generators. The symbolic layer exists for one reason: the formal
//! derivative with respect to G2 ([`d_dG2`]), which cannot be computed on
//! expanded series.

pub mod generators;
pub mod genpoly;

pub use generators::{eisenstein_G, generator_series, verify_ramanujan, GeneratorSymbol};
pub use genpoly::{d_dG2, expand, GenPoly};

/// Errors of the generator layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QjError {
    /// Eisenstein weights other than 2, 4, 6 are not part of the ring.
    #[error("unsupported Eisenstein weight {0}")]
    UnsupportedWeight(i64),
    /// Malformed serialized polynomial.
    #[error("invalid serialized generator polynomial: {0}")]
    BadSerialization(String),
}
