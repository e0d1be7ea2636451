//! Generating series attached to the Hilbert square of a K3 surface.
//!
//! The eight closed-form series (two genus-0, three genus-1, three genus-2
//! inputs) are stored symbolically as generator polynomials and expanded on
//! demand. Coefficient extraction is organized by the square of the curve
//! class, with the built-in redundancy of the elliptic transformation law
//! used as a consistency check on every query.
//!
//! The genus-1 and genus-2 closed forms labelled A, B, I and Itilde rest on
//! two conjectural inputs for the Hilbert scheme side (a multiple cover rule
//! and a holomorphic anomaly equation); everything derived from them here is
//! exact modulo those inputs.

pub mod bb;
pub mod forms;
pub mod invariants;
pub mod tables;

pub use bb::BBSquare;
pub use forms::{beta_coeff, expand_form, form, form_beta, FormName};
pub use invariants::{g0_two_point, gv1, gv1_c2, gv2, nodal_k3hilb, GV1Class};
pub use tables::{gv_record_json, table1, table2};

use series_core::SeriesError;

/// Errors for class-indexed queries.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Hilb2Error {
    /// The square of a curve class must lie in 2Z or 2Z - 1/2.
    #[error("invalid class square {0}: must lie in 2Z or 2Z - 1/2")]
    InvalidSquare(String),
    /// The requested coefficient lies beyond the series truncation.
    #[error("truncation too small: need q-order {needed}, have {have}")]
    TruncationTooSmall { needed: i64, have: i64 },
    /// Two representatives of the same class square disagree.
    #[error("well-definedness violation at square {bb}: representatives disagree")]
    WellDefinednessViolation { bb: String },
    #[error(transparent)]
    Series(#[from] SeriesError),
}
