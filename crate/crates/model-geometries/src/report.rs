//! Identity check records shared by all geometries.

use serde_json::{json, Value};
use series_core::rat::rat_to_string;
use series_core::Rat;

/// One checked identity: an exact left and right hand side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyRecord {
    pub geometry: String,
    pub identity: String,
    pub lhs: Rat,
    pub rhs: Rat,
}

impl VerifyRecord {
    pub fn new(geometry: &str, identity: &str, lhs: Rat, rhs: Rat) -> Self {
        VerifyRecord {
            geometry: geometry.to_string(),
            identity: identity.to_string(),
            lhs,
            rhs,
        }
    }

    pub fn pass(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn to_json(&self) -> Value {
        json!({
            "geometry": self.geometry,
            "identity": self.identity,
            "lhs": rat_to_string(&self.lhs),
            "rhs": rat_to_string(&self.rhs),
            "pass": self.pass(),
        })
    }
}

/// True iff every record passes.
pub fn all_pass(records: &[VerifyRecord]) -> bool {
    records.iter().all(VerifyRecord::pass)
}
