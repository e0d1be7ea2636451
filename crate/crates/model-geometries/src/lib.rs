//! Closed-form invariants for three fully-computable geometries, and
//! verification of the sheaf-counting vs curve-counting identities on them.
//!
//! Each geometry exposes its Gromov-Witten brackets, its Gopakumar-Vafa
//! counts, and its sheaf-theoretic (DT4) invariants as exact formulas; the
//! `*_verify` functions recheck the conjectural identities relating them and
//! return one record per identity.

pub mod ercf;
pub mod k3xk3;
pub mod report;
pub mod tstarp2;

pub use ercf::{ercf, ercf_verify, ERCFData, ERCFRecord};
pub use k3xk3::{
    k3xk3_dt4, k3xk3_gv, k3xk3_gw, k3xk3_verify, DT4Item, K3Class, K3xK3Gv, K3xK3Insertion,
    KunnethData,
};
pub use report::VerifyRecord;
pub use tstarp2::{tstarp2, tstarp2_dt4, tstarp2_gv0, tstarp2_verify, TP2Insertion};

/// Errors of the geometry calculators.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeomError {
    /// The requested insertion is not defined at this genus.
    #[error("unsupported insertion for genus {0}")]
    UnsupportedInsertion(u8),
    /// Genus 1 and 2 counts are defined for primitive classes only.
    #[error("genus 1 and 2 counts require a primitive class (m = 1), got m = {0}")]
    ImprimitiveGenusTwo(i64),
    /// Sheaf-counting values are only known in the stated degree range.
    #[error("no computed value in degree {0}")]
    OutOfRange(i64),
}
