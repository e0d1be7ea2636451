//! An even-rank Calabi-Yau fibration model: the curve classes are multiples
//! of the fiber class, every invariant is a classical integral over the base
//! times an explicit degree factor.

use gv_transforms::{cover_invert, psi_weight, DivisorIndexed};
use series_core::{rat, ratio, Rat};

use crate::report::VerifyRecord;

/// Classical intersection data of the fibration.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ERCFData {
    /// Euler characteristic of a smooth fiber.
    pub euler_s: Rat,
    /// int gamma . omega over the fiber direction.
    pub i_gamma_omega: Rat,
    /// int theta . omega^2.
    pub i_theta_omega2: Rat,
    /// int theta . c2.
    pub i_theta_c2: Rat,
    /// int c2 . omega.
    pub i_c2_omega: Rat,
    /// Full base integrals for the genus 0 brackets with 1, 2, 3, ... point
    /// insertions: `p_gi[i]` carries `i + 1` markings.
    pub p_gi: Vec<Rat>,
}

/// All invariants in a single fiber degree `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ERCFRecord {
    pub d: i64,
    /// Genus 0 brackets, one per marking count in `p_gi`.
    pub gw0: Vec<Rat>,
    pub gw1: Rat,
    pub gw2: Rat,
    /// The genus 0 descendent bracket `<tau1(gamma)>`.
    pub tau1: Rat,
    pub gv1: Rat,
    pub gv2: Rat,
    pub dt4_tau0: Vec<Rat>,
    pub dt4_tau1: Rat,
    pub dt4_tau2: Rat,
    pub dt4_tau3: Rat,
}

/// Exact invariants in fiber degree `d >= 1`.
///
/// The bracket with `n` markings scales as `d^{n-3}`, the descendent bracket
/// as `1/d^3`, the higher genus theories vanish, and the sheaf side is
/// supported in degree 1 only.
pub fn ercf(data: &ERCFData, d: i64) -> ERCFRecord {
    assert!(d >= 1);
    let gw0 = data
        .p_gi
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let n = (i + 1) as i64;
            gv_transforms::genus0_weight(n)(d) * p
        })
        .collect();
    let primary = d == 1;
    ERCFRecord {
        d,
        gw0,
        gw1: rat(0),
        gw2: rat(0),
        tau1: psi_weight(d) * &data.i_gamma_omega,
        gv1: rat(0),
        gv2: rat(0),
        dt4_tau0: if primary {
            data.p_gi.clone()
        } else {
            vec![rat(0); data.p_gi.len()]
        },
        dt4_tau1: if primary {
            ratio(-1, 2) * &data.i_gamma_omega
        } else {
            rat(0)
        },
        dt4_tau2: if primary {
            ratio(1, 12) * (&data.i_theta_omega2 - &data.i_theta_c2)
        } else {
            rat(0)
        },
        dt4_tau3: if primary {
            ratio(1, 24) * &data.i_c2_omega
        } else {
            rat(0)
        },
    }
}

/// Checks the descendent identity `tau1(gamma) = -1/2 n0(gamma; psi)` on the
/// fibration, in degrees 1 and 2.
pub fn ercf_verify(data: &ERCFData) -> Vec<VerifyRecord> {
    let geo = "ercf";
    let mut out = Vec::new();
    for m in [1i64, 2] {
        let gw_tau1 = DivisorIndexed::from_fn(m, |c| ercf(data, m / c).tau1.clone());
        let n0psi = cover_invert(&gw_tau1, psi_weight).get(1).clone();
        out.push(VerifyRecord::new(
            geo,
            &format!("tau1(gamma) = -1/2 n0(gamma; psi) - n1(gamma), degree {m}"),
            ercf(data, m).dt4_tau1.clone(),
            ratio(-1, 2) * n0psi,
        ));
    }
    out
}
