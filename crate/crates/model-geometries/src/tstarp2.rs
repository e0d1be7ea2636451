//! The cotangent bundle of the projective plane, with curve classes the
//! multiples of the zero-section line.

use gv_transforms::{gv0_from_gw, gv1_primitive, gv2_primitive, nodal_from_parts, tau3_reduce, DivisorIndexed};
use series_core::{rat, ratio, Rat};

use crate::report::VerifyRecord;
use crate::GeomError;

/// Sign `(-1)^{d-1}` as a rational.
fn sign(d: i64) -> Rat {
    if (d - 1).rem_euclid(2) == 0 {
        rat(1)
    } else {
        rat(-1)
    }
}

/// Reduced Gromov-Witten bracket in degree `d >= 1`, genus 0, 1 or 2.
///
/// Genus 0 carries the two-point insertion `tau0(H^2) tau0(H^2)`, the higher
/// genera are unmarked.
pub fn tstarp2(genus: u8, d: i64) -> Result<Rat, GeomError> {
    assert!(d >= 1);
    match genus {
        0 => Ok(sign(d) / rat(d)),
        1 => Ok(sign(d) * rat(d) / rat(8)),
        2 => Ok(sign(d) * rat(d * d * d) / rat(128)),
        g => Err(GeomError::UnsupportedInsertion(g)),
    }
}

/// Insertions of the genus 0 sheaf-counting invariants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TP2Insertion {
    /// tau0(H^2) tau0(H^2).
    Tau0Tau0,
    /// tau1(H^2).
    Tau1H2,
    /// tau2(H).
    Tau2H,
    /// tau3(1).
    Tau3One,
}

/// Sheaf-counting invariants; known in degrees 1 through 3 (they vanish in
/// degree 3 for every insertion).
pub fn tstarp2_dt4(d: i64, ins: TP2Insertion) -> Result<Rat, GeomError> {
    if !(1..=3).contains(&d) {
        return Err(GeomError::OutOfRange(d));
    }
    let i = (d - 1) as usize;
    let table: [Rat; 3] = match ins {
        TP2Insertion::Tau0Tau0 => [rat(1), rat(-1), rat(0)],
        TP2Insertion::Tau1H2 => [ratio(-1, 2), ratio(1, 2), rat(0)],
        TP2Insertion::Tau2H => [ratio(-1, 4), ratio(-1, 4), rat(0)],
        TP2Insertion::Tau3One => [ratio(-1, 8), ratio(1, 8), rat(0)],
    };
    Ok(table[i].clone())
}

/// Genus 0 counts in all degrees up to `max`, obtained by inverting the
/// two-marking cover sums of [`tstarp2`].
pub fn tstarp2_gv0(max: i64) -> Vec<(i64, Rat)> {
    (1..=max)
        .map(|d| {
            let gw = DivisorIndexed::from_fn(d, |c| tstarp2(0, d / c).unwrap());
            (d, gv0_from_gw(&gw, 2).get(1).clone())
        })
        .collect()
}

/// Checks the counting identities on the local plane.
pub fn tstarp2_verify() -> Vec<VerifyRecord> {
    let geo = "tstarp2";
    let mut out = Vec::new();

    // (i): the two-point invariants agree with the genus 0 counts for d <= 3
    // once the line and the double cover of the line are subtracted.
    for d in 1..=3 {
        let gw = DivisorIndexed::from_fn(d, |c| tstarp2(0, d / c).unwrap());
        let n0 = gv0_from_gw(&gw, 2).get(1).clone();
        out.push(VerifyRecord::new(
            geo,
            &format!("tau0(H^2) tau0(H^2) = n0, degree {d}"),
            tstarp2_dt4(d, TP2Insertion::Tau0Tau0).unwrap(),
            n0,
        ));
    }

    // (ii), degree 1: tau1(H^2) = -1/2 <tau1(H^2)>_gw - n1.
    // The descendent reduces by the divisor axiom against H with H.beta = 1;
    // the one-point bracket <tau0(H^3)> vanishes on the 4-fold, leaving only
    // the two-point term <tau0(H^2) tau0(H^2)> = 1.
    let gw_tau1 =
        gv_transforms::tau1_reduce(&tstarp2(0, 1).unwrap(), &rat(0), &rat(1)).unwrap();
    let n1 = gv1_primitive(&ratio(1, 8), &rat(-3));
    out.push(VerifyRecord::new(
        geo,
        "tau1(H^2) = -1/2 <tau1(H^2)>_gw - n1, degree 1",
        tstarp2_dt4(1, TP2Insertion::Tau1H2).unwrap(),
        ratio(-1, 2) * gw_tau1 - n1,
    ));

    // (iii), degree 1: -tau3(1) - 1/12 tau1(c2) = n2, with c2 = -3 H^2 on the
    // zero section so tau1(c2) = -3 tau1(H^2).
    let lhs = -tstarp2_dt4(1, TP2Insertion::Tau3One).unwrap()
        - ratio(1, 12) * rat(-3) * tstarp2_dt4(1, TP2Insertion::Tau1H2).unwrap();
    let psi3 = tau3_reduce(&rat(0), &rat(1), &rat(1)).unwrap();
    let nodal = nodal_from_parts(&rat(3), &rat(0), &psi3, &rat(-3));
    let n2 = gv2_primitive(&ratio(1, 128), &rat(0), &rat(9), &nodal);
    out.push(VerifyRecord::new(
        geo,
        "-tau3(1) - 1/12 tau1(c2) = n2, degree 1",
        lhs,
        n2,
    ));
    out
}
