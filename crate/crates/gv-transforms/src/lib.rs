//! Transformation layer between Gromov-Witten brackets and Gopakumar-Vafa
//! counts: the divisor-lattice multiple-cover systems, the genus-1 and
//! genus-2 definitions, the nodal-count assembly, and the two descendent
//! reduction identities.

use std::collections::BTreeMap;

use num::Zero;
use series_core::{rat, ratio, Rat};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GvError {
    /// Descendent reductions divide by the degree D . beta.
    #[error("degree D.beta must be nonzero")]
    ZeroDegree,
    /// The value map must be keyed by exactly the divisors of m.
    #[error("values must be keyed by exactly the divisors of {0}")]
    BadDivisorSet(i64),
}

pub fn divisors(m: i64) -> Vec<i64> {
    (1..=m).filter(|d| m % d == 0).collect()
}

/// A quantity attached to a class `beta` of divisibility `m` together with
/// all its subclasses `beta/c`: one value per divisor `c` of `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorIndexed {
    m: i64,
    values: BTreeMap<i64, Rat>,
}

impl DivisorIndexed {
    pub fn new(m: i64, values: BTreeMap<i64, Rat>) -> Result<Self, GvError> {
        if m < 1 || !values.keys().eq(divisors(m).iter()) {
            return Err(GvError::BadDivisorSet(m));
        }
        Ok(DivisorIndexed { m, values })
    }

    /// Build by evaluating `f(c)` at every divisor `c` of `m`.
    pub fn from_fn(m: i64, mut f: impl FnMut(i64) -> Rat) -> Self {
        assert!(m >= 1);
        DivisorIndexed {
            m,
            values: divisors(m).into_iter().map(|c| (c, f(c))).collect(),
        }
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    /// The value attached to `beta/c`.
    pub fn get(&self, c: i64) -> &Rat {
        &self.values[&c]
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &Rat)> {
        self.values.iter().map(|(&c, v)| (c, v))
    }
}

/// Forward multiple-cover sum: out[c] = sum_{k | m/c} w(k) n[c k].
pub fn cover_forward(n: &DivisorIndexed, weight: impl Fn(i64) -> Rat) -> DivisorIndexed {
    DivisorIndexed::from_fn(n.m, |c| {
        let mut acc = Rat::zero();
        for k in divisors(n.m / c) {
            let w = weight(k);
            if !w.is_zero() {
                acc += w * n.get(c * k);
            }
        }
        acc
    })
}

/// Exact inverse of [`cover_forward`]: the system is triangular in the
/// divisibility order (weight(1) = 1 for all three systems used here).
pub fn cover_invert(gw: &DivisorIndexed, weight: impl Fn(i64) -> Rat) -> DivisorIndexed {
    let mut out: BTreeMap<i64, Rat> = BTreeMap::new();
    let mut divs = divisors(gw.m);
    divs.reverse();
    for c in divs {
        let mut acc = gw.get(c).clone();
        for k in divisors(gw.m / c) {
            if k > 1 {
                acc -= weight(k) * &out[&(c * k)];
            }
        }
        out.insert(c, acc);
    }
    DivisorIndexed { m: gw.m, values: out }
}

/// The weight `k^{n-3}` of the genus-0 system with `n` markings.
pub fn genus0_weight(n_markings: i64) -> impl Fn(i64) -> Rat {
    move |k| {
        let e = n_markings - 3;
        if e >= 0 {
            Rat::from_integer(num::BigInt::from(k).pow(e as u32))
        } else {
            ratio(1, 1) / Rat::from_integer(num::BigInt::from(k).pow((-e) as u32))
        }
    }
}

/// Sum of divisors, the genus-1 cover weight.
pub fn sigma_weight(k: i64) -> Rat {
    let mut acc = rat(0);
    for l in 1..=k {
        if k % l == 0 {
            acc += rat(l);
        }
    }
    acc
}

/// The weight `1/k^3` of the descendent genus-0 system.
pub fn psi_weight(k: i64) -> Rat {
    ratio(1, k * k * k)
}

/// Genus-0 counts from the n-marking brackets: inverts
/// `gw[beta] = sum_{k | beta} k^{n-3} n0[beta/k]`.
pub fn gv0_from_gw(gw: &DivisorIndexed, n_markings: i64) -> DivisorIndexed {
    assert!(n_markings >= 0);
    cover_invert(gw, genus0_weight(n_markings))
}

/// Genus-1 count of a primitive class: `n1 = gw1 + gw0_c2 / 24`.
pub fn gv1_primitive(gw1: &Rat, gw0_c2: &Rat) -> Rat {
    gw1 + gw0_c2 / rat(24)
}

/// Genus-2 count of a primitive class:
/// `n2 = gw2 + n1c2/24 - gw0_c2c2/1152 - nodal/24`.
pub fn gv2_primitive(gw2: &Rat, n1c2: &Rat, gw0_c2c2: &Rat, nodal: &Rat) -> Rat {
    gw2 + n1c2 / rat(24) - gw0_c2c2 / rat(1152) - nodal / rat(24)
}

/// Imprimitive genus-1 counts: inverts `gw1[beta] = sum_{k|beta} sigma(k) n1[beta/k]`.
pub fn gv1_imprimitive(gw1: &DivisorIndexed) -> DivisorIndexed {
    cover_invert(gw1, sigma_weight)
}

/// Genus-0 counts with a psi class: inverts
/// `<tau1(gamma)>[beta] = sum_{k|beta} (1/k^3) n0[beta/k](gamma; psi)`.
pub fn n0_psi(gw_tau1: &DivisorIndexed) -> DivisorIndexed {
    cover_invert(gw_tau1, psi_weight)
}

/// Divisor-axiom reduction of a one-point tau_1 bracket against `D` with
/// `d = D.beta`: `<tau1(gamma)> = (1/d^2) <tau0(gamma) tau0(D^2)> - (2/d) <tau0(gamma D)>`.
pub fn tau1_reduce(gw_g_d2: &Rat, gw_g_d: &Rat, d: &Rat) -> Result<Rat, GvError> {
    if d.is_zero() {
        return Err(GvError::ZeroDegree);
    }
    Ok(gw_g_d2 / (d * d) - rat(2) * gw_g_d / d)
}

/// Reduction of `<tau3(1)>` to pure tau_0 data against `D` with `d = D.beta`:
/// `<tau3(1)> = -(8/d^3) <tau0(D^3)> + (6/d^4) <tau0(D^2) tau0(D^2)>`.
pub fn tau3_reduce(a3: &Rat, f: &Rat, d: &Rat) -> Result<Rat, GvError> {
    if d.is_zero() {
        return Err(GvError::ZeroDegree);
    }
    let d2 = d * d;
    Ok(rat(-8) * a3 / (&d2 * d) + rat(6) * f / (&d2 * &d2))
}

/// Virtual count of rational nodal curves:
/// half the diagonal bracket minus the psi-corrections of the Euler insertion.
///
/// `tau_c2_psi` is the c4-level term of the 1/(1-psi) expansion; it is
/// accepted for completeness but vanishes in every geometry computed here.
pub fn nodal_from_parts(diag: &Rat, tau_c2_psi: &Rat, psi3: &Rat, psi1_c2: &Rat) -> Rat {
    (diag - tau_c2_psi - psi3 - psi1_c2) / rat(2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn di(m: i64, vals: &[(i64, Rat)]) -> DivisorIndexed {
        DivisorIndexed::new(m, vals.iter().cloned().collect()).unwrap()
    }

    #[test]
    fn divisor_set_is_validated() {
        assert!(DivisorIndexed::new(4, [(1, rat(1)), (2, rat(2))].into_iter().collect()).is_err());
        assert!(DivisorIndexed::new(4, [(1, rat(1)), (2, rat(0)), (4, rat(0))].into_iter().collect()).is_ok());
    }

    #[test]
    fn primitive_class_is_identity() {
        let g = di(1, &[(1, ratio(7, 3))]);
        assert_eq!(gv0_from_gw(&g, 2), g);
        assert_eq!(gv1_imprimitive(&g), g);
        assert_eq!(n0_psi(&g), g);
    }

    #[test]
    fn cotangent_space_two_point_inversion() {
        // Brackets (-1)^{d-1}/d at degrees 4, 2, 1 invert to counts 0, -1, 1.
        let gw = di(4, &[(1, ratio(-1, 4)), (2, ratio(-1, 2)), (4, rat(1))]);
        let n0 = gv0_from_gw(&gw, 2);
        assert_eq!(n0.get(4), &rat(1));
        assert_eq!(n0.get(2), &rat(-1));
        assert_eq!(n0.get(1), &rat(0));
    }

    #[test]
    fn k3_fiber_class_round_trip() {
        // All subclasses have square zero; the count is the 24 of a K3 at
        // every level, and the bracket is its 1/k^3 cover sum.
        let n0 = DivisorIndexed::from_fn(2, |_| rat(24));
        let gw = cover_forward(&n0, psi_weight);
        assert_eq!(gw.get(1), &rat(27));
        assert_eq!(n0_psi(&gw), n0);
    }

    #[test]
    fn genus_one_doubling() {
        // Top bracket 72 = n1(beta) + sigma(2) * 24 forces n1(beta) = 0.
        let gw1 = di(2, &[(1, rat(72)), (2, rat(24))]);
        let n1 = gv1_imprimitive(&gw1);
        assert_eq!(n1.get(2), &rat(24));
        assert_eq!(n1.get(1), &rat(0));

        let zero = DivisorIndexed::from_fn(3, |_| rat(0));
        assert_eq!(gv1_imprimitive(&zero), zero);
    }

    #[test]
    fn primitive_genus_definitions() {
        assert_eq!(gv1_primitive(&ratio(1, 8), &rat(-3)), rat(0));
        assert_eq!(gv1_primitive(&rat(0), &rat(0)), rat(0));
        assert_eq!(gv1_primitive(&rat(24), &rat(0)), rat(24));

        assert_eq!(
            gv2_primitive(&ratio(-11445, 128), &rat(5985), &rat(2835), &rat(3780)),
            rat(0)
        );
        assert_eq!(gv2_primitive(&ratio(1, 128), &rat(0), &rat(9), &rat(0)), rat(0));
        assert_eq!(gv2_primitive(&rat(0), &rat(0), &rat(0), &rat(0)), rat(0));
    }

    #[test]
    fn descendent_reductions() {
        let d = rat(5);
        assert_eq!(tau1_reduce(&rat(0), &(rat(9) * &d), &d).unwrap(), rat(-18));
        assert_eq!(tau1_reduce(&(&d * &d * rat(9)), &rat(0), &d).unwrap(), rat(9));
        assert_eq!(tau1_reduce(&rat(1), &rat(1), &rat(0)), Err(GvError::ZeroDegree));

        assert_eq!(tau3_reduce(&rat(0), &rat(1), &rat(1)).unwrap(), rat(6));
        assert_eq!(tau3_reduce(&rat(0), &rat(0), &rat(7)).unwrap(), rat(0));
        assert_eq!(tau3_reduce(&(&d * &d * &d), &rat(0), &d).unwrap(), rat(-8));
        assert_eq!(tau3_reduce(&rat(1), &rat(1), &rat(0)), Err(GvError::ZeroDegree));
    }

    #[test]
    fn nodal_assembly() {
        assert_eq!(
            nodal_from_parts(&rat(3), &rat(0), &rat(6), &rat(-3)),
            rat(0)
        );
        assert_eq!(nodal_from_parts(&rat(0), &rat(0), &rat(0), &rat(0)), rat(0));
    }
}
