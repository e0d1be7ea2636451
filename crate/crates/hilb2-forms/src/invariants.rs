//! Class-indexed invariants assembled from the form coefficients.

use series_core::{rat, ratio, Rat};

use crate::bb::BBSquare;
use crate::forms::{form_beta, FormName};
use crate::Hilb2Error;

/// The genus-1 invariant of a class, written against the basis
/// `(1/2) h^2, c2`: the count of a class gamma is `a/2 <gamma, h^2> + b <gamma, c2>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GV1Class {
    pub a: Rat,
    pub b: Rat,
}

/// Genus-1 invariant: `a = A + Aprime`, `b = B + Bprime` at the class square.
pub fn gv1(bb: BBSquare) -> Result<GV1Class, Hilb2Error> {
    let a = form_beta(FormName::A, bb)? + form_beta(FormName::Aprime, bb)?;
    let b = form_beta(FormName::B, bb)? + form_beta(FormName::Bprime, bb)?;
    Ok(GV1Class { a, b })
}

/// Genus-2 integer invariant: the Itilde coefficient at the class square.
pub fn gv2(bb: BBSquare) -> Result<Rat, Hilb2Error> {
    form_beta(FormName::Itilde, bb)
}

/// Two-point genus-0 invariant of `gamma_i = u_i h^2 + v_i c2`.
///
/// Intersection numbers on the Hilbert square with s = (beta, beta):
/// `int h^4 = 3 s^2`, `int h^2 c2 = 30 s`, `int c2^2 = 828`; the
/// Beauville-Bogomolov summand contracts through `9 s^3 / 90 s^2 / 900 s`.
/// Terms pairing a divisor factor with a 4-class drop by degree.
pub fn g0_two_point(
    bb: BBSquare,
    g1: (Rat, Rat),
    g2: (Rat, Rat),
) -> Result<Rat, Hilb2Error> {
    let s = bb.value();
    let f = form_beta(FormName::F, bb)?;
    let g = form_beta(FormName::G, bb)?;
    let (u1, v1) = g1;
    let (u2, v2) = g2;
    // int gamma_i h^2 and int gamma_i c2.
    let p1 = rat(3) * &u1 * &s * &s + rat(30) * &v1 * &s;
    let p2 = rat(3) * &u2 * &s * &s + rat(30) * &v2 * &s;
    let r1 = rat(30) * &u1 * &s + rat(828) * &v1;
    let r2 = rat(30) * &u2 * &s + rat(828) * &v2;
    // Auxiliary contraction of the h x h summand.
    let q1 = rat(3) * &u1 * &s + rat(30) * &v1;
    let q2 = rat(3) * &u2 * &s + rat(30) * &v2;

    let quarter = ratio(1, 4);
    let t1 = &quarter * &f * &p1 * &p2;
    let t2 = &g * &s * &q1 * &q2;
    let mixed = ratio(-1, 30) * (&p1 * &r2 + &r1 * &p2) + &s * ratio(1, 900) * &r1 * &r2;
    let t3 = (&g + &(quarter * &s * &f)) * mixed;
    Ok(t1 + t2 + t3)
}

/// Genus-1 invariant against c2: `15 s a + 828 b`.
pub fn gv1_c2(bb: BBSquare) -> Result<Rat, Hilb2Error> {
    let c = gv1(bb)?;
    Ok(rat(15) * bb.value() * c.a + rat(828) * c.b)
}

/// The count of nodal rational curves, reconstructed from the genus-2 layer:
/// `24 (I + n1(c2)/24 - <tau0(c2) tau0(c2)>/1152 - Itilde)`.
pub fn nodal_k3hilb(bb: BBSquare) -> Result<Rat, Hilb2Error> {
    let i = form_beta(FormName::I, bb)?;
    let n1c2 = gv1_c2(bb)?;
    let c2 = (rat(0), rat(1));
    let two_pt = g0_two_point(bb, c2.clone(), c2)?;
    let itilde = form_beta(FormName::Itilde, bb)?;
    Ok(rat(24) * (i + n1c2 / rat(24) - two_pt / rat(1152) - itilde))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bb(n: i64, d: i64) -> BBSquare {
        BBSquare::from_rat(&ratio(n, d)).unwrap()
    }

    const C2: (i64, i64) = (0, 1);

    fn pair(p: (i64, i64)) -> (Rat, Rat) {
        (rat(p.0), rat(p.1))
    }

    #[test]
    fn small_table_rows() {
        let c = gv1(bb(0, 1)).unwrap();
        assert_eq!((c.a, c.b), (rat(6), rat(1)));
        let c = gv1(bb(3, 2)).unwrap();
        assert_eq!((c.a, c.b), (rat(105), ratio(35, 8)));
        let c = gv1(bb(-5, 2)).unwrap();
        assert_eq!((c.a, c.b), (rat(0), rat(0)));
        let c = gv1(bb(11, 2)).unwrap();
        assert_eq!((c.a, c.b), (rat(74970), ratio(-6405, 4)));

        assert_eq!(gv2(bb(11, 2)).unwrap(), rat(3465));
        assert_eq!(gv2(bb(6, 1)).unwrap(), rat(7920));
        assert_eq!(gv2(bb(4, 1)).unwrap(), rat(0));
    }

    #[test]
    fn two_point_values() {
        assert_eq!(
            g0_two_point(bb(3, 2), pair(C2), pair(C2)).unwrap(),
            rat(2835)
        );
        assert_eq!(
            g0_two_point(bb(3, 2), (rat(0), rat(0)), pair(C2)).unwrap(),
            rat(0)
        );
        // Every term carries a factor of s.
        assert_eq!(g0_two_point(bb(0, 1), pair(C2), pair(C2)).unwrap(), rat(0));
    }

    #[test]
    fn c2_counts_and_nodal_series() {
        assert_eq!(gv1_c2(bb(3, 2)).unwrap(), rat(5985));
        assert_eq!(gv1_c2(bb(-5, 2)).unwrap(), rat(0));
        assert_eq!(gv1_c2(bb(0, 1)).unwrap(), rat(828));

        assert_eq!(nodal_k3hilb(bb(3, 2)).unwrap(), rat(3780));
        assert_eq!(nodal_k3hilb(bb(-5, 2)).unwrap(), rat(0));
        // Sanity: a non-negative integer at square zero.
        let n0 = nodal_k3hilb(bb(0, 1)).unwrap();
        assert!(n0.is_integer() && n0 >= rat(0), "nodal count at 0 is {n0}");
    }
}
