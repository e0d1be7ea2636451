//! The product of two K3 surfaces, with the curve class in the first factor.

use std::collections::HashMap;
use std::sync::Mutex;

use once_cell::sync::Lazy;

use enumerative_series::{n_series, NSeries};
use gv_transforms::{
    cover_forward, divisors, gv1_imprimitive, n0_psi, nodal_from_parts, psi_weight,
    DivisorIndexed,
};
use series_core::{rat, ratio, Rat};

use crate::report::VerifyRecord;
use crate::GeomError;

/// Kunneth components of the insertions: a 4-class
/// `gamma = A1 (1 x p) + D1 x D2 + A2 (p x 1)`, a primed partner, and the
/// pairings of a divisor/curve class insertion against the curve class.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct KunnethData {
    pub a1: Rat,
    pub a2: Rat,
    pub a1p: Rat,
    pub a2p: Rat,
    /// D1 . beta and D1' . beta.
    pub d1b: Rat,
    pub d1pb: Rat,
    /// int_T D2 D2'.
    pub d2d2p: Rat,
    /// theta_1 . beta for the divisor/curve insertion.
    pub th1b: Rat,
    /// int_T D2 theta_2.
    pub d2th2: Rat,
}

/// A curve class in the first factor: `m` times a primitive class of square
/// `2l`, so that `(beta/c)^2/2 = (m/c)^2 l` for every divisor `c` of `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct K3Class {
    pub l: i64,
    pub m: i64,
}

impl K3Class {
    pub fn new(l: i64, m: i64) -> Self {
        assert!(l >= -1 && m >= 1);
        K3Class { l, m }
    }

    /// `(beta/c)^2 / 2` for a divisor `c` of `m`.
    pub fn square_half(&self, c: i64) -> i64 {
        let f = self.m / c;
        f * f * self.l
    }
}

static NVAL_CACHE: Lazy<Mutex<HashMap<(NSeries, i64), Rat>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Table value `N(l)`, with `N(l) = 0` below the minimal square.
pub(crate) fn nval(which: NSeries, l: i64) -> Rat {
    if l < -1 {
        return rat(0);
    }
    if let Some(v) = NVAL_CACHE.lock().unwrap().get(&(which, l)) {
        return v.clone();
    }
    let t = n_series(which, l);
    let mut cache = NVAL_CACHE.lock().unwrap();
    for (i, v) in t.iter() {
        cache.insert((which, i), v.clone());
    }
    t.get(l).unwrap().clone()
}

/// Insertion descriptors for the Gromov-Witten side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum K3xK3Insertion {
    /// Two 4-class insertions `tau0(gamma) tau0(gamma')`, genus 0.
    TwoPoint,
    /// One curve class insertion `tau0(alpha)`, genus 0.
    CurveClass,
    /// One descendent insertion `tau1(gamma)`, genus 0.
    Tau1Gamma,
    /// One 4-class insertion `tau0(gamma)`, genus 1.
    Gamma,
}

/// Genus 0 or 1 Gromov-Witten brackets, any effective class.
pub fn k3xk3_gw(
    genus: u8,
    cls: K3Class,
    data: &KunnethData,
    ins: K3xK3Insertion,
) -> Result<Rat, GeomError> {
    match (genus, ins) {
        (0, K3xK3Insertion::TwoPoint) => {
            Ok(&data.d1b * &data.d1pb * &data.d2d2p * cover_sum_n0(cls))
        }
        (0, K3xK3Insertion::CurveClass) => Ok(&data.th1b * cover_sum_n0(cls)),
        (0, K3xK3Insertion::Tau1Gamma) => Ok(rat(-2) * &data.a1 * cover_sum_n0(cls)),
        (1, K3xK3Insertion::Gamma) => {
            // A2 e(T) sum_{k|m} k N1((beta/k)^2/2).
            let mut acc = rat(0);
            for k in divisors(cls.m) {
                acc += rat(k) * nval(NSeries::N1, cls.square_half(k));
            }
            Ok(&data.a2 * rat(24) * acc)
        }
        (g, _) => Err(GeomError::UnsupportedInsertion(g)),
    }
}

/// `sum_{k|m} (1/k^3) N0((beta/k)^2/2)`, the genus 0 cover sum.
fn cover_sum_n0(cls: K3Class) -> Rat {
    let mut acc = rat(0);
    for k in divisors(cls.m) {
        acc += psi_weight(k) * nval(NSeries::N0, cls.square_half(k));
    }
    acc
}

/// The Gopakumar-Vafa record of the full class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct K3xK3Gv {
    pub n0_twopoint: Rat,
    pub n0_curve: Rat,
    pub n1: Rat,
    pub n2: Rat,
}

/// Exact GV counts; the genus 1 and 2 entries are defined for primitive
/// classes only.
pub fn k3xk3_gv(cls: K3Class, data: &KunnethData) -> Result<K3xK3Gv, GeomError> {
    let l = cls.square_half(1);
    let n0 = nval(NSeries::N0, l);
    if cls.m != 1 {
        return Err(GeomError::ImprimitiveGenusTwo(cls.m));
    }
    Ok(K3xK3Gv {
        n0_twopoint: &data.d1b * &data.d1pb * &data.d2d2p * &n0,
        n0_curve: &data.th1b * &n0,
        n1: rat(24) * &data.a2 * nval(NSeries::N1, l),
        n2: nval(NSeries::N2, l),
    })
}

/// The eight sheaf-counting invariants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DT4Item {
    /// tau0(alpha).
    I,
    /// tau1(gamma).
    II,
    /// tau2(theta).
    III,
    /// tau3(1).
    IV,
    /// tau0(gamma) tau0(gamma').
    V,
    /// tau0(gamma) tau1(theta).
    VI,
    /// tau0(gamma) tau2(1).
    VII,
    /// tau1(theta) tau2(1).
    VIII,
}

/// The sheaf-counting invariants; they depend on the class only through its
/// square, never its divisibility.
pub fn k3xk3_dt4(cls: K3Class, data: &KunnethData, which: DT4Item) -> Rat {
    let l = cls.square_half(1);
    let n0 = nval(NSeries::N0, l);
    let n1 = nval(NSeries::N1, l);
    let ndp = nval(NSeries::Ndprime, l);
    match which {
        DT4Item::I => &data.th1b * n0,
        DT4Item::II => &data.a1 * n0 - rat(24) * &data.a2 * n1,
        DT4Item::III => &data.th1b * ndp,
        DT4Item::IV => ndp,
        DT4Item::V => &data.d1b * &data.d1pb * &data.d2d2p * n0,
        DT4Item::VI => {
            &data.d1b * &data.d2th2 * n0 - rat(24) * &data.a2 * &data.th1b * n1
        }
        DT4Item::VII => rat(0),
        DT4Item::VIII => rat(48) * &data.th1b * n1,
    }
}

/// The Kunneth data of `c2(X)`: both point components are the Euler class
/// of the complementary K3, the middle component vanishes.
fn c2_data() -> KunnethData {
    KunnethData {
        a1: rat(24),
        a2: rat(24),
        ..Default::default()
    }
}

/// Checks the sheaf/curve counting identities on the product geometry.
pub fn k3xk3_verify(cls: K3Class, data: &KunnethData) -> Vec<VerifyRecord> {
    let geo = "k3xk3";
    let mut out = Vec::new();

    // (i): primary n0 identities, both insertions, any effective class.
    if cls.m == 1 {
        let gv = k3xk3_gv(cls, data).unwrap();
        out.push(VerifyRecord::new(
            geo,
            "tau0(gamma) tau0(gamma') = n0(gamma, gamma')",
            k3xk3_dt4(cls, data, DT4Item::V),
            gv.n0_twopoint,
        ));
        out.push(VerifyRecord::new(
            geo,
            "tau0(alpha) = n0(alpha)",
            k3xk3_dt4(cls, data, DT4Item::I),
            gv.n0_curve,
        ));
        // (ii), primitive form.
        let gw_tau1 = k3xk3_gw(0, cls, data, K3xK3Insertion::Tau1Gamma).unwrap();
        out.push(VerifyRecord::new(
            geo,
            "tau1(gamma) = -1/2 <tau1(gamma)>_gw - n1(gamma)",
            k3xk3_dt4(cls, data, DT4Item::II),
            ratio(-1, 2) * gw_tau1 - gv.n1.clone(),
        ));
        // (iii), primitive: -tau3(1) - (1/12) tau1(c2) = n2, with the right
        // side assembled through the full genus 2 pipeline.
        let l = cls.l;
        let lhs = -k3xk3_dt4(cls, data, DT4Item::IV)
            - ratio(1, 12) * k3xk3_dt4(cls, &c2_data(), DT4Item::II);
        let n1c2 = rat(24) * rat(24) * nval(NSeries::N1, l);
        let diag = rat(24) * rat(2 * l) * nval(NSeries::N0, l);
        let tau1_c2_gw = k3xk3_gw(0, cls, &c2_data(), K3xK3Insertion::Tau1Gamma).unwrap();
        let nodal = nodal_from_parts(&diag, &rat(0), &rat(0), &tau1_c2_gw);
        let n2 = gv_transforms::gv2_primitive(&rat(0), &n1c2, &rat(0), &nodal);
        out.push(VerifyRecord::new(
            geo,
            "-tau3(1) - 1/12 tau1(c2) = n2",
            lhs,
            n2,
        ));
    } else {
        // Imprimitive form of (ii): tau1(gamma) = -1/2 n0(gamma; psi) - sum_k n1(beta/k).
        let tau1_per_class = DivisorIndexed::from_fn(cls.m, |c| {
            k3xk3_gw(0, K3Class::new(cls.l, cls.m / c), data, K3xK3Insertion::Tau1Gamma)
                .unwrap()
        });
        let n0psi_top = n0_psi(&tau1_per_class).get(1).clone();
        let gw1_per_class = DivisorIndexed::from_fn(cls.m, |c| {
            k3xk3_gw(1, K3Class::new(cls.l, cls.m / c), data, K3xK3Insertion::Gamma).unwrap()
        });
        let n1 = gv1_imprimitive(&gw1_per_class);
        let mut n1_sum = rat(0);
        for (_, v) in n1.iter() {
            n1_sum += v;
        }
        out.push(VerifyRecord::new(
            geo,
            "tau1(gamma) = -1/2 n0(gamma; psi) - sum_k n1(beta/k, gamma)",
            k3xk3_dt4(cls, data, DT4Item::II),
            ratio(-1, 2) * n0psi_top - n1_sum,
        ));
    }
    out
}

/// Forward cover sum used by tests as an independent oracle.
pub fn k3xk3_tau1_forward(cls: K3Class, data: &KunnethData) -> Rat {
    let per_class = DivisorIndexed::from_fn(cls.m, |c| {
        rat(-2) * &data.a1 * nval(NSeries::N0, cls.square_half(c))
    });
    cover_forward(&per_class, psi_weight).get(1).clone()
}
