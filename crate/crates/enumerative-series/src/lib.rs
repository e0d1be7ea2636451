//! One-variable counting series: the N tables, Fujiki constants of Chern
//! classes of hyperkaehler moduli, and two descendent potentials.
//!
//! All tables are indexed by the integer `l` (the normalized square of the
//! curve class, or the number of points `n` for the Fujiki tables). An absent
//! entry means "not computed", never zero.

use std::collections::BTreeMap;

use quasi_jacobi::eisenstein_G;
use series_core::rat::rat_to_string;
use series_core::{eta_power, rat, ratio, QYSeries, Rat};

/// An exact table of rationals indexed by consecutive integers.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LIndexedTable {
    entries: BTreeMap<i64, Rat>,
}

impl LIndexedTable {
    pub fn new() -> Self {
        LIndexedTable::default()
    }

    pub fn insert(&mut self, l: i64, v: Rat) {
        self.entries.insert(l, v);
    }

    /// `None` means the entry was never computed (distinct from zero).
    pub fn get(&self, l: i64) -> Option<&Rat> {
        self.entries.get(&l)
    }

    pub fn min_l(&self) -> Option<i64> {
        self.entries.keys().next().copied()
    }

    pub fn max_l(&self) -> Option<i64> {
        self.entries.keys().next_back().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &Rat)> {
        self.entries.iter().map(|(&l, v)| (l, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Two columns, exact "num/den" values.
    pub fn to_csv(&self, index_name: &str) -> String {
        let mut out = format!("{index_name},value\n");
        for (l, v) in self.iter() {
            out.push_str(&format!("{l},{}\n", rat_to_string(v)));
        }
        out
    }

    /// A two-column Markdown table.
    pub fn to_markdown(&self, index_name: &str, value_name: &str) -> String {
        let mut out = format!("| {index_name} | {value_name} |\n| --- | --- |\n");
        for (l, v) in self.iter() {
            out.push_str(&format!("| {l} | {} |\n", rat_to_string(v)));
        }
        out
    }
}

/// The five N series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NSeries {
    N0,
    N1,
    N2,
    Nprime,
    Ndprime,
}

impl NSeries {
    pub const ALL: [NSeries; 5] = [
        NSeries::N0,
        NSeries::N1,
        NSeries::N2,
        NSeries::Nprime,
        NSeries::Ndprime,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NSeries::N0 => "N0",
            NSeries::N1 => "N1",
            NSeries::N2 => "N2",
            NSeries::Nprime => "Nprime",
            NSeries::Ndprime => "Ndprime",
        }
    }

    pub fn parse(s: &str) -> Option<NSeries> {
        NSeries::ALL.into_iter().find(|n| n.name() == s)
    }
}

/// `prod (1 - q^n)^{-24}`, the 24-colored partition series.
fn m_series(trunc: i64) -> QYSeries {
    eta_power(-24, trunc)
}

/// The modular prefactor multiplying `M(q)/q` for each N series.
fn n_factor(which: NSeries, trunc: i64) -> QYSeries {
    let g2 = eisenstein_G(2, trunc).unwrap();
    let dg2 = g2.dq();
    let one = QYSeries::one(trunc);
    match which {
        NSeries::N0 => one,
        NSeries::N1 => dg2,
        NSeries::N2 => &dg2.scale(&rat(24)) - &(&g2.scale(&rat(24)) + &one),
        NSeries::Nprime => &dg2 + &(&g2 + &QYSeries::constant(ratio(1, 24), trunc)),
        NSeries::Ndprime => &(&dg2.scale(&rat(24)) + &g2.scale(&rat(24))) - &one,
    }
}

/// The full q-series for one of the N counts, with lead -1.
pub fn n_q_series(which: NSeries, trunc: i64) -> QYSeries {
    let t = trunc + 1;
    (&n_factor(which, t) * &m_series(t)).shift(-1).truncate(trunc)
}

/// Table of `N(l)` for `l = -1 .. max_l`, where `l` is the exponent of `q`
/// in the shifted series.
pub fn n_series(which: NSeries, max_l: i64) -> LIndexedTable {
    assert!(max_l >= -1);
    let s = n_q_series(which, max_l + 1);
    let mut t = LIndexedTable::new();
    for l in -1..=max_l {
        t.insert(l, s.coeff(l, 0).unwrap());
    }
    t
}

/// Fujiki constants of Chern classes on Hilbert schemes of points of a K3
/// surface: the coefficient of `q^n` in
/// `(2k)!/(k! 2^k) (q d/dq G2)^k prod (1-q^n)^{-24}`.
pub fn fujiki_hilb(k: i64, max_n: i64) -> LIndexedTable {
    assert!(k >= 0 && max_n >= k);
    let trunc = max_n + 1;
    let dg2 = eisenstein_G(2, trunc + 1).unwrap().dq();
    let mut c = rat(1); // (2k)!/(k! 2^k) = (2k-1)!! ... product of odd numbers
    for j in 0..k {
        c *= rat(2 * j + 1);
    }
    let s = (&dg2.pow(k).unwrap() * &m_series(trunc)).scale(&c);
    let mut t = LIndexedTable::new();
    for n in k..=max_n {
        t.insert(n, s.coeff(n, 0).unwrap());
    }
    t
}

/// Fujiki constants of Chern classes on generalized Kummer varieties: the
/// coefficient of `q^{n+1}` in
/// `(2k)!/((k+1)! 2^k) (q d/dq)^2 (q d/dq G2)^{k+1}`.
pub fn fujiki_kummer(k: i64, max_n: i64) -> LIndexedTable {
    assert!(k >= 0 && max_n >= k);
    let trunc = max_n + 2;
    let dg2 = eisenstein_G(2, trunc).unwrap().dq();
    // (2k)!/((k+1)! 2^k) = (2k-1)!!/(k+1)
    let mut c = rat(1);
    for j in 0..k {
        c *= rat(2 * j + 1);
    }
    c /= rat(k + 1);
    let s = dg2.pow(k + 1).unwrap().dq().dq().scale(&c);
    let mut t = LIndexedTable::new();
    for n in k..=max_n {
        t.insert(n, s.coeff(n + 1, 0).unwrap());
    }
    t
}

/// The two descendent potentials on the Hilbert scheme side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DescendentSeries {
    /// `(1/24 + G2) M(q)`.
    G2P,
    /// `-(20 G2^2 + 2 G2 + 5/3 G4 + 1/24) M(q)`.
    G4,
}

pub fn hilb_descendent_series(which: DescendentSeries, trunc: i64) -> QYSeries {
    assert!(trunc >= 1);
    let g2 = eisenstein_G(2, trunc).unwrap();
    let factor = match which {
        DescendentSeries::G2P => &g2 + &QYSeries::constant(ratio(1, 24), trunc),
        DescendentSeries::G4 => {
            let g4 = eisenstein_G(4, trunc).unwrap();
            -&(&(&(&g2 * &g2).scale(&rat(20)) + &g2.scale(&rat(2)))
                + &(&g4.scale(&ratio(5, 3)) + &QYSeries::constant(ratio(1, 24), trunc)))
        }
    };
    (&factor * &m_series(trunc)).truncate(trunc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use quasi_jacobi::eisenstein_G;
    use series_core::YPoly;

    fn check(t: &LIndexedTable, pairs: &[(i64, i64)]) {
        for &(l, v) in pairs {
            assert_eq!(t.get(l), Some(&rat(v)), "entry at {l}");
        }
    }

    #[test]
    fn n_tables_match_displayed_expansions() {
        check(
            &n_series(NSeries::N0, 3),
            &[(-1, 1), (0, 24), (1, 324), (2, 3200), (3, 25650)],
        );
        check(
            &n_series(NSeries::N1, 6),
            &[(-1, 0), (0, 1), (1, 30), (2, 480), (3, 5460), (4, 49440), (5, 378420), (6, 2540160)],
        );
        check(
            &n_series(NSeries::N2, 6),
            &[(0, 0), (1, 72), (2, 1920), (3, 28440), (4, 305280), (5, 2639760), (6, 19450368)],
        );
        check(
            &n_series(NSeries::Nprime, 6),
            &[(0, 2), (1, 57), (2, 880), (3, 9735), (4, 86160), (5, 646850), (6, 4269888)],
        );
        check(
            &n_series(NSeries::Ndprime, 4),
            &[(-1, -2), (0, 0), (1, 720), (2, 14720), (3, 182340), (4, 1715328)],
        );
    }

    #[test]
    fn n_double_prime_relation() {
        // Ndprime = 24 Nprime - 2 N0 entrywise.
        let n0 = n_series(NSeries::N0, 12);
        let np = n_series(NSeries::Nprime, 12);
        let nd = n_series(NSeries::Ndprime, 12);
        for l in -1..=12 {
            assert_eq!(
                nd.get(l).unwrap(),
                &(rat(24) * np.get(l).unwrap() - rat(2) * n0.get(l).unwrap())
            );
        }
    }

    #[test]
    fn fujiki_hilb_table_values() {
        let k0 = fujiki_hilb(0, 6);
        check(&k0, &[(1, 24), (2, 324), (3, 3200), (4, 25650)]);
        let k1 = fujiki_hilb(1, 6);
        check(&k1, &[(2, 30), (3, 480), (4, 5460), (5, 49440), (6, 378420)]);
        let k2 = fujiki_hilb(2, 3);
        check(&k2, &[(2, 3), (3, 108)]);
        // The six-point row.
        let row: Vec<i64> = (0..=6)
            .map(|k| {
                fujiki_hilb(k, 6)
                    .get(6)
                    .unwrap()
                    .numer()
                    .try_into()
                    .unwrap()
            })
            .rev()
            .collect();
        assert_eq!(row, [10395, 51030, 122220, 198300, 266490, 378420, 1073720]);
    }

    #[test]
    fn fujiki_hilb_zero_is_euler_characteristic_series() {
        let t = fujiki_hilb(0, 10);
        let e = eta_power(-24, 11);
        for n in 0..=10 {
            assert_eq!(t.get(n), Some(&e.coeff(n, 0).unwrap()));
        }
    }

    #[test]
    fn n1_equals_weight_one_fujiki_constants() {
        let n1 = n_series(NSeries::N1, 9);
        for l in 0..=9 {
            assert_eq!(fujiki_hilb(1, l + 1).get(l + 1), Some(n1.get(l).unwrap()));
        }
    }

    #[test]
    fn kummer_euler_characteristics() {
        let t = fujiki_kummer(0, 7);
        for n in 1..=7 {
            let m = n + 1;
            let expected = rat(m * m * m) * {
                let mut s = rat(0);
                for d in 1..=m {
                    if m % d == 0 {
                        s += rat(d);
                    }
                }
                s
            };
            assert_eq!(t.get(n), Some(&expected), "Kummer Euler number at n={n}");
        }
        // Kum_1 is the underlying K3.
        assert_eq!(t.get(1), Some(&rat(24)));
    }

    #[test]
    fn kummer_weight_one_brute_force() {
        // Independent expansion of (q d/dq)^2 (q d/dq G2)^2 / 2 by convolution.
        let t = fujiki_kummer(1, 5);
        let nsig = |n: i64| {
            let mut s = rat(0);
            for d in 1..=n {
                if n % d == 0 {
                    s += rat(d);
                }
            }
            rat(n) * s
        };
        for n in 1..=5 {
            let m = n + 1;
            let mut conv = rat(0);
            for i in 1..m {
                conv += nsig(i) * nsig(m - i);
            }
            let expected = conv * rat(m * m) / rat(2);
            assert_eq!(t.get(n), Some(&expected), "Kummer k=1 at n={n}");
        }
    }

    #[test]
    fn descendent_series_expansions() {
        let g2p = hilb_descendent_series(DescendentSeries::G2P, 10);
        assert_eq!(g2p.lead(), 1);
        assert_eq!(g2p.coeff(0, 0).unwrap(), rat(0));
        assert_eq!(g2p.coeff(1, 0).unwrap(), rat(1));

        // G4 form agrees with -M(q) (2 q dG2/dq + (1/24 + G2)(1 + 24 G2)).
        let t = 30;
        let g2 = eisenstein_G(2, t).unwrap();
        let alt = {
            let a = g2.dq().scale(&rat(2));
            let b = &(&g2 + &QYSeries::constant(ratio(1, 24), t))
                * &(&QYSeries::one(t) + &g2.scale(&rat(24)));
            -&(&m_series(t) * &(&a + &b))
        };
        let g4 = hilb_descendent_series(DescendentSeries::G4, t);
        let cut = alt.trunc().min(g4.trunc());
        assert_eq!(g4.truncate(cut), alt.truncate(cut));
        let _ = YPoly::zero();
    }

    #[test]
    fn emitters_render_exact_values() {
        let mut t = LIndexedTable::new();
        t.insert(-1, rat(1));
        t.insert(0, ratio(-35, 8));
        let csv = t.to_csv("l");
        assert_eq!(csv, "l,value\n-1,1/1\n0,-35/8\n");
        let md = t.to_markdown("l", "N");
        assert!(md.contains("| -1 | 1/1 |"));
        assert!(md.contains("| 0 | -35/8 |"));
    }
}
