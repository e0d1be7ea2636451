use integrality::{basis_coefficients, check_gv1, sweep};
use series_core::rat::is_integer;
use series_core::{rat, ratio};

#[test]
fn genus_one_sweep_to_100() {
    let reports = sweep(1, &rat(100)).unwrap();
    assert_eq!(reports.len(), 104);
    for r in &reports {
        assert!(r.pass(), "genus 1 integrality fails at bb = {}", r.bb);
        // The even condition is exact parity, not just integrality.
        if r.bb.is_integral() {
            assert_eq!(r.conditions[0].name, "a even");
        }
    }
}

#[test]
fn genus_two_sweep_to_138() {
    let reports = sweep(2, &rat(138)).unwrap();
    for r in &reports {
        assert!(r.pass(), "genus 2 integrality fails at bb = {}", r.bb);
    }
    assert_eq!(*reports.last().unwrap().bb.value().numer(), 138.into());
}

#[test]
fn basis_coefficients_are_integral_in_sweep_range() {
    for twice in -5..=200 {
        let bb = match hilb2_forms::BBSquare::from_twice(twice) {
            Ok(bb) => bb,
            Err(_) => continue,
        };
        let report = check_gv1(bb).unwrap();
        assert!(report.pass());
        let c = hilb2_forms::gv1(bb).unwrap();
        let (k, d) = bb.primary_rep();
        for coeff in basis_coefficients(&c.a, &c.b, d, k) {
            assert!(
                is_integer(&coeff),
                "non-integral basis coefficient {coeff} at bb = {bb}"
            );
        }
    }
}

#[test]
fn reports_cover_the_interleaved_squares() {
    let reports = sweep(1, &ratio(7, 2)).unwrap();
    let squares: Vec<String> = reports.iter().map(|r| r.bb.to_string()).collect();
    assert_eq!(squares, ["-5/2", "-2", "-1/2", "0", "3/2", "2", "7/2"]);
}
