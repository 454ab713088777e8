//! Sweeps smooth-model point counts for squarefree Kummer curves over small
//! fields and checks every count against the Hasse-Weil and Weil-q^2 bounds.

use fqlab::covers::{check_bounds, KummerCurve};
use fqlab::ffield::field_from_order;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn small_field_counts_respect_weil_bounds() {
    let mut checked = 0u64;
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        let ctx = field_from_order(q).unwrap();
        let elems: Vec<_> = ctx.elements().collect();
        for n in 2..=4u64 {
            if gcd(n, ctx.p()) != 1 {
                continue;
            }
            for s in 1..=5.min(q) {
                if gcd(n, s) != 1 && s % n != 0 {
                    // No smooth model support for this ramification at infinity.
                    continue;
                }
                for start in 0..=(q - s) as usize {
                    let branch: Vec<_> = elems[start..start + s as usize]
                        .iter()
                        .map(|r| (r.clone(), 1))
                        .collect();
                    let curve = KummerCurve::new(&ctx, n, branch).unwrap();
                    let count = curve.count_smooth_model_points(1).unwrap();
                    let genus = curve.genus_tame().unwrap();
                    let report = check_bounds(count, genus, q, None);
                    assert!(
                        report.hasse_weil_ok,
                        "q={q} n={n} s={s} start={start} count={count} genus={genus}"
                    );
                    assert_ne!(
                        report.weil_q2_ok,
                        Some(false),
                        "q={q} n={n} s={s} start={start} count={count} genus={genus}"
                    );
                    assert!(report.stohr_voloch_ok.is_none());
                    checked += 1;
                }
            }
        }
    }
    assert!(checked >= 50, "only {checked} curves swept");
}
