//! End-to-end checks on the Hermitian curves y^{q0+1} = 1 - x^{q0+1} over
//! F_{q0^2}: both curve models, genus, maximality, and the zeta numerator.

use fqlab::covers::{check_bounds, count_plane_points, fermat_curve, ihara_genus_bound};
use fqlab::ffield::field_from_order;
use fqlab::zeta::fit_numerator;
use num_bigint::BigInt;
use num_traits::ToPrimitive;

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn hermitian_counts_and_maximality() {
    for q0 in [2u64, 3] {
        let q = q0 * q0;
        let ctx = field_from_order(q).unwrap();
        let (kummer, plane) = fermat_curve(&ctx, q0 + 1, q0 + 1).unwrap();

        let genus = kummer.genus_tame().unwrap();
        assert_eq!(genus, q0 * (q0 - 1) / 2, "q0={q0}");

        let smooth = kummer.count_smooth_model_points(1).unwrap();
        let plane_count = count_plane_points(&plane, 1).unwrap();
        assert_eq!(smooth, plane_count, "q0={q0}");
        assert_eq!(smooth, q0 * q0 * q0 + 1, "q0={q0}");
        assert_eq!(smooth, 1 + q + 2 * q0 * genus, "q0={q0}");

        let report = check_bounds(smooth, genus, q, Some(q0 + 1));
        assert!(report.hasse_weil_ok);
        assert_eq!(report.weil_q2_ok, Some(true));
        assert!(report.is_maximal);
        assert_eq!(report.ihara_ok, Some(true));
    }
    // At q0 = 2 the genus attains the Ihara bound exactly.
    assert_eq!(ihara_genus_bound(2), 1);
}

#[test]
fn hermitian_zeta_numerator_is_a_binomial_power() {
    for q0 in [2u64, 3] {
        let q = q0 * q0;
        let ctx = field_from_order(q).unwrap();
        let (kummer, _) = fermat_curve(&ctx, q0 + 1, q0 + 1).unwrap();
        let genus = kummer.genus_tame().unwrap();
        let counts: Vec<u64> = (1..=genus as u32)
            .map(|r| kummer.count_smooth_model_points(r).unwrap())
            .collect();
        let zn = fit_numerator(q, genus, &counts).unwrap();
        // Maximal curve: P(t) = (1 + q0 t)^{2g}.
        let expected: Vec<BigInt> = (0..=2 * genus)
            .map(|k| BigInt::from(binomial(2 * genus, k) * q0.pow(k as u32)))
            .collect();
        assert_eq!(zn.coeffs(), expected.as_slice(), "q0={q0}");
        assert!(zn.functional_equation_holds());
        assert!(zn.weil_magnitude_check(1e-9).unwrap());
        // The numerator reproduces and extends the count sequence.
        for (r, n) in counts.iter().enumerate() {
            assert_eq!(
                zn.predict_count(r as u32 + 1).unwrap().to_u64().unwrap(),
                *n
            );
        }
    }
}

#[test]
fn hermitian_counts_across_extensions_match_prediction() {
    let ctx = field_from_order(4).unwrap();
    let (kummer, _) = fermat_curve(&ctx, 3, 3).unwrap();
    let zn = fit_numerator(4, 1, &[kummer.count_smooth_model_points(1).unwrap()]).unwrap();
    for r in 2..=3u32 {
        let counted = kummer.count_smooth_model_points(r).unwrap();
        assert_eq!(BigInt::from(counted), zn.predict_count(r).unwrap(), "r={r}");
    }
}
