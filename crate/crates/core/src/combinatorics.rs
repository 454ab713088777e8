//! Stirling numbers of the first kind, falling factorials, and a census of
//! monic polynomials under the affine substitution group.
//!
//! The census has two independent routes: a closed-form rational built from
//! falling factorials, and an exhaustive orbit count of monic polynomials
//! under x -> ax + b (with monic renormalization). The two are reported side
//! by side and deliberately never merged; the orbit count is additionally
//! cross-checked against Burnside's lemma.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ffield::poly::{monic_polys, Poly};
use crate::ffield::{FieldCtx, FieldElement};

/// Unsigned Stirling number of the first kind: permutations of n symbols
/// with exactly k cycles. Recurrence c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k).
pub fn stirling_unsigned(n: u64, k: u64) -> Result<BigUint> {
    if k > n {
        return Err(Error::OutOfRange(format!("stirling index k={k} exceeds n={n}")));
    }
    let mut row: Vec<BigUint> = vec![BigUint::one()];
    for m in 1..=n {
        let mut next = vec![BigUint::zero(); row.len() + 1];
        for (j, v) in row.iter().enumerate() {
            next[j + 1] += v;
            next[j] += v * (m - 1);
        }
        row = next;
    }
    Ok(row[k as usize].clone())
}

/// Signed Stirling number of the first kind, s(n,k) = (-1)^(n-k) c(n,k).
pub fn stirling_signed(n: u64, k: u64) -> Result<BigInt> {
    let c = BigInt::from(stirling_unsigned(n, k)?);
    if (n - k) % 2 == 0 {
        Ok(c)
    } else {
        Ok(-c)
    }
}

/// Falling factorial (q)_k = q (q-1) .. (q-k+1); empty product for k = 0.
pub fn falling_factorial(q: i64, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k as i64 {
        acc *= q - i;
    }
    acc
}

/// Checks (q)_n = sum_k s(n,k) q^k, the defining identity connecting the
/// falling factorial with signed Stirling numbers of the first kind.
pub fn check_stirling_identity(q: i64, n: u64) -> bool {
    let lhs = falling_factorial(q, n);
    let mut rhs = BigInt::zero();
    let qb = BigInt::from(q);
    let mut qpow = BigInt::one();
    for k in 0..=n {
        rhs += stirling_signed(n, k).expect("k <= n") * &qpow;
        qpow *= &qb;
    }
    lhs == rhs
}

/// The closed-form census value (sum_{k=1}^n (q)_k) / (q^2 - q), as an exact
/// rational. The value is reported verbatim; it is not asserted to be an
/// integer and in general it is not.
pub fn cover_count_formula(q: u64, n: u64) -> Result<BigRational> {
    if q < 2 {
        return Err(Error::OutOfRange(format!("field size q={q} must be at least 2")));
    }
    let mut sum = BigInt::zero();
    for k in 1..=n {
        sum += falling_factorial(q as i64, k);
    }
    let denom = BigInt::from(q) * BigInt::from(q - 1);
    Ok(BigRational::new(sum, denom))
}

fn census_size_guard(ctx: &FieldCtx, n: u64) -> Result<u64> {
    let q = ctx.order();
    let mut total: u64 = 1;
    for _ in 0..n {
        total = total
            .checked_mul(q)
            .filter(|&t| t <= 1_000_000)
            .ok_or_else(|| Error::TooLarge(format!("q^n = {q}^{n} exceeds 10^6")))?;
    }
    Ok(total)
}

/// Table k -> number of monic degree-n polynomials over F_q with exactly k
/// distinct roots in F_q. Zero counts are omitted.
pub fn census_polys_by_distinct_roots(ctx: &FieldCtx, n: u64) -> Result<BTreeMap<u64, u64>> {
    census_size_guard(ctx, n)?;
    let elems: Vec<FieldElement> = ctx.elements().collect();
    let mut table = BTreeMap::new();
    for f in monic_polys(ctx, n as usize) {
        let mut roots = 0u64;
        for x in &elems {
            if f.eval(x)?.is_zero() {
                roots += 1;
            }
        }
        *table.entry(roots).or_insert(0u64) += 1;
    }
    Ok(table)
}

/// Census of monic degree-n polynomials up to the affine substitution
/// x -> ax + b, with the closed-form rational reported alongside.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub q: u64,
    pub cover_degree: u64,
    pub poly_degree: u64,
    /// (sum_{k=1}^n (q)_k) / (q^2 - q), verbatim.
    pub formula_value: BigRational,
    /// The competing closed form (q-2)_n, also reported verbatim.
    pub falling_q_minus_2: BigInt,
    /// Exhaustive orbit count; agrees with Burnside's lemma by construction.
    pub oracle_value: u64,
    /// k -> ((q)_k, number of monic degree-n polynomials with exactly k
    /// distinct roots), for k = 0..=n.
    pub by_root_count: BTreeMap<u64, (BigInt, u64)>,
}

/// Substitutes x -> ax + b into f and renormalizes to a monic polynomial.
fn affine_transform(f: &Poly, a: &FieldElement, b: &FieldElement) -> Result<Poly> {
    let ctx = f.ctx();
    let lin = Poly::new(ctx, vec![b.clone(), a.clone()])?;
    let mut acc = Poly::zero(ctx);
    for c in f.coeffs().iter().rev() {
        acc = acc.mul(&lin)?.add(&Poly::constant(c.clone()))?;
    }
    acc.monic()
}

fn poly_key(f: &Poly, n: usize) -> Vec<Vec<u64>> {
    (0..n).map(|i| f.coeff(i).coeffs().to_vec()).collect()
}

/// Counts orbits of monic degree-n polynomials under x -> ax + b twice
/// (direct partition and Burnside average) and packages the result next to
/// the closed-form rational.
///
/// `cover_degree` is metadata: the orbit structure does not depend on it.
pub fn census_covers_oracle(ctx: &FieldCtx, cover_degree: u64, n: u64) -> Result<CensusReport> {
    census_size_guard(ctx, n)?;
    let q = ctx.order();
    let group: Vec<(FieldElement, FieldElement)> = {
        let mut g = Vec::new();
        for a in ctx.elements().filter(|a| !a.is_zero()) {
            for b in ctx.elements() {
                g.push((a.clone(), b.clone()));
            }
        }
        g
    };

    let polys: Vec<Poly> = monic_polys(ctx, n as usize).collect();
    let mut seen = std::collections::BTreeSet::new();
    let mut direct_orbits = 0u64;
    let mut fixed_total = 0u64;
    for f in &polys {
        let key = poly_key(f, n as usize);
        if !seen.contains(&key) {
            direct_orbits += 1;
            for (a, b) in &group {
                let g = affine_transform(f, a, b)?;
                seen.insert(poly_key(&g, n as usize));
            }
        }
        for (a, b) in &group {
            if affine_transform(f, a, b)? == *f {
                fixed_total += 1;
            }
        }
    }
    assert_eq!(
        fixed_total % group.len() as u64,
        0,
        "Burnside: total fixed points divide by the group order"
    );
    let burnside_orbits = fixed_total / group.len() as u64;
    assert_eq!(direct_orbits, burnside_orbits, "orbit partition agrees with Burnside average");

    let mut by_root_count = BTreeMap::new();
    let root_table = census_polys_by_distinct_roots(ctx, n)?;
    for k in 0..=n {
        let count = root_table.get(&k).copied().unwrap_or(0);
        by_root_count.insert(k, (falling_factorial(q as i64, k), count));
    }

    Ok(CensusReport {
        q,
        cover_degree,
        poly_degree: n,
        formula_value: cover_count_formula(q, n)?,
        falling_q_minus_2: falling_factorial(q as i64 - 2, n),
        oracle_value: direct_orbits,
        by_root_count,
    })
}

/// Formats a rational as "num/den" with the sign on the numerator.
pub fn rational_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// True when the rational is a (possibly negative) integer.
pub fn rational_is_integer(r: &BigRational) -> bool {
    r.denom().abs().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::make_field;
    use proptest::prelude::*;

    /// Cycle-count distribution of all permutations of n symbols, by direct
    /// enumeration. Independent oracle for the Stirling recurrence.
    fn cycle_distribution(n: usize) -> Vec<u64> {
        fn permutations(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for perm in permutations(n - 1) {
                for pos in 0..n {
                    let mut next = perm.clone();
                    next.insert(pos, n - 1);
                    out.push(next);
                }
            }
            out
        }
        let mut dist = vec![0u64; n + 1];
        for perm in permutations(n) {
            let mut seen = vec![false; n];
            let mut cycles = 0;
            for start in 0..n {
                if seen[start] {
                    continue;
                }
                cycles += 1;
                let mut i = start;
                while !seen[i] {
                    seen[i] = true;
                    i = perm[i];
                }
            }
            dist[cycles] += 1;
        }
        dist
    }

    #[test]
    fn recurrence_matches_permutation_oracle() {
        for n in 0..=6u64 {
            let dist = cycle_distribution(n as usize);
            for k in 0..=n {
                assert_eq!(
                    stirling_unsigned(n, k).unwrap(),
                    BigUint::from(dist[k as usize]),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn small_stirling_values() {
        assert_eq!(stirling_unsigned(4, 2).unwrap(), 11u32.into());
        assert_eq!(stirling_unsigned(4, 1).unwrap(), 6u32.into());
        assert_eq!(stirling_unsigned(0, 0).unwrap(), 1u32.into());
        assert_eq!(stirling_signed(3, 2).unwrap(), BigInt::from(-3));
        assert_eq!(stirling_signed(4, 1).unwrap(), BigInt::from(-6));
        assert_eq!(stirling_signed(5, 2).unwrap(), BigInt::from(-50));
        for n in 0..=8u64 {
            assert_eq!(stirling_signed(n, n).unwrap(), BigInt::one());
        }
        assert!(stirling_unsigned(2, 3).is_err());
    }

    #[test]
    fn falling_factorial_values() {
        assert_eq!(falling_factorial(5, 2), BigInt::from(20));
        assert_eq!(falling_factorial(3, 4), BigInt::zero());
        assert_eq!(falling_factorial(7, 0), BigInt::one());
        assert_eq!(falling_factorial(7, 1), BigInt::from(7));
        assert_eq!(falling_factorial(-2, 3), BigInt::from(-24));
    }

    #[test]
    fn identity_on_the_acceptance_grid() {
        for n in 0..=10u64 {
            for q in 2..=9i64 {
                assert!(check_stirling_identity(q, n), "q={q} n={n}");
            }
        }
    }

    proptest! {
        #[test]
        fn identity_for_arbitrary_integers(q in -60i64..=60, n in 0u64..=25) {
            prop_assert!(check_stirling_identity(q, n));
        }
    }

    #[test]
    fn formula_values() {
        let f = cover_count_formula(3, 1).unwrap();
        assert_eq!(rational_string(&f), "1/2");
        assert!(!rational_is_integer(&f));
        let f = cover_count_formula(3, 2).unwrap();
        assert_eq!(rational_string(&f), "3/2");
        let f = cover_count_formula(5, 2).unwrap();
        assert_eq!(rational_string(&f), "5/4");
        let f = cover_count_formula(2, 2).unwrap();
        assert_eq!(rational_string(&f), "2/1");
        assert!(rational_is_integer(&f));
        assert!(cover_count_formula(1, 2).is_err());
    }

    #[test]
    fn root_census_small_fields() {
        let f2 = make_field(2, 1).unwrap();
        let t = census_polys_by_distinct_roots(&f2, 1).unwrap();
        assert_eq!(t, BTreeMap::from([(1, 2)]));
        let t = census_polys_by_distinct_roots(&f2, 2).unwrap();
        assert_eq!(t, BTreeMap::from([(0, 1), (1, 2), (2, 1)]));
        let f3 = make_field(3, 1).unwrap();
        let t = census_polys_by_distinct_roots(&f3, 1).unwrap();
        assert_eq!(t, BTreeMap::from([(1, 3)]));
    }

    #[test]
    fn root_census_totals_and_top_class() {
        for q in [2u64, 3, 4, 5] {
            let ctx = crate::ffield::field_from_order(q).unwrap();
            for n in 0..=3u64 {
                let table = census_polys_by_distinct_roots(&ctx, n).unwrap();
                let total: u64 = table.values().sum();
                assert_eq!(total, q.pow(n as u32), "q={q} n={n}");
                // Exactly n distinct roots means n-subsets of the field:
                // binomial(q, n) = (q)_n / n!.
                if n <= q {
                    let mut binom = falling_factorial(q as i64, n);
                    for i in 1..=n {
                        binom /= BigInt::from(i);
                    }
                    let top = table.get(&n).copied().unwrap_or(0);
                    assert_eq!(BigInt::from(top), binom, "q={q} n={n}");
                }
            }
        }
    }

    #[test]
    fn census_oracle_linear_over_f3() {
        let f3 = make_field(3, 1).unwrap();
        let report = census_covers_oracle(&f3, 2, 1).unwrap();
        assert_eq!(report.oracle_value, 1);
        assert_eq!(rational_string(&report.formula_value), "1/2");
        assert_eq!(report.falling_q_minus_2, BigInt::one());
        assert_eq!(report.by_root_count[&1], (BigInt::from(3), 3));
    }

    #[test]
    fn census_oracle_quadratics_over_f2() {
        let f2 = make_field(2, 1).unwrap();
        let report = census_covers_oracle(&f2, 2, 2).unwrap();
        // Orbits: {x^2, x^2+1}, {x^2+x}, {x^2+x+1}.
        assert_eq!(report.oracle_value, 3);
        assert_eq!(report.by_root_count[&0], (BigInt::one(), 1));
        assert_eq!(report.by_root_count[&2], (BigInt::from(2), 1));
    }

    #[test]
    fn census_oracle_degree_zero() {
        let f5 = make_field(5, 1).unwrap();
        let report = census_covers_oracle(&f5, 3, 0).unwrap();
        assert_eq!(report.oracle_value, 1);
        assert!(report.formula_value.is_zero());
    }

    #[test]
    fn census_runs_on_extension_fields() {
        let f4 = make_field(2, 2).unwrap();
        let report = census_covers_oracle(&f4, 2, 2).unwrap();
        let total: u64 = report.by_root_count.values().map(|(_, c)| *c).sum();
        assert_eq!(total, 16);
        assert!(report.oracle_value >= 1);
    }

    #[test]
    fn census_size_limit() {
        let f5 = make_field(5, 1).unwrap();
        assert!(matches!(census_polys_by_distinct_roots(&f5, 10), Err(Error::TooLarge(_))));
    }
}
