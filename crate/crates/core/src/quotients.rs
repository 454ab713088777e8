//! Monomial invariants and fixed-point data for the coordinate
//! automorphisms (x, y) -> (ax, a^{-1}y), (x, y) -> (ax, a^q y), and
//! (x, y) -> (x + y, y) of the curve y^m = 1 - x^{q-1}.
//!
//! Invariance of a Laurent monomial is decided symbolically: the map turns
//! x^i y^j into lambda^i mu^j x^i y^j, so the verdict is a scalar test,
//! quantified exhaustively over every admissible parameter, never sampled.

use std::collections::BTreeSet;
use std::fmt;

use crate::covers::fermat_curve;
use crate::error::{Error, Result};
use crate::ffield::{Embedding, FieldCtx, FieldElement};
use crate::pgl::{P1Point, PGLElement};

/// Exponent cap keeping scalar powers cheap.
const MAX_EXPONENT: i64 = 1_000_000;

/// x^i y^j with signed exponents.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LaurentMonomial {
    i: i64,
    j: i64,
}

impl LaurentMonomial {
    pub fn new(i: i64, j: i64) -> Result<LaurentMonomial> {
        if i.abs() > MAX_EXPONENT || j.abs() > MAX_EXPONENT {
            return Err(Error::OutOfRange(format!(
                "exponents ({i}, {j}) exceed {MAX_EXPONENT}"
            )));
        }
        Ok(LaurentMonomial { i, j })
    }

    pub fn x_exp(&self) -> i64 {
        self.i
    }

    pub fn y_exp(&self) -> i64 {
        self.j
    }
}

impl fmt::Display for LaurentMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{}*y^{}", self.i, self.j)
    }
}

/// A coordinate substitution acting on monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialMap {
    /// (x, y) -> (lambda x, mu y) with nonzero scalars.
    Diagonal { lambda: FieldElement, mu: FieldElement },
    /// (x, y) -> (x + y, y), which sends monomials off the monomial lattice.
    Unipotent { ctx: FieldCtx },
}

/// The three parameter families of substitutions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AutoCase {
    A,
    B,
    C,
}

impl MonomialMap {
    /// (x, y) -> (ax, a^{-1}y) for a in F_q*.
    pub fn case_a(a: &FieldElement) -> Result<MonomialMap> {
        Ok(MonomialMap::Diagonal { lambda: a.clone(), mu: a.inv()? })
    }

    /// (x, y) -> (ax, a^q y) for a in F_{q^2}* outside F_q, with q the order
    /// of `base`.
    pub fn case_b(a: &FieldElement, base: &FieldCtx) -> Result<MonomialMap> {
        let q = base.order();
        if q > i64::MAX as u64 {
            return Err(Error::TooLarge(format!("base field order {q}")));
        }
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let conjugate = a.pow(q as i64)?;
        if conjugate == *a {
            return Err(Error::OutOfRange(format!(
                "case B parameter {a} lies in the base field"
            )));
        }
        Ok(MonomialMap::Diagonal { lambda: a.clone(), mu: conjugate })
    }

    pub fn unipotent(ctx: &FieldCtx) -> MonomialMap {
        MonomialMap::Unipotent { ctx: ctx.clone() }
    }

    /// Image of x^i y^j: the unchanged monomial and the scalar lambda^i mu^j.
    pub fn apply(&self, m: &LaurentMonomial) -> Result<(FieldElement, LaurentMonomial)> {
        match self {
            MonomialMap::Diagonal { lambda, mu } => {
                let scalar = lambda.pow(m.i)?.mul(&mu.pow(m.j)?)?;
                Ok((scalar, *m))
            }
            MonomialMap::Unipotent { .. } => Err(Error::NotMonomialStable),
        }
    }

    /// True when the scalar from `apply` is 1.
    pub fn fixes(&self, m: &LaurentMonomial) -> Result<bool> {
        Ok(self.apply(m)?.0.is_one())
    }

    /// The action on the x-line as an element of PGL(2, base).
    ///
    /// A diagonal map over the base field is diag(lambda, mu); one over a
    /// quadratic extension with mu the base-Frobenius conjugate of lambda
    /// descends to the companion matrix of (t - lambda)(t - mu), whose trace
    /// and norm are base-rational.
    pub fn p1_form(&self, base: &FieldCtx) -> Result<PGLElement> {
        match self {
            MonomialMap::Unipotent { ctx } => {
                if ctx != base {
                    return Err(Error::MixedContexts);
                }
                PGLElement::from_ints(base, 1, 1, 0, 1)
            }
            MonomialMap::Diagonal { lambda, mu } => {
                if lambda.ctx() == base {
                    return PGLElement::new(lambda.clone(), base.zero(), base.zero(), mu.clone());
                }
                let q = base.order() as i64;
                if lambda.pow(q)? != *mu {
                    return Err(Error::IncompatibleFields(
                        "diagonal scalars are neither base-rational nor conjugate".into(),
                    ));
                }
                let emb = Embedding::new(base, lambda.ctx())?;
                let trace = lambda.add(mu)?;
                let norm = lambda.mul(mu)?;
                let down = |v: &FieldElement| -> Result<FieldElement> {
                    emb.preimage(v)?.ok_or_else(|| {
                        Error::IncompatibleFields(format!("{v} is not base-rational"))
                    })
                };
                let trace = down(&trace)?;
                let norm = down(&norm)?;
                PGLElement::new(base.zero(), norm.neg(), base.one(), trace)
            }
        }
    }

    /// Fixed points of the P^1 form on P^1(base), by exhaustive scan.
    pub fn fixed_points(&self, base: &FieldCtx) -> Result<Vec<P1Point>> {
        Ok(self.p1_form(base)?.fixed_points())
    }
}

/// Invariance of a monomial under every admissible parameter of a case.
pub fn is_invariant(base: &FieldCtx, case: AutoCase, m: &LaurentMonomial) -> Result<bool> {
    match case {
        AutoCase::A => {
            for a in base.elements().filter(|a| !a.is_zero()) {
                if !MonomialMap::case_a(&a)?.fixes(m)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        AutoCase::B => {
            let ext = base.extension(2)?;
            let q = base.order() as i64;
            for a in ext.elements().filter(|a| !a.is_zero()) {
                if a.pow(q)? == a {
                    continue;
                }
                if !MonomialMap::case_b(&a, base)?.fixes(m)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        AutoCase::C => Err(Error::NotMonomialStable),
    }
}

/// Orbit data of one parameter's substitution on the affine curve points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamOrbits {
    pub param: String,
    /// Order of the substitution, i.e. the multiplicative order of a.
    pub map_order: u64,
    pub preserves_points: bool,
    /// Sorted orbit sizes; empty when the point set is not preserved.
    pub orbit_sizes: Vec<u64>,
}

/// Exhaustive invariant-field and orbit report for y^m = 1 - x^{q0-1}
/// over F_{q0^2}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvarianceReport {
    pub q0: u64,
    pub m: u64,
    pub field_order: u64,
    pub exponent: u64,
    pub affine_points: u64,
    pub mu_invariant_case_a: bool,
    pub tau_invariant_case_a: bool,
    pub gamma_invariant_case_b: bool,
    pub delta_invariant_case_b: bool,
    /// Fixed points on P^1(F_q0) of case A maps with a^2 != 1; None when no
    /// such parameter exists.
    pub case_a_fixed_count: Option<u64>,
    pub case_b_fixed_count: u64,
    pub case_c_fixed_count: u64,
    pub case_a_orbits: Vec<ParamOrbits>,
    pub case_b_orbits: Vec<ParamOrbits>,
}

fn multiplicative_order(a: &FieldElement) -> Result<u64> {
    if a.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let mut acc = a.clone();
    let mut k = 1;
    while !acc.is_one() {
        acc = acc.mul(a)?;
        k += 1;
    }
    Ok(k)
}

/// Cycle data of (x, y) -> (lambda x, mu y) on the point set, or None when
/// the set is not preserved.
fn orbit_sizes(
    points: &BTreeSet<(FieldElement, FieldElement)>,
    lambda: &FieldElement,
    mu: &FieldElement,
) -> Result<Option<Vec<u64>>> {
    let step = |(x, y): &(FieldElement, FieldElement)| -> Result<(FieldElement, FieldElement)> {
        Ok((lambda.mul(x)?, mu.mul(y)?))
    };
    for p in points {
        if !points.contains(&step(p)?) {
            return Ok(None);
        }
    }
    let mut sizes = Vec::new();
    let mut visited = BTreeSet::new();
    for p in points {
        if visited.contains(p) {
            continue;
        }
        let mut size = 0u64;
        let mut cur = p.clone();
        loop {
            visited.insert(cur.clone());
            size += 1;
            cur = step(&cur)?;
            if cur == *p {
                break;
            }
        }
        sizes.push(size);
    }
    sizes.sort_unstable();
    Ok(Some(sizes))
}

/// Verifies the invariant monomials and collects orbit data for the curve
/// y^m = 1 - x^{q0-1} over F_{q0^2}.
pub fn curve_invariance_report(q0: u64, m: u64) -> Result<InvarianceReport> {
    if q0 < 2 || m < 1 {
        return Err(Error::OutOfRange(format!(
            "report needs q0 >= 2 and m >= 1, got ({q0}, {m})"
        )));
    }
    if m > MAX_EXPONENT as u64 || q0 > 1000 {
        return Err(Error::TooLarge(format!("parameters ({q0}, {m})")));
    }
    let base = crate::ffield::field_from_order(q0)?;
    let ext = base.extension(2)?;
    let n = q0 - 1;
    // Constructibility of the Kummer model, plus an independent count to
    // check the point set against.
    let (kummer, _) = fermat_curve(&ext, n, m)?;
    let expected = kummer.count_affine_points(1)?;

    let mut points: BTreeSet<(FieldElement, FieldElement)> = BTreeSet::new();
    for x in ext.elements() {
        let rhs = ext.one().sub(&x.pow(n as i64)?)?;
        for y in ext.elements() {
            if y.pow(m as i64)? == rhs {
                points.insert((x.clone(), y.clone()));
            }
        }
    }
    assert_eq!(points.len() as u64, expected, "point set disagrees with fiber count");

    let q_big = q0 * q0;
    let mu = LaurentMonomial::new(n as i64, 0)?;
    let tau = LaurentMonomial::new(1, 1)?;
    let gamma = LaurentMonomial::new((q_big - 1) as i64, 0)?;
    let delta = LaurentMonomial::new(-(q0 as i64), 1)?;

    // Fixed-point counts per case, each exhaustive over its parameters.
    let mut case_a_fixed: Option<u64> = None;
    for a in base.elements().filter(|a| !a.is_zero()) {
        if a.mul(&a)?.is_one() {
            continue;
        }
        let count = MonomialMap::case_a(&a)?.fixed_points(&base)?.len() as u64;
        assert!(case_a_fixed.is_none_or(|c| c == count));
        case_a_fixed = Some(count);
    }
    let mut case_b_fixed: Option<u64> = None;
    let q_i64 = q0 as i64;
    for a in ext.elements().filter(|a| !a.is_zero()) {
        if a.pow(q_i64)? == a {
            continue;
        }
        let count = MonomialMap::case_b(&a, &base)?.fixed_points(&base)?.len() as u64;
        assert!(case_b_fixed.is_none_or(|c| c == count));
        case_b_fixed = Some(count);
    }
    let case_c_fixed = MonomialMap::unipotent(&base).fixed_points(&base)?.len() as u64;

    // Orbits of each parameter's substitution on the affine points. Case A
    // scalars live in the base field and act through the embedding.
    let emb = Embedding::new(&base, &ext)?;
    let mut case_a_orbits = Vec::new();
    for a in base.elements().filter(|a| !a.is_zero()) {
        let lambda = emb.apply(&a)?;
        let sizes = orbit_sizes(&points, &lambda, &lambda.inv()?)?;
        let map_order = multiplicative_order(&a)?;
        if let Some(sizes) = &sizes {
            assert!(sizes.iter().all(|s| map_order % s == 0), "orbit size does not divide map order");
        }
        case_a_orbits.push(ParamOrbits {
            param: a.to_string(),
            map_order,
            preserves_points: sizes.is_some(),
            orbit_sizes: sizes.unwrap_or_default(),
        });
    }
    let mut case_b_orbits = Vec::new();
    for a in ext.elements().filter(|a| !a.is_zero()) {
        let conj = a.pow(q_i64)?;
        if conj == a {
            continue;
        }
        let sizes = orbit_sizes(&points, &a, &conj)?;
        let map_order = multiplicative_order(&a)?;
        if let Some(sizes) = &sizes {
            assert!(sizes.iter().all(|s| map_order % s == 0), "orbit size does not divide map order");
        }
        case_b_orbits.push(ParamOrbits {
            param: a.to_string(),
            map_order,
            preserves_points: sizes.is_some(),
            orbit_sizes: sizes.unwrap_or_default(),
        });
    }

    Ok(InvarianceReport {
        q0,
        m,
        field_order: q_big,
        exponent: n,
        affine_points: points.len() as u64,
        mu_invariant_case_a: is_invariant(&base, AutoCase::A, &mu)?,
        tau_invariant_case_a: is_invariant(&base, AutoCase::A, &tau)?,
        gamma_invariant_case_b: is_invariant(&base, AutoCase::B, &gamma)?,
        delta_invariant_case_b: is_invariant(&base, AutoCase::B, &delta)?,
        case_a_fixed_count: case_a_fixed,
        case_b_fixed_count: case_b_fixed.expect("quadratic extension has elements outside the base"),
        case_c_fixed_count: case_c_fixed,
        case_a_orbits,
        case_b_orbits,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::{field_from_order, make_field};

    fn f(q: u64) -> FieldCtx {
        field_from_order(q).unwrap()
    }

    #[test]
    fn monomial_display_and_bounds() {
        let m = LaurentMonomial::new(-3, 1).unwrap();
        assert_eq!(m.to_string(), "x^-3*y^1");
        assert!(matches!(
            LaurentMonomial::new(2_000_000, 0),
            Err(Error::OutOfRange(_))
        ));
    }

    #[test]
    fn apply_scalar_examples() {
        let ctx = f(5);
        let tau = LaurentMonomial::new(1, 1).unwrap();
        for v in 1..5 {
            let map = MonomialMap::case_a(&ctx.from_u64(v)).unwrap();
            assert!(map.fixes(&tau).unwrap());
        }
        // a = 2 on x^3 scales by 2^3 = 3.
        let map = MonomialMap::case_a(&ctx.from_u64(2)).unwrap();
        let cube = LaurentMonomial::new(3, 0).unwrap();
        let (scalar, image) = map.apply(&cube).unwrap();
        assert_eq!(scalar, ctx.from_u64(3));
        assert_eq!(image, cube);

        assert!(matches!(
            MonomialMap::unipotent(&ctx).apply(&LaurentMonomial::new(1, 0).unwrap()),
            Err(Error::NotMonomialStable)
        ));
    }

    #[test]
    fn invariance_frozen_examples() {
        let f5 = f(5);
        let mu = LaurentMonomial::new(4, 0).unwrap();
        assert!(is_invariant(&f5, AutoCase::A, &mu).unwrap());
        let cube = LaurentMonomial::new(3, 0).unwrap();
        assert!(!is_invariant(&f5, AutoCase::A, &cube).unwrap());

        let f3 = f(3);
        let delta = LaurentMonomial::new(-3, 1).unwrap();
        assert!(is_invariant(&f3, AutoCase::B, &delta).unwrap());
        let gamma = LaurentMonomial::new(8, 0).unwrap();
        assert!(is_invariant(&f3, AutoCase::B, &gamma).unwrap());

        assert!(matches!(
            is_invariant(&f3, AutoCase::C, &gamma),
            Err(Error::NotMonomialStable)
        ));
    }

    #[test]
    fn case_a_invariance_matches_divisibility() {
        for q in [2u64, 3, 4, 5, 7, 9] {
            let base = f(q);
            for i in -6i64..=6 {
                for j in -6i64..=6 {
                    let m = LaurentMonomial::new(i, j).unwrap();
                    let verdict = is_invariant(&base, AutoCase::A, &m).unwrap();
                    assert_eq!(
                        verdict,
                        (i - j).rem_euclid(q as i64 - 1) == 0,
                        "q={q} i={i} j={j}"
                    );
                }
            }
        }
    }

    #[test]
    fn fixed_point_examples() {
        let f5 = f(5);
        let map = MonomialMap::case_a(&f5.from_u64(2)).unwrap();
        assert_eq!(
            map.fixed_points(&f5).unwrap(),
            vec![P1Point::Finite(f5.zero()), P1Point::Infinity]
        );

        let f3 = f(3);
        let ext = f3.extension(2).unwrap();
        let outside = ext
            .elements()
            .find(|a| !a.is_zero() && a.pow(3).unwrap() != *a)
            .unwrap();
        let map = MonomialMap::case_b(&outside, &f3).unwrap();
        assert_eq!(map.fixed_points(&f3).unwrap(), vec![]);

        let map = MonomialMap::unipotent(&f3);
        assert_eq!(map.fixed_points(&f3).unwrap(), vec![P1Point::Infinity]);
    }

    #[test]
    fn case_b_rejects_base_rational_parameters() {
        let f3 = f(3);
        let ext = f3.extension(2).unwrap();
        let emb = Embedding::new(&f3, &ext).unwrap();
        let inside = emb.apply(&f3.from_u64(2)).unwrap();
        assert!(matches!(
            MonomialMap::case_b(&inside, &f3),
            Err(Error::OutOfRange(_))
        ));
    }

    #[test]
    fn hermitian_report_q0_2() {
        let report = curve_invariance_report(2, 3).unwrap();
        assert_eq!(report.field_order, 4);
        assert_eq!(report.exponent, 1);
        // y^3 = 1 - x pins x for each y: four affine points over F_4.
        assert_eq!(report.affine_points, 4);
        assert!(report.mu_invariant_case_a);
        assert!(report.tau_invariant_case_a);
        assert!(report.gamma_invariant_case_b);
        assert!(report.delta_invariant_case_b);
        // F_2* has no a with a^2 != 1.
        assert_eq!(report.case_a_fixed_count, None);
        assert_eq!(report.case_b_fixed_count, 0);
        assert_eq!(report.case_c_fixed_count, 1);
        // Only a = 1 acts in case A: identity, four singleton orbits.
        assert_eq!(report.case_a_orbits.len(), 1);
        assert_eq!(report.case_a_orbits[0].orbit_sizes, vec![1, 1, 1, 1]);
        // No case B substitution preserves the point set here.
        assert!(!report.case_b_orbits.is_empty());
        assert!(report.case_b_orbits.iter().all(|o| !o.preserves_points));
    }

    #[test]
    fn report_q0_3_m_4() {
        let report = curve_invariance_report(3, 4).unwrap();
        assert_eq!(report.affine_points, 14);
        assert_eq!(report.case_a_fixed_count, None);
        assert_eq!(report.case_b_fixed_count, 0);
        // a = -1 negates both coordinates and pairs up all 14 points.
        let negation = report
            .case_a_orbits
            .iter()
            .find(|o| o.param == "2")
            .unwrap();
        assert!(negation.preserves_points);
        assert_eq!(negation.map_order, 2);
        assert_eq!(negation.orbit_sizes, vec![2; 7]);
    }

    #[test]
    fn report_q0_4_has_split_case_a_fixed_points() {
        let report = curve_invariance_report(4, 3).unwrap();
        assert_eq!(report.case_a_fixed_count, Some(2));
        assert_eq!(report.case_b_fixed_count, 0);
        assert_eq!(report.case_c_fixed_count, 1);
    }

    #[test]
    fn extension_base_fields_work() {
        let base = make_field(2, 2).unwrap();
        let mu = LaurentMonomial::new(3, 0).unwrap();
        assert!(is_invariant(&base, AutoCase::A, &mu).unwrap());
        let delta = LaurentMonomial::new(-4, 1).unwrap();
        assert!(is_invariant(&base, AutoCase::B, &delta).unwrap());
        let gamma = LaurentMonomial::new(15, 0).unwrap();
        assert!(is_invariant(&base, AutoCase::B, &gamma).unwrap());
    }
}
