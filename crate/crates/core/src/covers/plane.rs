//! Plane projective curves as homogeneous trivariate polynomials, with
//! exhaustive point counting over extensions.
//!
//! Terms are keyed by exponent triples in a sorted map and zero coefficients
//! are never stored, so equal polynomials have equal representations.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::ffield::{Embedding, FieldCtx, FieldElement};
use crate::projective;

use super::MAX_COUNT_FIELD;

/// A nonzero homogeneous polynomial F(x, y, z) over F_q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneCurve {
    ctx: FieldCtx,
    degree: u32,
    terms: BTreeMap<(u32, u32, u32), FieldElement>,
}

impl PlaneCurve {
    pub fn new(
        ctx: &FieldCtx,
        terms: impl IntoIterator<Item = ((u32, u32, u32), FieldElement)>,
    ) -> Result<PlaneCurve> {
        let mut table = BTreeMap::new();
        for (exps, coeff) in terms {
            if *coeff.ctx() != *ctx {
                return Err(Error::MixedContexts);
            }
            if coeff.is_zero() {
                continue;
            }
            let entry = table.entry(exps).or_insert_with(|| ctx.zero());
            *entry = entry.add(&coeff)?;
        }
        table.retain(|_, c| !c.is_zero());
        let Some(&(i, j, k)) = table.keys().next() else {
            return Err(Error::InvalidCurve("zero polynomial".into()));
        };
        let degree = i + j + k;
        if table.keys().any(|&(i, j, k)| i + j + k != degree) {
            return Err(Error::InvalidCurve("polynomial is not homogeneous".into()));
        }
        Ok(PlaneCurve { ctx: ctx.clone(), degree, terms: table })
    }

    /// Terms with small signed integer coefficients reduced into the field.
    pub fn from_int_terms(ctx: &FieldCtx, terms: &[((u32, u32, u32), i64)]) -> Result<PlaneCurve> {
        PlaneCurve::new(
            ctx,
            terms.iter().map(|&(exps, c)| (exps, ctx.from_i64(c))),
        )
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32, u32), FieldElement> {
        &self.terms
    }

    fn eval(
        terms: &[((u32, u32, u32), FieldElement)],
        coords: &[FieldElement],
    ) -> Result<FieldElement> {
        let mut acc = coords[0].ctx().zero();
        for ((i, j, k), coeff) in terms {
            let monomial = coords[0]
                .pow(*i as i64)?
                .mul(&coords[1].pow(*j as i64)?)?
                .mul(&coords[2].pow(*k as i64)?)?;
            acc = acc.add(&coeff.mul(&monomial)?)?;
        }
        Ok(acc)
    }
}

/// Number of points of P^2(F_{q^r}) where the curve vanishes.
pub fn count_plane_points(curve: &PlaneCurve, r: u32) -> Result<u64> {
    if r == 0 {
        return Err(Error::OutOfRange("extension degree must be positive".into()));
    }
    let target = if r == 1 {
        curve.ctx.clone()
    } else {
        curve.ctx.extension(r as usize)?
    };
    let plane_size = projective::point_count(&target, 2)
        .to_u128()
        .filter(|&size| size <= MAX_COUNT_FIELD);
    if plane_size.is_none() {
        return Err(Error::TooLarge(format!(
            "plane count over q^{r} exceeds {MAX_COUNT_FIELD} points"
        )));
    }
    let terms: Vec<((u32, u32, u32), FieldElement)> = if target == curve.ctx {
        curve.terms.iter().map(|(&e, c)| (e, c.clone())).collect()
    } else {
        let emb = Embedding::new(&curve.ctx, &target)?;
        curve
            .terms
            .iter()
            .map(|(&e, c)| Ok((e, emb.apply(c)?)))
            .collect::<Result<Vec<_>>>()?
    };
    let mut count = 0u64;
    for point in projective::points(&target, 2) {
        if PlaneCurve::eval(&terms, point.coords())?.is_zero() {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::{field_from_order, make_field};

    /// Counts projective points by scanning nonzero affine triples.
    fn plane_oracle(curve: &PlaneCurve) -> u64 {
        let ctx = &curve.ctx;
        let terms: Vec<_> = curve.terms.iter().map(|(&e, c)| (e, c.clone())).collect();
        let mut vanishing = 0u64;
        for x in ctx.elements() {
            for y in ctx.elements() {
                for z in ctx.elements() {
                    if x.is_zero() && y.is_zero() && z.is_zero() {
                        continue;
                    }
                    let coords = [x.clone(), y.clone(), z.clone()];
                    if PlaneCurve::eval(&terms, &coords).unwrap().is_zero() {
                        vanishing += 1;
                    }
                }
            }
        }
        assert_eq!(vanishing % (ctx.order() - 1), 0);
        vanishing / (ctx.order() - 1)
    }

    #[test]
    fn hermitian_cubic_over_f4() {
        let ctx = make_field(2, 2).unwrap();
        let curve =
            PlaneCurve::from_int_terms(&ctx, &[((3, 0, 0), 1), ((0, 3, 0), 1), ((0, 0, 3), 1)])
                .unwrap();
        assert_eq!(count_plane_points(&curve, 1).unwrap(), 9);
        assert_eq!(plane_oracle(&curve), 9);
    }

    #[test]
    fn coordinate_line_has_q_plus_one_points() {
        for q in [2u64, 3, 4, 5, 7] {
            let ctx = field_from_order(q).unwrap();
            let line = PlaneCurve::from_int_terms(&ctx, &[((1, 0, 0), 1)]).unwrap();
            assert_eq!(count_plane_points(&line, 1).unwrap(), q + 1);
        }
    }

    #[test]
    fn conic_over_f3() {
        let ctx = field_from_order(3).unwrap();
        let conic =
            PlaneCurve::from_int_terms(&ctx, &[((2, 0, 0), 1), ((0, 2, 0), 1), ((0, 0, 2), 1)])
                .unwrap();
        assert_eq!(count_plane_points(&conic, 1).unwrap(), 4);
        assert_eq!(plane_oracle(&conic), 4);
    }

    #[test]
    fn extension_count_matches_base_of_bigger_field() {
        // The F_2 Hermitian form counted over a degree-2 extension agrees
        // with the same form constructed over F_4 directly.
        let f2 = field_from_order(2).unwrap();
        let over_f2 =
            PlaneCurve::from_int_terms(&f2, &[((3, 0, 0), 1), ((0, 3, 0), 1), ((0, 0, 3), 1)])
                .unwrap();
        assert_eq!(count_plane_points(&over_f2, 2).unwrap(), 9);
    }

    #[test]
    fn rejects_zero_and_inhomogeneous_input() {
        let ctx = field_from_order(3).unwrap();
        assert!(matches!(
            PlaneCurve::from_int_terms(&ctx, &[((1, 0, 0), 3)]),
            Err(Error::InvalidCurve(_))
        ));
        assert!(matches!(
            PlaneCurve::from_int_terms(&ctx, &[((1, 0, 0), 1), ((2, 0, 0), 1)]),
            Err(Error::InvalidCurve(_))
        ));
        // Cancelling duplicate terms leaves the zero polynomial.
        assert!(matches!(
            PlaneCurve::from_int_terms(&ctx, &[((1, 0, 0), 1), ((1, 0, 0), 2)]),
            Err(Error::InvalidCurve(_))
        ));
    }

    #[test]
    fn too_large_extension_rejected() {
        let ctx = field_from_order(5).unwrap();
        let line = PlaneCurve::from_int_terms(&ctx, &[((1, 0, 0), 1)]).unwrap();
        assert!(matches!(count_plane_points(&line, 6), Err(Error::TooLarge(_))));
    }
}
