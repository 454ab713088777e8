//! Points and lines of projective spaces P^n(F_q).
//!
//! A point is stored by its canonical representative: coordinates scaled so
//! the first nonzero coordinate is 1. Enumeration is lexicographic over the
//! normalized tuples, using the field's element order coordinatewise.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::ffield::{FieldCtx, FieldElement};

/// Point of P^dim(F_q) in normalized homogeneous coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjPoint {
    coords: Vec<FieldElement>,
}

impl ProjPoint {
    /// Normalizes a nonzero coordinate vector.
    pub fn new(coords: Vec<FieldElement>) -> Result<ProjPoint> {
        if coords.is_empty() {
            return Err(Error::OutOfRange("projective point needs coordinates".into()));
        }
        let ctx = coords[0].ctx().clone();
        for c in &coords {
            if *c.ctx() != ctx {
                return Err(Error::MixedContexts);
            }
        }
        let lead = coords
            .iter()
            .find(|c| !c.is_zero())
            .ok_or_else(|| Error::OutOfRange("all homogeneous coordinates are zero".into()))?;
        let scale = lead.inv()?;
        let coords = coords.iter().map(|c| c.mul(&scale)).collect::<Result<_>>()?;
        Ok(ProjPoint { coords })
    }

    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.coords[0].ctx()
    }
}

/// Number of points of P^dim(F_q): (q^(dim+1) - 1) / (q - 1).
pub fn point_count(ctx: &FieldCtx, dim: usize) -> BigUint {
    let q = ctx.order_big();
    let mut acc = BigUint::one();
    let mut term = BigUint::one();
    for _ in 0..dim {
        term *= &q;
        acc += &term;
    }
    acc
}

/// All points of P^dim(F_q) in lexicographic order of normalized tuples.
///
/// The first point is (0, .., 0, 1); points whose leading 1 sits further
/// left come later because 1 exceeds 0 in the element order.
pub fn points(ctx: &FieldCtx, dim: usize) -> impl Iterator<Item = ProjPoint> + '_ {
    let ctx = ctx.clone();
    (0..=dim).rev().flat_map(move |lead| {
        let ctx = ctx.clone();
        free_tuples(ctx.clone(), dim - lead).map(move |tail| {
            let mut coords = vec![ctx.zero(); lead];
            coords.push(ctx.one());
            coords.extend(tail);
            ProjPoint { coords }
        })
    })
}

/// Cartesian power of the field in lexicographic order.
fn free_tuples(ctx: FieldCtx, len: usize) -> impl Iterator<Item = Vec<FieldElement>> {
    let elems: Vec<FieldElement> = ctx.elements().collect();
    let mut counters = vec![0usize; len];
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let tuple: Vec<FieldElement> = counters.iter().map(|&i| elems[i].clone()).collect();
        let mut i = len;
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            counters[i] += 1;
            if counters[i] < elems.len() {
                break;
            }
            counters[i] = 0;
        }
        Some(tuple)
    })
}

/// A line in P^2(F_q), stored as the normalized dual triple [a0, a1, a2]
/// of the equation a0*x0 + a1*x1 + a2*x2 = 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Line {
    dual: ProjPoint,
}

impl Line {
    pub fn new(dual: Vec<FieldElement>) -> Result<Line> {
        if dual.len() != 3 {
            return Err(Error::OutOfRange("a plane line has three dual coordinates".into()));
        }
        Ok(Line { dual: ProjPoint::new(dual)? })
    }

    pub fn dual(&self) -> &ProjPoint {
        &self.dual
    }
}

/// All q^2 + q + 1 lines of P^2(F_q), enumerated as normalized dual triples.
pub fn lines(ctx: &FieldCtx) -> impl Iterator<Item = Line> + '_ {
    points(ctx, 2).map(|dual| Line { dual })
}

/// Incidence: the point satisfies the line's linear equation.
pub fn incident(point: &ProjPoint, line: &Line) -> Result<bool> {
    if point.dim() != 2 {
        return Err(Error::OutOfRange("incidence is defined in the plane".into()));
    }
    if point.ctx() != line.dual.ctx() {
        return Err(Error::MixedContexts);
    }
    let mut acc = point.ctx().zero();
    for (a, x) in line.dual.coords().iter().zip(point.coords()) {
        acc = acc.add(&a.mul(x)?)?;
    }
    Ok(acc.is_zero())
}
