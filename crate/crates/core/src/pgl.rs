//! The group PGL(2,q) acting on the projective line P^1(F_q).
//!
//! An element is stored as the unique scalar-class representative whose
//! first nonzero entry in scan order (a, b, c, d) is 1, so value equality
//! and ordering on the entry array are equality and ordering in the group.
//! The determinant of a representative is nonzero by construction.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::ffield::{FieldCtx, FieldElement};

/// Largest field size for which full enumeration is permitted.
const MAX_ENUM_Q: u64 = 32;

/// Cap on subgroup closure size.
const MAX_CLOSURE: usize = 100_000;

/// A point of P^1(F_q); `Finite` sorts before `Infinity`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum P1Point {
    Finite(FieldElement),
    Infinity,
}

impl fmt::Display for P1Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            P1Point::Finite(z) => write!(f, "{z}"),
            P1Point::Infinity => write!(f, "inf"),
        }
    }
}

/// All q+1 points of P^1(F_q), finite points first in field order.
pub fn p1_points(ctx: &FieldCtx) -> Vec<P1Point> {
    let mut pts: Vec<P1Point> = ctx.elements().map(P1Point::Finite).collect();
    pts.push(P1Point::Infinity);
    pts
}

/// An element of PGL(2,q) as a normalized 2x2 matrix [a, b; c, d].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PGLElement {
    entries: [FieldElement; 4],
}

impl fmt::Display for PGLElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.entries;
        write!(f, "[{a},{b};{c},{d}]")
    }
}

impl PGLElement {
    pub fn new(
        a: FieldElement,
        b: FieldElement,
        c: FieldElement,
        d: FieldElement,
    ) -> Result<PGLElement> {
        let ctx = a.ctx().clone();
        for e in [&b, &c, &d] {
            if *e.ctx() != ctx {
                return Err(Error::MixedContexts);
            }
        }
        let det = a.mul(&d)?.sub(&b.mul(&c)?)?;
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let mut entries = [a, b, c, d];
        // Scale so the first nonzero entry in scan order is 1.
        let lead = entries.iter().find(|e| !e.is_zero()).unwrap().clone();
        if !lead.is_one() {
            let inv = lead.inv()?;
            for e in entries.iter_mut() {
                *e = e.mul(&inv)?;
            }
        }
        Ok(PGLElement { entries })
    }

    /// Builds an element from signed integer entries reduced mod p.
    pub fn from_ints(ctx: &FieldCtx, a: i64, b: i64, c: i64, d: i64) -> Result<PGLElement> {
        PGLElement::new(
            ctx.from_i64(a),
            ctx.from_i64(b),
            ctx.from_i64(c),
            ctx.from_i64(d),
        )
    }

    pub fn identity(ctx: &FieldCtx) -> PGLElement {
        PGLElement {
            entries: [ctx.one(), ctx.zero(), ctx.zero(), ctx.one()],
        }
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.entries[0].ctx()
    }

    pub fn entries(&self) -> &[FieldElement; 4] {
        &self.entries
    }

    pub fn det(&self) -> FieldElement {
        let [a, b, c, d] = &self.entries;
        a.mul(d).unwrap().sub(&b.mul(c).unwrap()).unwrap()
    }

    pub fn trace(&self) -> FieldElement {
        self.entries[0].add(&self.entries[3]).unwrap()
    }

    /// Matrix product; `self.compose(other)` acts as `self` after `other`.
    pub fn compose(&self, other: &PGLElement) -> Result<PGLElement> {
        if self.ctx() != other.ctx() {
            return Err(Error::MixedContexts);
        }
        let [a, b, c, d] = &self.entries;
        let [e, f, g, h] = &other.entries;
        PGLElement::new(
            a.mul(e)?.add(&b.mul(g)?)?,
            a.mul(f)?.add(&b.mul(h)?)?,
            c.mul(e)?.add(&d.mul(g)?)?,
            c.mul(f)?.add(&d.mul(h)?)?,
        )
    }

    pub fn inverse(&self) -> PGLElement {
        let [a, b, c, d] = &self.entries;
        // Adjugate; the determinant scalar is absorbed by normalization.
        PGLElement::new(d.clone(), b.neg(), c.neg(), a.clone()).unwrap()
    }

    /// Moebius action z -> (az+b)/(cz+d) with the usual conventions at infinity.
    pub fn act(&self, z: &P1Point) -> Result<P1Point> {
        let [a, b, c, d] = &self.entries;
        match z {
            P1Point::Infinity => {
                if c.is_zero() {
                    Ok(P1Point::Infinity)
                } else {
                    Ok(P1Point::Finite(a.div(c)?))
                }
            }
            P1Point::Finite(z) => {
                if *z.ctx() != *self.ctx() {
                    return Err(Error::MixedContexts);
                }
                let num = a.mul(z)?.add(b)?;
                let den = c.mul(z)?.add(d)?;
                if den.is_zero() {
                    Ok(P1Point::Infinity)
                } else {
                    Ok(P1Point::Finite(num.div(&den)?))
                }
            }
        }
    }

    /// Fixed points of the action, by exhaustive scan of P^1(F_q).
    pub fn fixed_points(&self) -> Vec<P1Point> {
        p1_points(self.ctx())
            .into_iter()
            .filter(|z| self.act(z).unwrap() == *z)
            .collect()
    }

    /// Multiplicative order in PGL(2,q).
    pub fn order(&self) -> u64 {
        let id = PGLElement::identity(self.ctx());
        let mut acc = self.clone();
        let mut k = 1;
        while acc != id {
            acc = acc.compose(self).unwrap();
            k += 1;
        }
        k
    }
}

/// Conjugacy type of an element, named by its fixed-point structure on P^1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConjClass {
    Identity,
    Unipotent,
    Split,
    NonSplit,
}

impl fmt::Display for ConjClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ConjClass::Identity => "Identity",
            ConjClass::Unipotent => "Unipotent",
            ConjClass::Split => "Split",
            ConjClass::NonSplit => "NonSplit",
        };
        write!(f, "{s}")
    }
}

/// Classifies by fixed-point count: q+1, 1, 2, 0 points on P^1(F_q).
pub fn classify(g: &PGLElement) -> ConjClass {
    let ctx = g.ctx();
    let q = ctx.order();
    let fixed = g.fixed_points().len() as u64;
    let class = match fixed {
        n if n == q + 1 => ConjClass::Identity,
        2 => ConjClass::Split,
        1 => ConjClass::Unipotent,
        0 => ConjClass::NonSplit,
        n => unreachable!("a nontrivial Moebius map fixed {n} points"),
    };
    // Cross-check: distinct eigenvalues in F_q, i.e. roots of the
    // characteristic polynomial t^2 - tr*t + det, must match the class.
    // (Root counting subsumes the discriminant test and survives char 2,
    // where the discriminant tr^2 is always a square.)
    let tr = g.trace();
    let det = g.det();
    let char_roots = ctx
        .elements()
        .filter(|t| {
            let v = t.mul(t).unwrap().sub(&t.mul(&tr).unwrap()).unwrap();
            v.add(&det).unwrap().is_zero()
        })
        .count();
    let expected = match class {
        ConjClass::Identity | ConjClass::Unipotent => 1,
        ConjClass::Split => 2,
        ConjClass::NonSplit => 0,
    };
    assert_eq!(
        char_roots, expected,
        "eigenvalue count disagrees with fixed-point class"
    );
    class
}

/// All q^3 - q elements of PGL(2,q), sorted; requires q <= 32.
pub fn enumerate_pgl(ctx: &FieldCtx) -> Result<Vec<PGLElement>> {
    let q = ctx.order();
    if q > MAX_ENUM_Q {
        return Err(Error::TooLarge(format!(
            "PGL(2,{q}) enumeration needs q <= {MAX_ENUM_Q}"
        )));
    }
    let mut out = Vec::with_capacity((q * q * q - q) as usize);
    let zero = ctx.zero();
    let one = ctx.one();
    // Representatives with a = 0 have b = 1 and need c nonzero.
    for c in ctx.elements().filter(|c| !c.is_zero()) {
        for d in ctx.elements() {
            out.push(PGLElement {
                entries: [zero.clone(), one.clone(), c.clone(), d.clone()],
            });
        }
    }
    // Representatives with a = 1 need d != bc.
    for b in ctx.elements() {
        for c in ctx.elements() {
            let bc = b.mul(&c)?;
            for d in ctx.elements().filter(|d| *d != bc) {
                out.push(PGLElement {
                    entries: [one.clone(), b.clone(), c.clone(), d.clone()],
                });
            }
        }
    }
    out.sort();
    debug_assert_eq!(out.len() as u64, q * q * q - q);
    Ok(out)
}

/// Closure of a generating set under composition, by breadth-first search.
pub fn subgroup_closure(ctx: &FieldCtx, gens: &[PGLElement]) -> Result<Vec<PGLElement>> {
    for g in gens {
        if g.ctx() != ctx {
            return Err(Error::MixedContexts);
        }
    }
    let mut seen = BTreeSet::new();
    seen.insert(PGLElement::identity(ctx));
    let mut queue: VecDeque<PGLElement> = VecDeque::new();
    queue.push_back(PGLElement::identity(ctx));
    while let Some(e) = queue.pop_front() {
        for g in gens {
            let next = e.compose(g)?;
            if seen.insert(next.clone()) {
                if seen.len() > MAX_CLOSURE {
                    return Err(Error::TooLarge(format!(
                        "subgroup closure exceeded {MAX_CLOSURE} elements"
                    )));
                }
                queue.push_back(next);
            }
        }
    }
    // In a finite group, closure under right multiplication by the
    // generators already contains all inverses.
    let order = seen.len() as u128;
    let q = ctx.order() as u128;
    assert_eq!((q * q * q - q) % order, 0, "closure order violates Lagrange");
    Ok(seen.into_iter().collect())
}

/// The stabilizer of infinity: all upper-triangular elements, order q^2 - q.
pub fn affine_subgroup(ctx: &FieldCtx) -> Result<Vec<PGLElement>> {
    let q = ctx.order();
    if q > MAX_ENUM_Q {
        return Err(Error::TooLarge(format!(
            "affine subgroup enumeration needs q <= {MAX_ENUM_Q}"
        )));
    }
    let one = ctx.one();
    let zero = ctx.zero();
    let mut out = Vec::with_capacity((q * q - q) as usize);
    for b in ctx.elements() {
        for d in ctx.elements().filter(|d| !d.is_zero()) {
            out.push(PGLElement {
                entries: [one.clone(), b.clone(), zero.clone(), d.clone()],
            });
        }
    }
    out.sort();
    Ok(out)
}

/// Orbit partition of P^1(F_q) under a subgroup given as an element list.
pub fn orbits_on_p1(subgroup: &[PGLElement]) -> Result<Vec<Vec<P1Point>>> {
    let Some(first) = subgroup.first() else {
        return Err(Error::NotClosed);
    };
    let ctx = first.ctx().clone();
    let set: BTreeSet<&PGLElement> = subgroup.iter().collect();
    for g in subgroup {
        for h in subgroup {
            if !set.contains(&g.compose(h)?) {
                return Err(Error::NotClosed);
            }
        }
    }
    let mut orbits = Vec::new();
    let mut visited: BTreeSet<P1Point> = BTreeSet::new();
    for z in p1_points(&ctx) {
        if visited.contains(&z) {
            continue;
        }
        let mut orbit = BTreeSet::new();
        let mut stabilizer = 0u64;
        for g in subgroup {
            let image = g.act(&z)?;
            if image == z {
                stabilizer += 1;
            }
            orbit.insert(image);
        }
        assert_eq!(
            orbit.len() as u64 * stabilizer,
            subgroup.len() as u64,
            "orbit-stabilizer product mismatch"
        );
        visited.extend(orbit.iter().cloned());
        orbits.push(orbit.into_iter().collect());
    }
    Ok(orbits)
}

/// True when 1/r + 1/s + 1/t < 1, compared in integers as st+rt+rs < rst.
pub fn triangle_is_hyperbolic(r: u64, s: u64, t: u64) -> Result<bool> {
    if r < 2 || s < 2 || t < 2 {
        return Err(Error::OutOfRange(format!(
            "triangle signature ({r},{s},{t}) needs all entries >= 2"
        )));
    }
    Ok(s * t + r * t + r * s < r * s * t)
}

/// Order of PSL(2,q), counted as the elements whose determinant class is a square.
pub fn psl_order(q: u64) -> Result<u64> {
    let ctx = crate::ffield::field_from_order(q)?;
    let squares: BTreeSet<FieldElement> = ctx
        .elements()
        .filter(|x| !x.is_zero())
        .map(|x| x.mul(&x).unwrap())
        .collect();
    let count = enumerate_pgl(&ctx)?
        .iter()
        .filter(|g| squares.contains(&g.det()))
        .count() as u64;
    let expected = if q % 2 == 0 {
        q * q * q - q
    } else {
        (q * q * q - q) / 2
    };
    assert_eq!(count, expected, "determinant-square count disagrees");
    Ok(count)
}
