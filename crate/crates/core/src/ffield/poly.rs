//! Dense univariate polynomials over a [`FieldCtx`].
//!
//! Coefficients are stored constant term first. The vector carries no
//! trailing zeros, so the zero polynomial is the empty vector and `degree`
//! returns `None` for it.

use crate::error::{Error, Result};
use crate::ffield::{FieldCtx, FieldElement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    ctx: FieldCtx,
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn new(ctx: &FieldCtx, coeffs: Vec<FieldElement>) -> Result<Poly> {
        for c in &coeffs {
            if c.ctx() != ctx {
                return Err(Error::MixedContexts);
            }
        }
        Ok(Poly { ctx: ctx.clone(), coeffs }.trimmed())
    }

    pub fn zero(ctx: &FieldCtx) -> Poly {
        Poly { ctx: ctx.clone(), coeffs: Vec::new() }
    }

    pub fn constant(c: FieldElement) -> Poly {
        let ctx = c.ctx().clone();
        Poly { ctx, coeffs: vec![c] }.trimmed()
    }

    pub fn one(ctx: &FieldCtx) -> Poly {
        Poly::constant(ctx.one())
    }

    /// The monomial x.
    pub fn x(ctx: &FieldCtx) -> Poly {
        Poly { ctx: ctx.clone(), coeffs: vec![ctx.zero(), ctx.one()] }
    }

    /// Monic product of (x - root)^mult over the given factors.
    pub fn from_linear_factors(ctx: &FieldCtx, factors: &[(FieldElement, u64)]) -> Result<Poly> {
        let mut acc = Poly::one(ctx);
        for (root, mult) in factors {
            if root.ctx() != ctx {
                return Err(Error::MixedContexts);
            }
            let lin = Poly::new(ctx, vec![root.neg(), ctx.one()])?;
            for _ in 0..*mult {
                acc = acc.mul(&lin)?;
            }
        }
        Ok(acc)
    }

    fn trimmed(mut self) -> Poly {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ctx.zero())
    }

    pub fn eval(&self, x: &FieldElement) -> Result<FieldElement> {
        if x.ctx() != &self.ctx {
            return Err(Error::MixedContexts);
        }
        let mut acc = self.ctx.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x)?.add(c)?;
        }
        Ok(acc)
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check_ctx(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for i in 0..len {
            coeffs.push(self.coeff(i).add(&other.coeff(i))?);
        }
        Ok(Poly { ctx: self.ctx.clone(), coeffs }.trimmed())
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.check_ctx(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for i in 0..len {
            coeffs.push(self.coeff(i).sub(&other.coeff(i))?);
        }
        Ok(Poly { ctx: self.ctx.clone(), coeffs }.trimmed())
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check_ctx(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.ctx));
        }
        let mut coeffs = vec![self.ctx.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b)?)?;
            }
        }
        Ok(Poly { ctx: self.ctx.clone(), coeffs }.trimmed())
    }

    pub fn scale(&self, s: &FieldElement) -> Result<Poly> {
        if s.ctx() != &self.ctx {
            return Err(Error::MixedContexts);
        }
        let coeffs = self.coeffs.iter().map(|c| c.mul(s)).collect::<Result<_>>()?;
        Ok(Poly { ctx: self.ctx.clone(), coeffs }.trimmed())
    }

    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check_ctx(divisor)?;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = divisor.leading().unwrap().inv()?;
        let mut rem = self.clone();
        let mut quot = vec![self.ctx.zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let c = rem.leading().unwrap().mul(&lead_inv)?;
            let shift = dr - dd;
            quot[shift] = c.clone();
            let mut sub = vec![self.ctx.zero(); shift];
            sub.extend(divisor.coeffs.iter().map(|b| b.mul(&c)).collect::<Result<Vec<_>>>()?);
            rem = rem.sub(&Poly { ctx: self.ctx.clone(), coeffs: sub })?;
        }
        Ok((Poly { ctx: self.ctx.clone(), coeffs: quot }.trimmed(), rem))
    }

    pub fn derivative(&self) -> Poly {
        let mut coeffs = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            let factor = self.ctx.from_u64(i as u64);
            coeffs.push(c.mul(&factor).expect("same context"));
        }
        Poly { ctx: self.ctx.clone(), coeffs }.trimmed()
    }

    /// Monic greatest common divisor; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check_ctx(other)?;
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Scales to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Result<Poly> {
        match self.leading() {
            None => Ok(self.clone()),
            Some(l) => self.scale(&l.inv()?),
        }
    }

    /// A nonzero polynomial is squarefree exactly when gcd(f, f') = 1.
    pub fn is_squarefree(&self) -> Result<bool> {
        if self.is_zero() {
            return Ok(false);
        }
        let g = self.gcd(&self.derivative())?;
        Ok(g.degree() == Some(0))
    }

    /// Roots in the coefficient field with multiplicities, in element order.
    pub fn roots_with_multiplicity(&self) -> Result<Vec<(FieldElement, usize)>> {
        if self.is_zero() {
            return Err(Error::OutOfRange("zero polynomial has every element as a root".into()));
        }
        let mut out = Vec::new();
        for r in self.ctx.elements() {
            if !self.eval(&r)?.is_zero() {
                continue;
            }
            let lin = Poly::new(&self.ctx, vec![r.neg(), self.ctx.one()])?;
            let mut mult = 0;
            let mut f = self.clone();
            loop {
                let (q, rem) = f.divrem(&lin)?;
                if !rem.is_zero() {
                    break;
                }
                mult += 1;
                f = q;
            }
            out.push((r, mult));
        }
        Ok(out)
    }

    /// Trial division over the coefficient field.
    pub fn is_irreducible(&self) -> Result<bool> {
        let d = match self.degree() {
            Some(d) if d >= 1 => d,
            _ => return Ok(false),
        };
        if d == 1 {
            return Ok(true);
        }
        for dd in 1..=d / 2 {
            for divisor in monic_polys(&self.ctx, dd) {
                let (_, rem) = self.divrem(&divisor)?;
                if rem.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn check_ctx(&self, other: &Poly) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::MixedContexts)
        }
    }
}

/// All monic polynomials of exact degree `d`, lower coefficients in
/// element-lexicographic order.
pub fn monic_polys(ctx: &FieldCtx, d: usize) -> impl Iterator<Item = Poly> + '_ {
    let ctx = ctx.clone();
    let mut counters = vec![0u64; d];
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let mut coeffs: Vec<FieldElement> = counters
            .iter()
            .map(|&ix| nth_element(&ctx, ix))
            .collect();
        coeffs.push(ctx.one());
        let poly = Poly { ctx: ctx.clone(), coeffs };
        let q = ctx.order();
        let mut i = d;
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            counters[i] += 1;
            if counters[i] < q {
                break;
            }
            counters[i] = 0;
        }
        Some(poly)
    })
}

/// The `ix`-th field element in enumeration order.
fn nth_element(ctx: &FieldCtx, ix: u64) -> FieldElement {
    let p = ctx.p();
    let n = ctx.degree();
    let mut coeffs = vec![0u64; n];
    let mut rest = ix;
    for i in (0..n).rev() {
        coeffs[i] = rest % p;
        rest /= p;
    }
    ctx.from_coeffs(&coeffs).expect("coefficient count matches the degree")
}
