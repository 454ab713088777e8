//! Superelliptic curve models y^n = c * prod (x - rho_i)^{d_i}: ramification
//! data, genus, and point counts for the affine, smooth, and plane models.
//!
//! Branch roots are pairwise distinct and the unit c is nonzero, so the
//! right-hand side is determined by (c, branch) up to nothing; counting over
//! an extension embeds the data once and scans x-fibers with the n-th power
//! root count, never materializing the y-loop.

mod bounds;
mod parse;
mod plane;

pub use bounds::{check_bounds, g1p_unique_sufficient, ihara_genus_bound, BoundReport};
pub use parse::parse_curve;
pub use plane::{count_plane_points, PlaneCurve};

use num_rational::BigRational;
use num_traits::FromPrimitive;

use crate::error::{Error, Result};
use crate::ffield::{gcd_u64, nth_power_root_count, Embedding, FieldCtx, FieldElement};

/// Largest extension size scanned by the affine point counter.
const MAX_COUNT_FIELD: u128 = 10_000_000;

/// The curve y^n = c * prod (x - rho_i)^{d_i} over F_q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KummerCurve {
    ctx: FieldCtx,
    cover_degree: u64,
    leading: FieldElement,
    branch: Vec<(FieldElement, u64)>,
}

/// Ramification indices of the x-line cover, with both divisibility
/// readings of the total degree reported.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ramification {
    pub finite: Vec<u64>,
    pub infinity: u64,
    pub infinity_unramified: bool,
    pub total_degree_multiple_of_n: bool,
    pub total_degree_multiple_of_q: bool,
}

impl KummerCurve {
    /// Curve with unit leading coefficient 1.
    pub fn new(ctx: &FieldCtx, n: u64, branch: Vec<(FieldElement, u64)>) -> Result<KummerCurve> {
        KummerCurve::with_leading(ctx, n, ctx.one(), branch)
    }

    pub fn with_leading(
        ctx: &FieldCtx,
        n: u64,
        leading: FieldElement,
        branch: Vec<(FieldElement, u64)>,
    ) -> Result<KummerCurve> {
        if n == 0 {
            return Err(Error::InvalidCurve("cover degree must be positive".into()));
        }
        if branch.is_empty() {
            return Err(Error::InvalidCurve("at least one branch root required".into()));
        }
        if leading.is_zero() {
            return Err(Error::InvalidCurve("leading unit must be nonzero".into()));
        }
        if *leading.ctx() != *ctx {
            return Err(Error::MixedContexts);
        }
        for (root, d) in &branch {
            if *root.ctx() != *ctx {
                return Err(Error::MixedContexts);
            }
            if *d == 0 {
                return Err(Error::InvalidCurve("multiplicities must be positive".into()));
            }
        }
        for (i, (a, _)) in branch.iter().enumerate() {
            if branch[i + 1..].iter().any(|(b, _)| b == a) {
                return Err(Error::InvalidCurve(format!("repeated branch root {a}")));
            }
        }
        Ok(KummerCurve { ctx: ctx.clone(), cover_degree: n, leading, branch })
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn cover_degree(&self) -> u64 {
        self.cover_degree
    }

    pub fn leading(&self) -> &FieldElement {
        &self.leading
    }

    pub fn branch(&self) -> &[(FieldElement, u64)] {
        &self.branch
    }

    pub fn branch_count(&self) -> u64 {
        self.branch.len() as u64
    }

    pub fn total_degree(&self) -> u64 {
        self.branch.iter().map(|(_, d)| d).sum()
    }

    /// True when the cover degree is coprime to the characteristic.
    pub fn is_tame(&self) -> bool {
        self.cover_degree % self.ctx.p() != 0
    }

    /// gcd of the cover degree with every multiplicity.
    pub fn primitivity(&self) -> u64 {
        self.branch
            .iter()
            .fold(self.cover_degree, |g, (_, d)| gcd_u64(g, *d))
    }

    pub fn ramification_indices(&self) -> Ramification {
        let n = self.cover_degree;
        let total = self.total_degree();
        let finite: Vec<u64> = self.branch.iter().map(|(_, d)| n / gcd_u64(n, *d)).collect();
        let infinity = n / gcd_u64(n, total);
        Ramification {
            finite,
            infinity,
            infinity_unramified: infinity == 1,
            total_degree_multiple_of_n: total % n == 0,
            total_degree_multiple_of_q: total % self.ctx.order() == 0,
        }
    }

    /// The value (n-1)(s-2)/2, returned verbatim even when not an integer.
    pub fn genus_formula(&self) -> BigRational {
        let n = BigRational::from_u64(self.cover_degree).unwrap();
        let s = BigRational::from_u64(self.branch_count()).unwrap();
        let one = BigRational::from_u64(1).unwrap();
        let two = BigRational::from_u64(2).unwrap();
        (n - one) * (s - &two) / two
    }

    /// Genus of the smooth model from the tame ramification divisor.
    pub fn genus_tame(&self) -> Result<u64> {
        if !self.is_tame() {
            return Err(Error::WildCover);
        }
        if self.primitivity() != 1 {
            return Err(Error::Imprimitive);
        }
        let n = self.cover_degree as i128;
        let total = self.total_degree();
        let mut rhs = -2 * n;
        for (_, d) in &self.branch {
            rhs += n - gcd_u64(self.cover_degree, *d) as i128;
        }
        rhs += n - gcd_u64(self.cover_degree, total) as i128;
        // rhs is 2g - 2 of an irreducible curve: even and at least -2.
        assert!(rhs >= -2, "ramification divisor left 2g-2 = {rhs}");
        assert_eq!(rhs % 2, 0, "ramification divisor left 2g-2 = {rhs} odd");
        Ok(((rhs + 2) / 2) as u64)
    }

    /// Right-hand side c * prod (x - rho_i)^{d_i} with data moved to `target`.
    fn embedded_rhs(&self, target: &FieldCtx) -> Result<(FieldElement, Vec<(FieldElement, u64)>)> {
        if *target == self.ctx {
            return Ok((self.leading.clone(), self.branch.clone()));
        }
        let emb = Embedding::new(&self.ctx, target)?;
        let leading = emb.apply(&self.leading)?;
        let branch = self
            .branch
            .iter()
            .map(|(root, d)| Ok((emb.apply(root)?, *d)))
            .collect::<Result<Vec<_>>>()?;
        Ok((leading, branch))
    }

    /// Number of points (x, y) in F_{q^r}^2 on the affine model.
    pub fn count_affine_points(&self, r: u32) -> Result<u64> {
        if r == 0 {
            return Err(Error::OutOfRange("extension degree must be positive".into()));
        }
        let q = self.ctx.order() as u128;
        if q.checked_pow(r).is_none_or(|size| size > MAX_COUNT_FIELD) {
            return Err(Error::TooLarge(format!(
                "affine count over q^{r} exceeds {MAX_COUNT_FIELD} elements"
            )));
        }
        let target = if r == 1 { self.ctx.clone() } else { self.ctx.extension(r as usize)? };
        let (leading, branch) = self.embedded_rhs(&target)?;
        let n = self.cover_degree;
        let mut count = 0u64;
        for x in target.elements() {
            let mut v = leading.clone();
            for (root, d) in &branch {
                v = v.mul(&x.sub(root)?.pow(*d as i64)?)?;
            }
            count += nth_power_root_count(&v, n);
        }
        Ok(count)
    }

    /// Affine count plus the points above infinity on the smooth model.
    ///
    /// Supported exactly when the affine model is nonsingular (all d_i = 1)
    /// and infinity is either totally ramified (gcd(n, s) = 1, one point) or
    /// unramified with split fiber v^n = c (n | s).
    pub fn count_smooth_model_points(&self, r: u32) -> Result<u64> {
        if self.branch.iter().any(|(_, d)| *d != 1) {
            return Err(Error::UnsupportedModel(
                "smooth-model count needs all branch multiplicities 1".into(),
            ));
        }
        let n = self.cover_degree;
        let total = self.total_degree();
        let affine = self.count_affine_points(r)?;
        let g = gcd_u64(n, total);
        if g == 1 {
            return Ok(affine + 1);
        }
        if total % n == 0 {
            let target =
                if r == 1 { self.ctx.clone() } else { self.ctx.extension(r as usize)? };
            let (leading, _) = self.embedded_rhs(&target)?;
            return Ok(affine + nth_power_root_count(&leading, n));
        }
        Err(Error::UnsupportedModel(format!(
            "infinity fiber with gcd(n, total degree) = {g} not supported"
        )))
    }
}

/// Kummer and plane models of y^m = 1 - x^n over the given field.
pub fn fermat_curve(ctx: &FieldCtx, n: u64, m: u64) -> Result<(KummerCurve, PlaneCurve)> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidCurve("fermat exponents must be positive".into()));
    }
    if n > i64::MAX as u64 {
        return Err(Error::TooLarge(format!("exponent {n} out of range")));
    }
    let roots: Vec<(FieldElement, u64)> = ctx
        .elements()
        .filter(|x| !x.is_zero() && x.pow(n as i64).unwrap().is_one())
        .map(|x| (x, 1))
        .collect();
    if roots.len() as u64 != n {
        return Err(Error::RootsNotRational(format!(
            "x^{n} - 1 has {} roots in F_{}, needs {n}",
            roots.len(),
            ctx.order()
        )));
    }
    // 1 - x^n = -(x^n - 1) splits with unit leading coefficient -1.
    let kummer = KummerCurve::with_leading(ctx, m, ctx.from_i64(-1), roots)?;
    let deg = n.max(m) as u32;
    let (n, m) = (n as u32, m as u32);
    let plane = PlaneCurve::from_int_terms(
        ctx,
        &[
            ((n, 0, deg - n), 1),
            ((0, m, deg - m), 1),
            ((0, 0, deg), -1),
        ],
    )?;
    Ok((kummer, plane))
}
