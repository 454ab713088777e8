//! Exact arithmetic in small finite fields F_{p^n}.
//!
//! A [`FieldCtx`] fixes the prime `p`, the extension degree `n`, and a monic
//! irreducible modulus of degree `n` over F_p. Elements are coefficient
//! vectors of length `n` relative to the residue class of `x`; coefficients
//! are stored constant term first. Contexts compare by value `(p, n, modulus)`,
//! so two independently built contexts for the same field interoperate.
//!
//! Construction always picks the lexicographically smallest monic irreducible
//! modulus (coefficient tuples ordered constant first), which makes every
//! derived object deterministic.

pub mod poly;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Largest field order `p^n` a context will be built for.
pub const MAX_FIELD_ORDER: u64 = 100_000_000;

#[derive(Debug)]
struct CtxData {
    p: u64,
    n: usize,
    /// Monic irreducible of degree `n` over F_p, constant first, length `n + 1`.
    modulus: Vec<u64>,
    order: u64,
}

/// A finite field F_{p^n} together with its modulus. Cheap to clone.
#[derive(Debug, Clone)]
pub struct FieldCtx(Arc<CtxData>);

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.0.p == other.0.p && self.0.n == other.0.n && self.0.modulus == other.0.modulus
    }
}

impl Eq for FieldCtx {}

impl Hash for FieldCtx {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.p.hash(state);
        self.0.n.hash(state);
        self.0.modulus.hash(state);
    }
}

impl PartialOrd for FieldCtx {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldCtx {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.0.p, self.0.n, &self.0.modulus).cmp(&(other.0.p, other.0.n, &other.0.modulus))
    }
}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.order)
    }
}

/// Builds F_{p^n} with the canonical modulus.
pub fn make_field(p: u64, n: usize) -> Result<FieldCtx> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 {
        return Err(Error::DegreeZero);
    }
    let mut order: u64 = 1;
    for _ in 0..n {
        order = order
            .checked_mul(p)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or_else(|| Error::TooLarge(format!("field order {p}^{n} exceeds {MAX_FIELD_ORDER}")))?;
    }
    let modulus = smallest_irreducible(p, n);
    Ok(FieldCtx(Arc::new(CtxData { p, n, modulus, order })))
}

/// Builds the field of order `q`, factoring `q` as a prime power.
pub fn field_from_order(q: u64) -> Result<FieldCtx> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            break;
        }
        p += 1;
    }
    if q % p != 0 {
        p = q;
    }
    let mut n = 0;
    let mut rest = q;
    while rest % p == 0 {
        rest /= p;
        n += 1;
    }
    if rest != 1 {
        return Err(Error::NotPrimePower(q));
    }
    make_field(p, n)
}

impl FieldCtx {
    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> usize {
        self.0.n
    }

    /// Field order q = p^n.
    pub fn order(&self) -> u64 {
        self.0.order
    }

    pub fn order_big(&self) -> BigUint {
        BigUint::from(self.0.order)
    }

    /// Modulus coefficients, constant first, length `n + 1`, leading 1.
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.n == 1
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { ctx: self.clone(), coeffs: vec![0; self.0.n] }
    }

    pub fn one(&self) -> FieldElement {
        self.from_u64(1)
    }

    /// Constant element `v mod p` of the prime subfield.
    pub fn from_u64(&self, v: u64) -> FieldElement {
        let mut coeffs = vec![0; self.0.n];
        coeffs[0] = v % self.0.p;
        FieldElement { ctx: self.clone(), coeffs }
    }

    /// Constant element for a signed value, reduced into `[0, p)`.
    pub fn from_i64(&self, v: i64) -> FieldElement {
        let p = self.0.p as i64;
        self.from_u64(v.rem_euclid(p) as u64)
    }

    /// Element from explicit coefficients (constant first). Shorter vectors
    /// are zero padded; entries are reduced mod p.
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() > self.0.n {
            return Err(Error::OutOfRange(format!(
                "{} coefficients for an extension of degree {}",
                coeffs.len(),
                self.0.n
            )));
        }
        let mut c = vec![0; self.0.n];
        for (i, &v) in coeffs.iter().enumerate() {
            c[i] = v % self.0.p;
        }
        Ok(FieldElement { ctx: self.clone(), coeffs: c })
    }

    /// Residue class of `x`. Zero in a prime field, a generator of the
    /// extension as an F_p-algebra otherwise.
    pub fn adjoined_root(&self) -> FieldElement {
        if self.0.n == 1 {
            return self.zero();
        }
        let mut coeffs = vec![0; self.0.n];
        coeffs[1] = 1;
        FieldElement { ctx: self.clone(), coeffs }
    }

    /// All q elements in coefficient-lexicographic order (constant term most
    /// significant), starting at zero.
    pub fn elements(&self) -> Elements {
        Elements { ctx: self.clone(), next: Some(vec![0; self.0.n]) }
    }

    /// F_{p^{n·r}} with the canonical modulus, the target for degree-r
    /// extension counts.
    pub fn extension(&self, r: usize) -> Result<FieldCtx> {
        if r == 0 {
            return Err(Error::DegreeZero);
        }
        make_field(self.0.p, self.0.n * r)
    }

    fn raw(&self) -> &CtxData {
        &self.0
    }
}

/// Element of a [`FieldCtx`], stored as `n` coefficients constant first.
#[derive(Debug, Clone)]
pub struct FieldElement {
    ctx: FieldCtx,
    coeffs: Vec<u64>,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.coeffs == other.coeffs
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ctx.hash(state);
        self.coeffs.hash(state);
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElement {
    /// Coefficient-lexicographic within one context; contexts order first.
    fn cmp(&self, other: &Self) -> Ordering {
        self.ctx.cmp(&other.ctx).then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ctx.is_prime_field() {
            return write!(f, "{}", self.coeffs[0]);
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}^{}:[{}]", self.ctx.p(), self.ctx.degree(), parts.join(","))
    }
}

impl FieldElement {
    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    fn check_ctx(&self, other: &FieldElement) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::MixedContexts)
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_ctx(other)?;
        let p = self.ctx.p();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        Ok(FieldElement { ctx: self.ctx.clone(), coeffs })
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_ctx(other)?;
        let p = self.ctx.p();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + p - b) % p)
            .collect();
        Ok(FieldElement { ctx: self.ctx.clone(), coeffs })
    }

    pub fn neg(&self) -> FieldElement {
        let p = self.ctx.p();
        let coeffs = self.coeffs.iter().map(|&a| (p - a) % p).collect();
        FieldElement { ctx: self.ctx.clone(), coeffs }
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_ctx(other)?;
        let data = self.ctx.raw();
        let prod = raw_mul(&self.coeffs, &other.coeffs, data.p);
        let rem = raw_rem(&prod, &data.modulus, data.p);
        Ok(FieldElement { ctx: self.ctx.clone(), coeffs: pad_to(rem, data.n) })
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let data = self.ctx.raw();
        let inv = raw_inverse_mod(&self.coeffs, &data.modulus, data.p);
        Ok(FieldElement { ctx: self.ctx.clone(), coeffs: pad_to(inv, data.n) })
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_ctx(other)?;
        self.mul(&other.inv()?)
    }

    /// `self^e` for a signed exponent; negative exponents invert first.
    pub fn pow(&self, e: i64) -> Result<FieldElement> {
        if e < 0 {
            return self.inv()?.pow_u64(e.unsigned_abs());
        }
        self.pow_u64(e as u64)
    }

    fn pow_u64(&self, mut e: u64) -> Result<FieldElement> {
        let mut base = self.clone();
        let mut acc = self.ctx.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// The field Frobenius a -> a^p.
    pub fn frobenius(&self) -> FieldElement {
        self.pow_u64(self.ctx.p()).expect("powering cannot fail")
    }
}

/// Iterator over all elements of a context in coefficient-lexicographic order.
pub struct Elements {
    ctx: FieldCtx,
    next: Option<Vec<u64>>,
}

impl Iterator for Elements {
    type Item = FieldElement;

    fn next(&mut self) -> Option<FieldElement> {
        let current = self.next.take()?;
        let elem = FieldElement { ctx: self.ctx.clone(), coeffs: current.clone() };
        let p = self.ctx.p();
        let mut bumped = current;
        // Odometer with the last coefficient least significant, so the
        // constant term is the most significant lexicographic position.
        let mut i = bumped.len();
        loop {
            if i == 0 {
                self.next = None;
                break;
            }
            i -= 1;
            bumped[i] += 1;
            if bumped[i] < p {
                self.next = Some(bumped);
                break;
            }
            bumped[i] = 0;
        }
        Some(elem)
    }
}

/// Number of solutions of y^n = c in the field of `c`.
///
/// One solution when c = 0; otherwise gcd(n, q-1) solutions when c is an n-th
/// power (detected by c^((q-1)/g) = 1) and none when it is not.
pub fn nth_power_root_count(c: &FieldElement, n: u64) -> u64 {
    assert!(n >= 1, "power must be positive");
    if c.is_zero() {
        return 1;
    }
    let q = c.ctx().order();
    let g = gcd_u64(n, q - 1);
    let probe = c.pow_u64((q - 1) / g).expect("powering cannot fail");
    if probe.is_one() {
        g
    } else {
        0
    }
}

/// Field embedding F_{p^n} -> F_{p^{nm}} determined by sending the source
/// generator to the first root (in element order) of the source modulus
/// inside the target.
pub struct Embedding {
    src: FieldCtx,
    tgt: FieldCtx,
    /// Powers r^0 .. r^{n-1} of the chosen root of the source modulus.
    powers: Vec<FieldElement>,
}

impl Embedding {
    pub fn new(src: &FieldCtx, tgt: &FieldCtx) -> Result<Embedding> {
        if src.p() != tgt.p() {
            return Err(Error::IncompatibleFields(format!(
                "characteristics {} and {} differ",
                src.p(),
                tgt.p()
            )));
        }
        if tgt.degree() % src.degree() != 0 {
            return Err(Error::IncompatibleFields(format!(
                "degree {} does not divide degree {}",
                src.degree(),
                tgt.degree()
            )));
        }
        let modulus = src.modulus().to_vec();
        let root = tgt
            .elements()
            .find(|x| eval_prime_poly(&modulus, x).is_zero())
            .expect("an irreducible of dividing degree splits in the target");
        let mut powers = Vec::with_capacity(src.degree());
        let mut acc = tgt.one();
        for _ in 0..src.degree() {
            powers.push(acc.clone());
            acc = acc.mul(&root).expect("powering cannot fail");
        }
        Ok(Embedding { src: src.clone(), tgt: tgt.clone(), powers })
    }

    pub fn source(&self) -> &FieldCtx {
        &self.src
    }

    pub fn target(&self) -> &FieldCtx {
        &self.tgt
    }

    pub fn apply(&self, a: &FieldElement) -> Result<FieldElement> {
        if *a.ctx() != self.src {
            return Err(Error::MixedContexts);
        }
        let mut acc = self.tgt.zero();
        for (c, rp) in a.coeffs().iter().zip(&self.powers) {
            if *c != 0 {
                let term = rp.mul(&self.tgt.from_u64(*c))?;
                acc = acc.add(&term)?;
            }
        }
        Ok(acc)
    }

    /// Source element mapping to `b`, if `b` lies in the embedded subfield.
    pub fn preimage(&self, b: &FieldElement) -> Result<Option<FieldElement>> {
        if *b.ctx() != self.tgt {
            return Err(Error::MixedContexts);
        }
        for e in self.src.elements() {
            if self.apply(&e)? == *b {
                return Ok(Some(e));
            }
        }
        Ok(None)
    }
}

/// One-shot form of [`Embedding`].
pub fn embed(a: &FieldElement, tgt: &FieldCtx) -> Result<FieldElement> {
    Embedding::new(a.ctx(), tgt)?.apply(a)
}

/// Evaluates a polynomial with prime-subfield coefficients at `x`.
fn eval_prime_poly(coeffs: &[u64], x: &FieldElement) -> FieldElement {
    let ctx = x.ctx();
    let mut acc = ctx.zero();
    for &c in coeffs.iter().rev() {
        acc = acc.mul(x).and_then(|t| t.add(&ctx.from_u64(c))).expect("powering cannot fail");
    }
    acc
}

pub(crate) fn gcd_u64(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// ---- raw polynomial arithmetic over F_p (constant-first u64 vectors) ----

fn pad_to(mut v: Vec<u64>, n: usize) -> Vec<u64> {
    v.resize(n, 0);
    v
}

fn raw_deg(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

fn raw_trim(mut a: Vec<u64>) -> Vec<u64> {
    let len = raw_deg(&a).map_or(0, |d| d + 1);
    a.truncate(len);
    a
}

fn raw_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (da, db) = match (raw_deg(a), raw_deg(b)) {
        (Some(da), Some(db)) => (da, db),
        _ => return Vec::new(),
    };
    let mut out = vec![0u64; da + db + 1];
    for i in 0..=da {
        if a[i] == 0 {
            continue;
        }
        for j in 0..=db {
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
        }
    }
    out
}

/// Remainder of `a` by a monic `m`.
fn raw_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let dm = raw_deg(m).expect("modulus is nonzero");
    let mut r = raw_trim(a.to_vec());
    while let Some(dr) = raw_deg(&r) {
        if dr < dm {
            break;
        }
        let lead = r[dr];
        let shift = dr - dm;
        for j in 0..=dm {
            r[shift + j] = (r[shift + j] + (p - lead % p) * m[j]) % p;
        }
        r = raw_trim(r);
    }
    r
}

fn raw_scale(a: &[u64], s: u64, p: u64) -> Vec<u64> {
    raw_trim(a.iter().map(|&c| c * s % p).collect())
}

fn raw_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let len = a.len().max(b.len());
    let mut out = vec![0u64; len];
    for i in 0..len {
        let av = a.get(i).copied().unwrap_or(0);
        let bv = b.get(i).copied().unwrap_or(0);
        out[i] = (av + p - bv) % p;
    }
    raw_trim(out)
}

fn inv_mod_p(a: u64, p: u64) -> u64 {
    // Extended Euclid on integers; p prime and a nonzero mod p.
    let (mut t, mut new_t): (i64, i64) = (0, 1);
    let (mut r, mut new_r) = (p as i64, (a % p) as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert!(r == 1, "inverse of a unit");
    t.rem_euclid(p as i64) as u64
}

/// Inverse of `a` modulo the monic irreducible `m` via extended Euclid.
fn raw_inverse_mod(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r0 = raw_trim(m.to_vec());
    let mut r1 = raw_rem(a, m, p);
    let mut s0: Vec<u64> = Vec::new();
    let mut s1: Vec<u64> = vec![1];
    while let Some(d1) = raw_deg(&r1) {
        if d1 == 0 {
            break;
        }
        let (q, rem) = raw_divrem(&r0, &r1, p);
        let qs1 = raw_mul(&q, &s1, p);
        let new_s = raw_sub(&s0, &qs1, p);
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = new_s;
    }
    let c = r1.first().copied().expect("unit has nonzero gcd with the modulus");
    raw_scale(&s1, inv_mod_p(c, p), p)
}

fn raw_divrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let db = raw_deg(b).expect("divisor is nonzero");
    let lead_inv = inv_mod_p(b[db], p);
    let mut r = raw_trim(a.to_vec());
    let mut q = vec![0u64; raw_deg(&r).map_or(0, |da| da.saturating_sub(db)) + 1];
    while let Some(dr) = raw_deg(&r) {
        if dr < db {
            break;
        }
        let c = r[dr] * lead_inv % p;
        let shift = dr - db;
        q[shift] = c;
        for j in 0..=db {
            r[shift + j] = (r[shift + j] + (p - b[j] * c % p)) % p;
        }
        r = raw_trim(r);
    }
    (raw_trim(q), r)
}

pub(crate) fn raw_is_irreducible(f: &[u64], p: u64) -> bool {
    let d = match raw_deg(f) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if d == 1 {
        return true;
    }
    // Trial division by every monic polynomial of degree 1..=d/2.
    for dd in 1..=d / 2 {
        let mut div = vec![0u64; dd + 1];
        div[dd] = 1;
        loop {
            let (_, rem) = raw_divrem(f, &div, p);
            if raw_deg(&rem).is_none() {
                return false;
            }
            // Advance the lower coefficients as a base-p odometer; a carry
            // into the leading coefficient ends the sweep for this degree.
            let mut i = dd;
            loop {
                if i == 0 {
                    div[dd] += 1;
                    break;
                }
                i -= 1;
                div[i] += 1;
                if div[i] < p {
                    break;
                }
                div[i] = 0;
            }
            if div[dd] != 1 {
                break;
            }
        }
    }
    true
}

/// Lexicographically smallest monic irreducible of degree `n` over F_p,
/// ordering candidate tuples constant term first.
fn smallest_irreducible(p: u64, n: usize) -> Vec<u64> {
    let mut f = vec![0u64; n + 1];
    f[n] = 1;
    loop {
        if raw_is_irreducible(&f, p) {
            return f;
        }
        // Lexicographic successor on (c_0, .., c_{n-1}).
        let mut i = n;
        loop {
            assert!(i > 0, "some monic polynomial of each degree is irreducible");
            i -= 1;
            f[i] += 1;
            if f[i] < p {
                break;
            }
            f[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_moduli() {
        // x^2+x+1 is the only irreducible monic quadratic over F_2; check the
        // search against a direct sweep of all four candidates.
        let f4 = make_field(2, 2).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        let mut irreducible = Vec::new();
        for c0 in 0..2u64 {
            for c1 in 0..2u64 {
                if raw_is_irreducible(&[c0, c1, 1], 2) {
                    irreducible.push(vec![c0, c1, 1]);
                }
            }
        }
        assert_eq!(irreducible, vec![vec![1, 1, 1]]);

        let f5 = make_field(5, 1).unwrap();
        assert_eq!(f5.modulus(), &[0, 1]);
        assert_eq!(f5.order(), 5);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(make_field(4, 1).unwrap_err(), Error::NotPrime(4));
        assert_eq!(make_field(1, 1).unwrap_err(), Error::NotPrime(1));
        assert_eq!(make_field(3, 0).unwrap_err(), Error::DegreeZero);
        assert!(matches!(field_from_order(12), Err(Error::NotPrimePower(12))));
        assert_eq!(field_from_order(9).unwrap().p(), 3);
        assert_eq!(field_from_order(8).unwrap().degree(), 3);
    }

    #[test]
    fn arithmetic_in_prime_field() {
        let f7 = make_field(7, 1).unwrap();
        let three = f7.from_u64(3);
        let five = f7.from_u64(5);
        assert_eq!(three.mul(&five).unwrap(), f7.from_u64(1));
        assert_eq!(three.inv().unwrap(), five);
        assert_eq!(three.add(&five).unwrap(), f7.from_u64(1));
        assert_eq!(f7.zero().inv().unwrap_err(), Error::DivisionByZero);
        assert_eq!(f7.from_u64(2).pow(4).unwrap(), f7.from_u64(2));
        assert_eq!(f7.from_u64(2).pow(-1).unwrap(), f7.from_u64(4));
    }

    #[test]
    fn arithmetic_in_f4() {
        let f4 = make_field(2, 2).unwrap();
        let t = f4.adjoined_root();
        let t1 = t.add(&f4.one()).unwrap();
        // t^2 reduces to t+1 under x^2+x+1.
        assert_eq!(t.mul(&t).unwrap(), t1);
        assert_eq!(t.mul(&t1).unwrap(), f4.one());
        assert_eq!(t.inv().unwrap(), t1);
        assert_eq!(t.pow(3).unwrap(), f4.one());
    }

    #[test]
    fn mixed_contexts_rejected() {
        let f2 = make_field(2, 1).unwrap();
        let f3 = make_field(3, 1).unwrap();
        assert_eq!(f2.one().add(&f3.one()).unwrap_err(), Error::MixedContexts);
        // Equal parameters interoperate even for separately built contexts.
        let f3b = make_field(3, 1).unwrap();
        assert_eq!(f3.one().add(&f3b.from_u64(2)).unwrap(), f3.zero());
    }

    #[test]
    fn element_enumeration_order() {
        let f4 = make_field(2, 2).unwrap();
        let elems: Vec<_> = f4.elements().collect();
        assert_eq!(elems.len(), 4);
        let coeffs: Vec<_> = elems.iter().map(|e| e.coeffs().to_vec()).collect();
        assert_eq!(coeffs, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert!(elems.windows(2).all(|w| w[0] < w[1]));

        let f9 = make_field(3, 2).unwrap();
        assert_eq!(f9.elements().count(), 9);
    }

    #[test]
    fn frobenius_fixes_prime_field_and_permutes_f4() {
        let f5 = make_field(5, 1).unwrap();
        for a in f5.elements() {
            assert_eq!(a.frobenius(), a);
        }
        let f4 = make_field(2, 2).unwrap();
        let t = f4.adjoined_root();
        assert_eq!(t.frobenius(), t.add(&f4.one()).unwrap());
        for a in f4.elements() {
            assert_eq!(a.frobenius().frobenius(), a);
        }
    }

    #[test]
    fn power_map_root_counts_match_exhaustive_loop() {
        let f7 = make_field(7, 1).unwrap();
        // Oracle: count cube roots by direct search.
        let cube_roots = |c: &FieldElement| {
            f7.elements().filter(|y| y.pow(3).unwrap() == *c).count() as u64
        };
        let one = f7.from_u64(1);
        let three = f7.from_u64(3);
        assert_eq!(cube_roots(&one), 3);
        assert_eq!(cube_roots(&three), 0);
        assert_eq!(nth_power_root_count(&one, 3), 3);
        assert_eq!(nth_power_root_count(&three, 3), 0);
        assert_eq!(nth_power_root_count(&f7.zero(), 3), 1);
        for q in [4u64, 5, 8, 9, 13, 16] {
            let ctx = field_from_order(q).unwrap();
            for n in 1..=6u64 {
                for c in ctx.elements() {
                    let direct =
                        ctx.elements().filter(|y| y.pow(n as i64).unwrap() == c).count() as u64;
                    assert_eq!(nth_power_root_count(&c, n), direct, "q={q} n={n} c={c}");
                }
            }
        }
    }

    #[test]
    fn root_count_sums_to_field_order() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            let ctx = field_from_order(q).unwrap();
            for n in 1..=6u64 {
                let total: u64 = ctx.elements().map(|c| nth_power_root_count(&c, n)).sum();
                assert_eq!(total, q, "q={q} n={n}");
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 16] {
            let ctx = field_from_order(q).unwrap();
            let elems: Vec<_> = ctx.elements().collect();
            for a in &elems {
                assert_eq!(a.add(&ctx.zero()).unwrap(), *a);
                assert_eq!(a.mul(&ctx.one()).unwrap(), *a);
                assert_eq!(a.sub(a).unwrap(), ctx.zero());
                if !a.is_zero() {
                    assert_eq!(a.mul(&a.inv().unwrap()).unwrap(), ctx.one());
                }
                for b in &elems {
                    assert_eq!(a.add(b).unwrap(), b.add(a).unwrap());
                    assert_eq!(a.mul(b).unwrap(), b.mul(a).unwrap());
                }
            }
            // Associativity and distributivity on the full cube is only run
            // for q <= 9 to keep the exhaustive pass quick.
            if q <= 9 {
                for a in &elems {
                    for b in &elems {
                        for c in &elems {
                            let ab_c = a.add(b).unwrap().add(c).unwrap();
                            let a_bc = a.add(&b.add(c).unwrap()).unwrap();
                            assert_eq!(ab_c, a_bc);
                            let mul_ab_c = a.mul(b).unwrap().mul(c).unwrap();
                            let mul_a_bc = a.mul(&b.mul(c).unwrap()).unwrap();
                            assert_eq!(mul_ab_c, mul_a_bc);
                            let lhs = a.mul(&b.add(c).unwrap()).unwrap();
                            let rhs = a.mul(b).unwrap().add(&a.mul(c).unwrap()).unwrap();
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn fermat_little_theorem_up_to_49() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49] {
            let ctx = field_from_order(q).unwrap();
            for a in ctx.elements() {
                assert_eq!(a.pow(q as i64).unwrap(), a, "q={q}");
                if !a.is_zero() {
                    assert!(a.pow((q - 1) as i64).unwrap().is_one());
                }
            }
        }
    }

    #[test]
    fn embeddings_are_field_homomorphisms() {
        let pairs = [(2u64, 4u64), (4, 16), (3, 9), (2, 16), (5, 25)];
        for (qs, qt) in pairs {
            let src = field_from_order(qs).unwrap();
            let tgt = field_from_order(qt).unwrap();
            let emb = Embedding::new(&src, &tgt).unwrap();
            let elems: Vec<_> = src.elements().collect();
            let images: Vec<_> = elems.iter().map(|a| emb.apply(a).unwrap()).collect();
            for (i, a) in elems.iter().enumerate() {
                for (j, b) in elems.iter().enumerate() {
                    let sum = emb.apply(&a.add(b).unwrap()).unwrap();
                    assert_eq!(sum, images[i].add(&images[j]).unwrap());
                    let prod = emb.apply(&a.mul(b).unwrap()).unwrap();
                    assert_eq!(prod, images[i].mul(&images[j]).unwrap());
                    if i != j {
                        assert_ne!(images[i], images[j]);
                    }
                }
            }
            assert_eq!(emb.apply(&src.one()).unwrap(), tgt.one());
            assert_eq!(emb.preimage(&images[1]).unwrap(), Some(elems[1].clone()));
        }
    }

    #[test]
    fn embedding_requires_compatible_fields() {
        let f9 = make_field(3, 2).unwrap();
        let f4 = make_field(2, 2).unwrap();
        let f8 = make_field(2, 3).unwrap();
        assert!(matches!(Embedding::new(&f9, &f4), Err(Error::IncompatibleFields(_))));
        assert!(matches!(Embedding::new(&f4, &f8), Err(Error::IncompatibleFields(_))));
        let one = f4.one();
        assert_eq!(embed(&one, &make_field(2, 4).unwrap()).unwrap().coeffs()[0], 1);
    }

    #[test]
    fn element_display_forms() {
        let f7 = make_field(7, 1).unwrap();
        assert_eq!(f7.from_u64(3).to_string(), "3");
        let f4 = make_field(2, 2).unwrap();
        let t1 = f4.from_coeffs(&[1, 1]).unwrap();
        assert_eq!(t1.to_string(), "2^2:[1,1]");
    }
}
