//! Zeta-function numerators of curves over F_q, fitted from point counts.
//!
//! The numerator P(t) = prod (1 - alpha_i t) of degree 2g is recovered from
//! the counts N_1..N_g by Newton's identities on the power sums
//! p_r = q^r + 1 - N_r, then completed by the functional equation
//! b_{2g-i} = q^{g-i} b_i. Everything is exact integer or rational
//! arithmetic; the only floating point lives in the optional root-magnitude
//! check, behind an explicit tolerance.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// P(t) = sum b_i t^i with b_0 = 1, deg 2g, over the rational point data of
/// a genus-g curve on F_q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaNumerator {
    q: u64,
    g: u64,
    coeffs: Vec<BigInt>,
}

/// Recovers the numerator from the first g point counts.
pub fn fit_numerator(q: u64, g: u64, counts: &[u64]) -> Result<ZetaNumerator> {
    if counts.len() as u64 != g {
        return Err(Error::OutOfRange(format!(
            "genus {g} needs exactly {g} counts, got {}",
            counts.len()
        )));
    }
    let g = g as usize;
    let qi = BigInt::from(q);
    // Power sums of the inverse roots: p_r = q^r + 1 - N_r.
    let power_sums: Vec<BigInt> = counts
        .iter()
        .enumerate()
        .map(|(i, &n)| qi.pow(i as u32 + 1) + 1 - BigInt::from(n))
        .collect();
    let mut coeffs = vec![BigInt::zero(); 2 * g + 1];
    coeffs[0] = BigInt::one();
    for k in 1..=g {
        // k * b_k = -sum_{j=1}^{k} p_j b_{k-j}.
        let mut acc = BigInt::zero();
        for j in 1..=k {
            acc += &power_sums[j - 1] * &coeffs[k - j];
        }
        let (quot, rem) = (-acc).div_rem(&BigInt::from(k));
        if !rem.is_zero() {
            return Err(Error::NonIntegerCoefficient(k));
        }
        coeffs[k] = quot;
    }
    for i in 0..g {
        coeffs[2 * g - i] = qi.pow((g - i) as u32) * &coeffs[i];
    }
    Ok(ZetaNumerator { q, g: g as u64, coeffs })
}

impl ZetaNumerator {
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn genus(&self) -> u64 {
        self.g
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Exact check of b_{2g-i} = q^{g-i} b_i for all i.
    pub fn functional_equation_holds(&self) -> bool {
        let g = self.g as usize;
        let qi = BigInt::from(self.q);
        (0..=g).all(|i| self.coeffs[2 * g - i] == qi.pow((g - i) as u32) * &self.coeffs[i])
    }

    /// Power sums p_1..p_m of the inverse roots, by the Newton recurrence.
    fn power_sums(&self, m: usize) -> Vec<BigInt> {
        let deg = self.coeffs.len() - 1;
        let mut sums: Vec<BigInt> = Vec::with_capacity(m);
        for k in 1..=m {
            let mut acc = if k <= deg {
                BigInt::from(k as u64) * &self.coeffs[k]
            } else {
                BigInt::zero()
            };
            for j in 1..=(k - 1).min(deg) {
                acc += &self.coeffs[j] * &sums[k - j - 1];
            }
            sums.push(-acc);
        }
        sums
    }

    /// The count over F_{q^r} this numerator implies: q^r + 1 - p_r.
    pub fn predict_count(&self, r: u32) -> Result<BigInt> {
        if r == 0 {
            return Err(Error::OutOfRange("extension degree must be positive".into()));
        }
        let p_r = self.power_sums(r as usize).pop().unwrap();
        Ok(BigInt::from(self.q).pow(r) + 1 - p_r)
    }

    /// Compares exp(sum N_r t^r / r) against P(t)/((1-t)(1-qt)) through
    /// t^order, with exact rational series arithmetic.
    pub fn series_consistency(&self, counts: &[u64], order: usize) -> Result<bool> {
        if order > counts.len() {
            return Err(Error::OutOfRange(format!(
                "order {order} exceeds the {} supplied counts",
                counts.len()
            )));
        }
        // exp series: k e_k = sum_{j=1}^{k} N_j e_{k-j}, from A'(t) E = E'.
        let mut exp_series = vec![BigRational::one()];
        for k in 1..=order {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                acc += BigRational::from(BigInt::from(counts[j - 1])) * &exp_series[k - j];
            }
            exp_series.push(acc / BigRational::from(BigInt::from(k as u64)));
        }
        // Geometric factors 1/(1-t) and 1/(1-qt) are the series with
        // coefficients 1 and q^j.
        let qi = BigInt::from(self.q);
        let mut rhs = vec![BigRational::zero(); order + 1];
        for i in 0..=order {
            for j in 0..=(order - i) {
                let geom = BigRational::from(qi.pow(j as u32));
                for (k, b) in self.coeffs.iter().enumerate() {
                    if i + j + k > order {
                        break;
                    }
                    rhs[i + j + k] += BigRational::from(b.clone()) * &geom;
                }
            }
        }
        Ok(exp_series == rhs)
    }

    /// Numerically verifies that every inverse root has magnitude sqrt(q).
    ///
    /// The reversed polynomial (whose roots are the inverse roots alpha_i)
    /// is first made squarefree by exact rational gcd with its derivative,
    /// so the root finder only ever sees simple roots.
    pub fn weil_magnitude_check(&self, tolerance: f64) -> Result<bool> {
        if self.g == 0 {
            return Err(Error::OutOfRange(
                "magnitude check needs positive genus".into(),
            ));
        }
        let reversed: Vec<BigRational> = self
            .coeffs
            .iter()
            .rev()
            .map(|b| BigRational::from(b.clone()))
            .collect();
        let squarefree = squarefree_part(&reversed);
        let complex: Vec<Complex64> = squarefree
            .iter()
            .map(|c| Complex64::new(c.to_f64().unwrap(), 0.0))
            .collect();
        let roots = durand_kerner(&complex)?;
        let target = (self.q as f64).sqrt();
        Ok(roots
            .iter()
            .all(|z| (z.norm() - target).abs() <= tolerance * target))
    }
}

fn poly_degree(p: &[BigRational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn poly_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let db = poly_degree(b).expect("division by zero polynomial");
    let lead = b[db].clone();
    let mut r = a.to_vec();
    while let Some(dr) = poly_degree(&r) {
        if dr < db {
            break;
        }
        let factor = &r[dr] / &lead;
        for i in 0..=db {
            let delta = &factor * &b[i];
            r[dr - db + i] -= delta;
        }
    }
    r.truncate(poly_degree(&r).map_or(0, |d| d + 1));
    r
}

/// p / gcd(p, p'), the polynomial with the same roots all simple.
fn squarefree_part(p: &[BigRational]) -> Vec<BigRational> {
    let derivative: Vec<BigRational> = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from(BigInt::from(i as u64)))
        .collect();
    // Euclidean gcd on rational polynomials.
    let mut a = p.to_vec();
    let mut b = derivative;
    while poly_degree(&b).is_some() {
        let r = poly_rem(&a, &b);
        a = b;
        b = r;
    }
    let da = poly_degree(&a).unwrap();
    if da == 0 {
        return p.to_vec();
    }
    // Exact long division of p by the gcd a.
    let mut quotient = vec![BigRational::zero(); p.len() - da];
    let mut rem = p.to_vec();
    let lead = a[da].clone();
    while let Some(dr) = poly_degree(&rem) {
        if dr < da {
            break;
        }
        let factor = &rem[dr] / &lead;
        quotient[dr - da] = factor.clone();
        for i in 0..=da {
            let delta = &factor * &a[i];
            rem[dr - da + i] -= delta;
        }
    }
    assert!(poly_degree(&rem).is_none(), "squarefree division not exact");
    quotient
}

/// Simultaneous root iteration; expects simple roots and a nonzero leading
/// coefficient.
fn durand_kerner(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    let deg = coeffs.len() - 1;
    let lead = coeffs[deg];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    let eval = |z: Complex64| {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in monic.iter().rev() {
            acc = acc * z + c;
        }
        acc
    };
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..deg).map(|k| seed.powu(k as u32 + 1)).collect();
    for _ in 0..1000 {
        let mut shift = 0.0f64;
        let prev = roots.clone();
        for k in 0..deg {
            let mut denom = Complex64::new(1.0, 0.0);
            for (j, r) in prev.iter().enumerate() {
                if j != k {
                    denom *= prev[k] - r;
                }
            }
            let step = eval(prev[k]) / denom;
            roots[k] = prev[k] - step;
            shift = shift.max(step.norm() / (1.0 + prev[k].norm()));
        }
        if shift < 1e-13 {
            return Ok(roots);
        }
    }
    Err(Error::NumericalFailure)
}
