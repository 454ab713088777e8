//! Upper-bound checks for curve point counts: Hasse-Weil, Stohr-Voloch,
//! the square-field Weil bound, maximality, and the Ihara genus bound.
//!
//! Every comparison is carried out in integers, so equality cases (maximal
//! curves) are decided exactly. Bounds that need extra data (a plane degree,
//! a square field size) report `None` when that data is absent.

use crate::error::{Error, Result};

/// Verdicts for one (N, g, q) triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub n_points: u64,
    pub genus: u64,
    pub q: u64,
    pub plane_degree: Option<u64>,
    pub hasse_weil_ok: bool,
    pub stohr_voloch_ok: Option<bool>,
    pub weil_q2_ok: Option<bool>,
    pub is_maximal: bool,
    pub ihara_ok: Option<bool>,
}

/// Largest genus a curve attaining the square-field Weil bound can have.
pub fn ihara_genus_bound(q0: u64) -> u64 {
    q0 * (q0 - 1) / 2
}

/// Evaluates every applicable bound for a point count N at genus g over F_q.
pub fn check_bounds(n_points: u64, genus: u64, q: u64, plane_degree: Option<u64>) -> BoundReport {
    let (n, g, q128) = (n_points as u128, genus as u128, q as u128);
    // N <= q + 1 + 2g*sqrt(q), squared to avoid the irrational right side.
    let hasse_weil_ok = n <= q128 + 1 || (n - q128 - 1).pow(2) <= 4 * g * g * q128;
    // 2N <= 2g - 2 + (q+2)d, with the -2 moved across to stay unsigned.
    let stohr_voloch_ok =
        plane_degree.map(|d| 2 * n + 2 <= 2 * g + (q128 + 2) * d as u128);
    let q0 = q.isqrt();
    let is_square = q0 * q0 == q;
    let weil_q2_bound = 1 + q128 + 2 * q0 as u128 * g;
    let weil_q2_ok = is_square.then(|| n <= weil_q2_bound);
    let is_maximal = is_square && n == weil_q2_bound;
    let ihara_ok = is_maximal.then(|| genus <= ihara_genus_bound(q0));
    BoundReport {
        n_points,
        genus,
        q,
        plane_degree,
        hasse_weil_ok,
        stohr_voloch_ok,
        weil_q2_ok,
        is_maximal,
        ihara_ok,
    }
}

/// True when 2 <= p <= g/2 + 1, the uniqueness condition for a degree-p
/// pencil, compared as 2p <= g + 2.
pub fn g1p_unique_sufficient(p: u64, g: u64) -> Result<bool> {
    if p < 2 {
        return Err(Error::OutOfRange(format!("pencil degree {p} must be at least 2")));
    }
    Ok(2 * p <= g + 2)
}
