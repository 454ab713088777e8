//! Exact computational toolkit for curves over small finite fields.
//!
//! Building blocks:
//!
//! - [`ffield`]: arithmetic in F_{p^n}, embeddings, power-residue counts;
//! - [`projective`]: point and line enumeration for P^n(F_q);
//! - [`combinatorics`]: Stirling numbers, falling factorials, and the
//!   cover census with its orbit oracle;
//! - [`covers`]: superelliptic curves y^n = c * prod (x - r_i)^{d_i}, genus
//!   formulas, point counts, and point-count bounds;
//! - [`zeta`]: zeta numerators fitted from point counts;
//! - [`pgl`]: the projective linear group PGL(2, q) and its action on the
//!   projective line;
//! - [`quotients`]: monomial substitutions and quotient invariants of
//!   Fermat-type curves.
//!
//! Everything except the numerical root-magnitude check in [`zeta`] uses
//! exact integer and rational arithmetic.

pub mod combinatorics;
pub mod covers;
pub mod error;
pub mod ffield;
pub mod pgl;
pub mod projective;
pub mod quotients;
pub mod zeta;

pub use error::{Error, Result};
