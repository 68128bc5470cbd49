//! Exact computational kernel for classifying and verifying abelian
//! monogenic trinomials `x^(2n) + a x^n + b`.
//!
//! The crate is organized in layers:
//!
//! - [`integers`] — arbitrary-precision factorization, squarefree tests,
//!   radicals, nonnegative residues.
//! - [`poly`] — dense exact polynomials over `Z` and `Q`: arithmetic,
//!   power composition, resultants, discriminants, cyclotomics.
//! - [`modp`] — complete factorization over prime fields `F_p`.
//! - [`zfactor`] — factorization and irreducibility over `Z` (Hensel lifting
//!   plus subset recombination).
//! - [`monogenic`] — trinomial invariants, the closed-form discriminant,
//!   Dedekind's index criterion, the monogenicity oracle, and the
//!   power-compositional reduction test.
//! - [`galois`] — an exact, certificate-producing decision procedure for
//!   "is the Galois group abelian", with group structure extraction.
//! - [`classify`] — the classification of abelian monogenic trinomials as
//!   pure integer predicates.
//! - [`harness`] — the exhaustive search harness comparing the classifier
//!   against the oracles, with reproducible report output.
//!
//! Everything is exact (no floating point) and deterministic: randomized
//! subroutines consume explicit seeds and canonicalize their output.

pub mod classify;
pub mod error;
pub mod galois;
pub mod group;
pub mod harness;
pub mod integers;
pub mod modp;
pub mod monogenic;
pub mod poly;
pub mod zfactor;

pub use error::{Error, Result};
pub use poly::{IntPoly, RatPoly};
