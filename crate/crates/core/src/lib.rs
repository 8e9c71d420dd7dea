//! Spectral curves of hyperbolic SU(2) monopoles.
//!
//! The library constructs explicit spectral curves on P^1 x P^1 for
//! hyperbolic monopoles of charge 2 (the generic centred family), charge 3
//! (tetrahedrally symmetric) and charge 4 (octahedrally symmetric) as
//! functions of the monopole mass, and verifies the identities that tie
//! the curve coefficients to the mass:
//!
//! * charge 2: Jacobi elliptic coefficients with the reciprocity
//!   integrals evaluated by double-exponential quadrature ([`charge2`]);
//! * charges 3 and 4: elliptic-quotient mass relations through the
//!   Weierstrass p-function ([`platonic`]), the exact Cech determinant
//!   criterion at half-integer mass ([`cohomology`]), and the special
//!   division equation at rational mass ([`division`]);
//! * the supporting special functions, exact arithmetic and quadrature
//!   ([`special`], [`exact`], [`quad`]).
//!
//! All operations are pure functions of their inputs and safe to call
//! from multiple threads.  [`verify`] packages the headline claims as an
//! executable acceptance suite.

pub mod charge2;
pub mod cohomology;
pub mod curve;
pub mod division;
pub mod error;
pub mod exact;
pub mod platonic;
pub mod quad;
pub mod special;
pub mod verify;

pub use curve::BidegreeCurve;
pub use error::{Error, Result};
