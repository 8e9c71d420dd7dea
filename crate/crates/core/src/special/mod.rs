//! Special functions: elliptic integrals, Jacobi elliptic functions, the
//! Weierstrass p-function with its periods, the Gamma function, and
//! division polynomials.

pub mod divpoly;
pub mod elliptic;
pub mod gamma;
pub mod weierstrass;

pub use divpoly::{division_poly, division_psi_numeric, eval_poly_numeric};
pub use elliptic::{complete_k, incomplete_f, jacobi_sncndn, landen_descend, JacobiValues};
pub use gamma::gamma;
pub use weierstrass::{
    cubic_roots, half_periods, weierstrass_p, weierstrass_p_and_prime,
    weierstrass_p_derivatives, weierstrass_p_prime, CubicConfiguration, CubicRoots,
    EllipticInvariants, HalfPeriods,
};
