//! Rational-mass pipeline: identify the division point of the mass
//! relation, substitute the family's exact g2(alpha), g3(alpha) and the
//! relation's right-hand side into the special division polynomial, clear
//! denominators to an integer polynomial in alpha, and select the
//! physical root.
//!
//! Denominators are cleared through the weighted homogeneity
//! P_n(t^2 x; t^4 g2, t^6 g3) = t^(2 deg) P_n(x; g2, g3): one polynomial
//! substitution per family,
//!
//!   tetra (d = alpha^2, t^2 = 12 d):
//!     x -> d - 12, g2 -> 12 d (d + 216), g3 -> 8 d (-d^2 + 540 d + 5832)
//!   octa  (t^2 = 54 a^2 (a+1)^2):
//!     x -> -4a^4 + 10a^3 - 115a^2 + 60a - 3,
//!     g2 -> 12 a (a+1)^4 (16a^3 - 144a^2 + 405a - 324),
//!     g3 -> 8 a^2 (a+1)^6 (64a^4 - 864a^3 + 4374a^2 - 9963a + 8748).

use crate::error::{Error, Result};
use crate::exact::roots::real_roots_in;
use crate::exact::{qq_int, Poly, Q2, Ring, QQ};
use crate::platonic::{mass_relation_residual, Family, PlatonicFamily};
use crate::special::divpoly::division_poly;
use num_bigint::BigInt;
use num_integer::Integer;

/// Maximum division order handled exactly; larger masses fall back to the
/// numeric route.
pub const MAX_DIVISION_ORDER: u32 = 15;

/// The primitive division point hit by the mass relation at rational mass.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DivisionPoint {
    pub group: Family,
    /// Reduced order: the relation argument is 2 varpi1 k1 / n.
    pub n: u32,
    pub k1: u32,
    pub mass_num: i64,
    pub mass_den: i64,
}

/// Reduce the mass-relation argument to a primitive division point.
///
/// tetra: 2 varpi1/(2m+3) = 2 varpi1 q/(2p+3q);
/// octa:  3 varpi1/(m+2)  = 2 varpi1 (3q)/(2(p+2q)).
pub fn division_point(group: Family, mass_num: i64, mass_den: i64) -> Result<DivisionPoint> {
    if mass_den <= 0 || mass_num <= 0 {
        return Err(Error::domain(format!(
            "mass must be a positive rational, got {mass_num}/{mass_den}"
        )));
    }
    let g = mass_num.gcd(&mass_den);
    let (p, q) = (mass_num / g, mass_den / g);
    let (num, den) = match group {
        Family::TetraK3 => (q, 2 * p + 3 * q),
        Family::OctaK4 => (3 * q, 2 * (p + 2 * q)),
    };
    let g = num.gcd(&den);
    Ok(DivisionPoint {
        group,
        n: (den / g) as u32,
        k1: (num / g) as u32,
        mass_num: p,
        mass_den: q,
    })
}

/// Exact integer polynomial in alpha whose real roots in the parameter
/// interval contain the physical shape parameter.
#[derive(Clone, Debug)]
pub struct AlphaPolynomial {
    pub group: Family,
    pub mass_num: i64,
    pub mass_den: i64,
    pub point: DivisionPoint,
    /// Content-free integer coefficients, ascending in alpha.
    pub coefficients: Vec<BigInt>,
}

impl AlphaPolynomial {
    pub fn poly(&self) -> Poly<QQ> {
        Poly::from_integers(&self.coefficients)
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }
}

fn qp(v: &[i64]) -> Poly<QQ> {
    Poly::new(v.iter().map(|&c| qq_int(c)).collect())
}

/// Substitute polynomial arguments into an x-polynomial over Q[g2, g3].
fn substitute(
    pn: &Poly<Q2>,
    x_sub: &Poly<QQ>,
    g2_sub: &Poly<QQ>,
    g3_sub: &Poly<QQ>,
) -> Poly<QQ> {
    // memoized powers
    let max_x = pn.degree().unwrap_or(0);
    let mut max_g2 = 0usize;
    let mut max_g3 = 0usize;
    for c in pn.coeffs() {
        for (&(i, j), _) in c.terms() {
            max_g2 = max_g2.max(i as usize);
            max_g3 = max_g3.max(j as usize);
        }
    }
    let powers = |base: &Poly<QQ>, up_to: usize| -> Vec<Poly<QQ>> {
        let mut v = Vec::with_capacity(up_to + 1);
        v.push(Poly::one());
        for e in 1..=up_to {
            let last = v[e - 1].clone();
            v.push(last.mul(base));
        }
        v
    };
    let xp = powers(x_sub, max_x);
    let g2p = powers(g2_sub, max_g2);
    let g3p = powers(g3_sub, max_g3);
    let mut acc = Poly::zero();
    for (a, c) in pn.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (&(i, j), coeff) in c.terms() {
            let term = xp[a]
                .mul(&g2p[i as usize])
                .mul(&g3p[j as usize])
                .scale(coeff);
            acc = acc.add(&term);
        }
    }
    acc
}

/// Expand a polynomial in d = alpha^2 to a polynomial in alpha.
fn expand_even(p: &Poly<QQ>) -> Poly<QQ> {
    let mut v = Vec::with_capacity(2 * p.coeffs().len());
    for c in p.coeffs() {
        v.push(c.clone());
        v.push(QQ::from_integer(0.into()));
    }
    v.pop();
    Poly::new(v)
}

/// Strip alpha^v and, for the octahedral family, (alpha + 1)^l factors
/// introduced by denominator clearing.
fn strip_trivial_factors(mut p: Poly<QQ>, group: Family) -> Poly<QQ> {
    let mut low = 0usize;
    for c in p.coeffs() {
        if c == &QQ::from_integer(0.into()) {
            low += 1;
        } else {
            break;
        }
    }
    if low > 0 {
        p = Poly::new(p.coeffs()[low..].to_vec());
    }
    if group == Family::OctaK4 {
        let ap1 = qp(&[1, 1]);
        loop {
            let (q, r) = p.divrem(&ap1);
            if r.is_zero() && q.degree().is_some() {
                p = q;
            } else {
                break;
            }
        }
    }
    p
}

/// The cleared integer polynomial for the given rational mass.
pub fn alpha_polynomial(group: Family, mass_num: i64, mass_den: i64) -> Result<AlphaPolynomial> {
    let point = division_point(group, mass_num, mass_den)?;
    if point.n > MAX_DIVISION_ORDER {
        return Err(Error::resource(format!(
            "mass {}/{} needs division order n = {}, beyond the exact budget {}; \
             use the numeric mass relation instead",
            point.mass_num, point.mass_den, point.n, MAX_DIVISION_ORDER
        )));
    }
    let pn = division_poly(point.n)?;
    let in_alpha = match group {
        Family::TetraK3 => {
            let x_sub = qp(&[-12, 1]);
            let g2_sub = qp(&[0, 2592, 12]); // 12 d (d + 216)
            let g3_sub = qp(&[0, 46656, 4320, -8]); // 8 d (-d^2 + 540 d + 5832)
            let in_d = substitute(&pn, &x_sub, &g2_sub, &g3_sub);
            expand_even(&in_d)
        }
        Family::OctaK4 => {
            let x_sub = qp(&[-3, 60, -115, 10, -4]);
            let g2_sub = qp(&[0, 12])
                .mul(&qp(&[1, 1]).pow(4))
                .mul(&qp(&[-324, 405, -144, 16]));
            let g3_sub = qp(&[0, 0, 8])
                .mul(&qp(&[1, 1]).pow(6))
                .mul(&qp(&[8748, -9963, 4374, -864, 64]));
            substitute(&pn, &x_sub, &g2_sub, &g3_sub)
        }
    };
    let stripped = strip_trivial_factors(in_alpha, group);
    let coefficients = stripped.primitive_integer();
    if coefficients.len() < 2 {
        return Err(Error::integrity(
            "division pipeline produced a constant polynomial".to_string(),
        ));
    }
    Ok(AlphaPolynomial {
        group,
        mass_num: point.mass_num,
        mass_den: point.mass_den,
        point,
        coefficients,
    })
}

/// The selected physical root together with its mass-relation residual.
#[derive(Clone, Debug)]
pub struct RationalMassRoot {
    pub alpha: f64,
    pub residual: f64,
    pub polynomial: AlphaPolynomial,
    /// All real roots found in the parameter interval.
    pub candidates: Vec<f64>,
}

/// Isolate the real roots of the alpha-polynomial in the parameter
/// interval and select the one satisfying the mass relation.
pub fn alpha_for_rational_mass(
    group: Family,
    mass_num: i64,
    mass_den: i64,
) -> Result<RationalMassRoot> {
    let polynomial = alpha_polynomial(group, mass_num, mass_den)?;
    let m = mass_num as f64 / mass_den as f64;
    let hi = group.alpha_max();
    let poly = polynomial.poly();
    let candidates = real_roots_in(&poly, 1e-9, hi * (1.0 + 1e-12), 4096);
    let mut best: Option<(f64, f64)> = None;
    for &a in &candidates {
        let family = match PlatonicFamily::new(group, a) {
            Ok(f) => f,
            Err(_) => continue,
        };
        if let Ok(r) = mass_relation_residual(&family, m) {
            let r = r.abs();
            if best.map_or(true, |(_, rb)| r < rb) {
                best = Some((a, r));
            }
        }
    }
    let (alpha, residual) = best.ok_or_else(|| {
        Error::integrity("no real root of the division polynomial lies in range".to_string())
    })?;
    if residual > 1e-8 * (1.0 + m) {
        return Err(Error::integrity(format!(
            "division-pipeline root {alpha} has mass-relation residual {residual:e}"
        )));
    }
    Ok(RationalMassRoot {
        alpha,
        residual,
        polynomial,
        candidates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::platonic::quotient_invariants;
    use crate::special::divpoly::eval_poly_numeric;
    use crate::special::weierstrass::half_periods;
    use num_complex::Complex64;

    #[test]
    fn division_points() {
        let d = division_point(Family::TetraK3, 1, 3).unwrap();
        assert_eq!((d.n, d.k1), (11, 3));
        let d = division_point(Family::TetraK3, 1, 2).unwrap();
        assert_eq!((d.n, d.k1), (4, 1));
        let d = division_point(Family::OctaK4, 1, 2).unwrap();
        assert_eq!((d.n, d.k1), (5, 3));
        let d = division_point(Family::OctaK4, 1, 1).unwrap();
        assert_eq!((d.n, d.k1), (2, 1));
        assert_eq!(d.n.gcd(&d.k1), 1);
        assert!(division_point(Family::TetraK3, -1, 3).is_err());
        // budget error names the required order
        let err = alpha_polynomial(Family::TetraK3, 10, 7).unwrap_err();
        assert!(err.to_string().contains("n = 41"));
    }

    #[test]
    fn tetra_half_masses_divisibility() {
        // m = 1/2 (n = 4): 3 a^2 - 1 divides
        let p = alpha_polynomial(Family::TetraK3, 1, 2).unwrap();
        assert!(qp(&[-1, 0, 3]).divides(&p.poly()));
        // m = 1 (n = 5): a^2 - 4a + 1 divides... the tetra polynomial is
        // even in alpha, so the even minimal polynomial of 2 - sqrt(3)
        // over the even subring is a^4 - 14 a^2 + 1.
        let p = alpha_polynomial(Family::TetraK3, 1, 1).unwrap();
        assert!(qp(&[1, 0, -14, 0, 1]).divides(&p.poly()));
        // m = 3/2 (n = 6): a^4 - 46 a^2 + 1 divides
        let p = alpha_polynomial(Family::TetraK3, 3, 2).unwrap();
        assert!(qp(&[1, 0, -46, 0, 1]).divides(&p.poly()));
        // evenness
        for poly in [&p] {
            for (i, c) in poly.coefficients.iter().enumerate() {
                if i % 2 == 1 {
                    assert_eq!(c, &BigInt::from(0));
                }
            }
        }
    }

    #[test]
    fn octa_anchors() {
        use num_traits::Zero;
        // m = 1/2 (n = 5): root 1/3
        let p = alpha_polynomial(Family::OctaK4, 1, 2).unwrap();
        assert!(p.poly().eval(&crate::exact::qq(1, 3)).is_zero());
        // m = 1 (n = 2, two-division cubic): root 1/7
        let p = alpha_polynomial(Family::OctaK4, 1, 1).unwrap();
        assert!(p.poly().eval(&crate::exact::qq(1, 7)).is_zero());
        let r = alpha_for_rational_mass(Family::OctaK4, 1, 1).unwrap();
        assert!((r.alpha - 1.0 / 7.0).abs() < 1e-10);
        // m = 3/2 (n = 7): a^2 - 14a + 1 divides (roots 7 +- 4 sqrt(3))
        let p = alpha_polynomial(Family::OctaK4, 3, 2).unwrap();
        assert!(qp(&[1, -14, 1]).divides(&p.poly()));
    }

    #[test]
    fn selected_roots_match_closed_forms() {
        let r = alpha_for_rational_mass(Family::TetraK3, 1, 2).unwrap();
        assert!((r.alpha - 1.0 / 3.0f64.sqrt()).abs() < 1e-10);
        let r = alpha_for_rational_mass(Family::TetraK3, 1, 1).unwrap();
        assert!((r.alpha - (2.0 - 3.0f64.sqrt())).abs() < 1e-10);
        let r = alpha_for_rational_mass(Family::OctaK4, 1, 2).unwrap();
        assert!((r.alpha - 1.0 / 3.0).abs() < 1e-10);
    }

    #[test]
    fn division_value_is_hit() {
        // P_n evaluated at p(2 varpi1 k1 / n) for the solved alpha is tiny
        // relative to the term magnitude.
        let r = alpha_for_rational_mass(Family::TetraK3, 1, 2).unwrap();
        let family = PlatonicFamily::new(Family::TetraK3, r.alpha).unwrap();
        let inv = quotient_invariants(&family).unwrap();
        let hp = half_periods(&inv).unwrap();
        let point = r.polynomial.point;
        let u = 2.0 * hp.varpi1 * point.k1 as f64 / point.n as f64;
        let x = crate::special::weierstrass::weierstrass_p(u, &inv).unwrap();
        let pn = division_poly(point.n).unwrap();
        let (v, mag) = eval_poly_numeric(&pn, x, inv.g2(), inv.g3());
        assert!(v.norm() <= 1e-6 * mag.max(1.0));
        let _ = Complex64::new(0.0, 0.0);
    }
}
