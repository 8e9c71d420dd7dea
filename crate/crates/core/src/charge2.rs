//! Spectral curves of centred hyperbolic 2-monopoles.
//!
//! The standard form is
//!
//!   kappa sn^2(rho) (w^2 z^2 + 1) + 2 cn(rho) dn(rho) w z - (w^2 + z^2) = 0,
//!   rho = K(kappa)/(m+1),
//!
//! with boundary cases (kappa -> 0 axial, kappa -> 1 infinite separation,
//! m -> 0 nullaron) emitted as closed forms.  The derived parameter chain
//! (m, kappa) -> rho -> (u, v, lambda, Lambda^2, alpha, beta) and the
//! reciprocity integrals I1, I2 certify triviality of the monopole line
//! bundle on the curve.

use crate::curve::BidegreeCurve;
use crate::error::{Error, Result};
use crate::quad::tanh_sinh;
use crate::special::elliptic::{complete_k, incomplete_f, jacobi_sncndn};
use num_complex::Complex64;

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// The star at (x1, x2, x3): the (1,1) curve of all oriented geodesics
/// through that point of hyperbolic space,
/// (x1 - i x2) w z - (x1^2 + x2^2 + x3^2) w + z - (x1 + i x2) = 0.
pub fn star_line(x1: f64, x2: f64, x3: f64) -> Result<BidegreeCurve> {
    if !(x3 > 0.0) {
        return Err(Error::domain(format!("star requires x3 > 0, got {x3}")));
    }
    let mut m = BidegreeCurve::zero(1);
    m.set(1, 1, Complex64::new(x1, -x2));
    m.set(1, 0, re(-(x1 * x1 + x2 * x2 + x3 * x3)));
    m.set(0, 1, re(1.0));
    m.set(0, 0, Complex64::new(-x1, -x2));
    Ok(m)
}

fn check_mass_kappa(m: f64, kappa: f64) -> Result<()> {
    if !(m >= 0.0) || !m.is_finite() {
        return Err(Error::domain(format!("mass must be >= 0, got {m}")));
    }
    if !(0.0..1.0).contains(&kappa) {
        return Err(Error::domain(format!(
            "kappa must satisfy 0 <= kappa < 1, got {kappa}"
        )));
    }
    Ok(())
}

/// Charge-2 spectral curve of mass m and separation parameter kappa.
pub fn curve_from_mass(m: f64, kappa: f64) -> Result<BidegreeCurve> {
    check_mass_kappa(m, kappa)?;
    if m == 0.0 {
        return limit_nullaron(kappa);
    }
    if kappa == 0.0 {
        return limit_axial(m);
    }
    let k = complete_k(kappa)?;
    let rho = k / (m + 1.0);
    let jv = jacobi_sncndn(rho, kappa)?;
    Ok(standard_curve(kappa * jv.sn * jv.sn, 2.0 * jv.cn * jv.dn))
}

/// c22 (w^2 z^2 + 1) + c11 w z - (w^2 + z^2)
fn standard_curve(c22: f64, c11: f64) -> BidegreeCurve {
    let mut m = BidegreeCurve::zero(2);
    m.set(2, 2, re(c22));
    m.set(0, 0, re(c22));
    m.set(1, 1, re(c11));
    m.set(2, 0, re(-1.0));
    m.set(0, 2, re(-1.0));
    m
}

/// Axially symmetric limit kappa -> 0:
/// 2 cos(pi/(2(m+1))) w z - (w^2 + z^2).
pub fn limit_axial(m: f64) -> Result<BidegreeCurve> {
    if !(m >= 0.0) || !m.is_finite() {
        return Err(Error::domain(format!("mass must be >= 0, got {m}")));
    }
    let theta = std::f64::consts::FRAC_PI_2 / (m + 1.0);
    Ok(standard_curve(0.0, 2.0 * theta.cos()))
}

/// Massless limit m -> 0: kappa (w^2 z^2 + 1) - (w^2 + z^2).
pub fn limit_nullaron(kappa: f64) -> Result<BidegreeCurve> {
    if !(0.0..1.0).contains(&kappa) {
        return Err(Error::domain(format!(
            "kappa must satisfy 0 <= kappa < 1, got {kappa}"
        )));
    }
    Ok(standard_curve(kappa, 0.0))
}

/// Infinite-separation limit kappa -> 1: (w^2 - 1)(z^2 - 1).
pub fn limit_separation() -> BidegreeCurve {
    standard_curve(1.0, 0.0)
}

/// The parameter chain of the standard curve.
#[derive(Clone, Copy, Debug)]
pub struct Charge2Derived {
    pub m: f64,
    pub kappa: f64,
    /// rho = K(kappa)/(m+1)
    pub rho: f64,
    pub u: f64,
    pub v: f64,
    /// lambda in (0, 1): the diagonal quartic factors as (z^2 - lambda)(z^2 - 1/lambda).
    pub lambda: f64,
    /// The coefficient Lambda^2 = (u^2 - 2uv + 4)/(2(u - v)) of wz.
    pub lambda_sq: f64,
    pub alpha: f64,
    pub beta: f64,
}

/// Derived parameters (u, v, lambda, Lambda^2, alpha, beta) at (m, kappa).
///
/// alpha = 1/(kappa sn^2(K/(2(m+1)))), u = alpha + 1/alpha, v = kappa + 1/kappa,
/// lambda + 1/lambda = (uv - 4)/(u - v), u - v = alpha beta^2.
pub fn derived_params(m: f64, kappa: f64) -> Result<Charge2Derived> {
    check_mass_kappa(m, kappa)?;
    if kappa == 0.0 {
        return Err(Error::domain(
            "derived parameters need kappa > 0; use the axial limit at kappa = 0".to_string(),
        ));
    }
    let k = complete_k(kappa)?;
    let rho = k / (m + 1.0);
    let half = jacobi_sncndn(0.5 * rho, kappa)?;
    let alpha = 1.0 / (kappa * half.sn * half.sn);
    let u = alpha + 1.0 / alpha;
    let v = kappa + 1.0 / kappa;
    let lam_sum = (u * v - 4.0) / (u - v);
    let lambda = 0.5 * lam_sum - (0.25 * lam_sum * lam_sum - 1.0).sqrt();
    let lambda_sq = (u * u - 2.0 * u * v + 4.0) / (2.0 * (u - v));
    let beta = ((u - v) / alpha).sqrt();
    Ok(Charge2Derived {
        m,
        kappa,
        rho,
        u,
        v,
        lambda,
        lambda_sq,
        alpha,
        beta,
    })
}

/// Reciprocity data certifying triviality of L^{2(m+1)} on the curve.
#[derive(Clone, Copy, Debug)]
pub struct Charge2Verification {
    pub i1: f64,
    pub i2: f64,
    /// F(arcsin(1/sqrt(alpha kappa)), kappa) - K(kappa)/(2(m+1))
    pub mass_residual: f64,
    /// Coefficient of the a-cycle (pure-imaginary period): always 0 here.
    pub ell1: i64,
    /// Coefficient of the b-cycle, recovered from the quadratures.
    pub ell2: i64,
    /// Distance of the recovered ell2 from the nearest integer.
    pub ell2_residual: f64,
}

/// Evaluate the reciprocity integrals by direct quadrature and recover
/// the integer cycle data.
pub fn verify_triviality(m: f64, kappa: f64) -> Result<Charge2Verification> {
    check_mass_kappa(m, kappa)?;
    if kappa == 0.0 {
        return Err(Error::domain("verify_triviality needs kappa > 0".to_string()));
    }
    let d = derived_params(m, kappa)?;
    let (alpha, v) = (d.alpha, d.v);
    // F(t) = 4 alpha (t^4 - v t^2 + 1), roots +-sqrt(kappa), +-1/sqrt(kappa)
    let f = move |t: f64| 4.0 * alpha * (t.powi(2).powi(2) - v * t * t + 1.0);
    let sk = kappa.sqrt();
    let i1 = tanh_sinh(|t: f64| 1.0 / f(t).sqrt(), -sk, sk, 1e-13)?;
    let i2 = tanh_sinh(|t: f64| 1.0 / f(t).sqrt(), 1.0 / sk, alpha.sqrt(), 1e-13)?;
    let k = complete_k(kappa)?;
    let phi = (1.0 / (alpha * kappa).sqrt()).asin();
    let mass_residual = incomplete_f(phi, kappa)? - k / (2.0 * (m + 1.0));
    // real part of the reciprocity relation: ell2 (-2 I1) = 4(m+1)(I1 - 2 I2)
    let ell2_f = -2.0 * (m + 1.0) * (i1 - 2.0 * i2) / i1;
    let ell2 = ell2_f.round();
    Ok(Charge2Verification {
        i1,
        i2,
        mass_residual,
        ell1: 0,
        ell2: ell2 as i64,
        ell2_residual: (ell2_f - ell2).abs(),
    })
}

/// Euclidean limit of the charge-2 family: the curve
/// eta^2 + c4 zeta^4 + c2 zeta^2 + c0 = 0 in T P^1, together with the
/// Landen-matched standard parametrization.
#[derive(Clone, Copy, Debug)]
pub struct EuclideanLimitCharge2 {
    /// [c4, c2, c0] of eta^2 - K(kappa)^2 (zeta^2 - kappa)(kappa zeta^2 - 1).
    pub quartic: [f64; 3],
    /// Standard modulus k = 2 sqrt(kappa) / (1 + kappa).
    pub k: f64,
    /// The same coefficients computed from the standard form with K(k).
    pub standard_quartic: [f64; 3],
    /// Largest coefficient deviation between the two forms.
    pub max_deviation: f64,
}

pub fn euclid_limit_charge2(kappa: f64) -> Result<EuclideanLimitCharge2> {
    if !(0.0 < kappa && kappa < 1.0) {
        return Err(Error::domain(format!(
            "euclidean limit needs 0 < kappa < 1, got {kappa}"
        )));
    }
    let kk = complete_k(kappa)?;
    let k2 = kk * kk;
    let quartic = [-k2 * kappa, k2 * (1.0 + kappa * kappa), -k2 * kappa];
    let k = 2.0 * kappa.sqrt() / (1.0 + kappa);
    let kk_std = complete_k(k)?;
    let m2 = kk_std * kk_std / 4.0;
    let standard_quartic = [
        -m2 * k * k,
        m2 * 2.0 * (2.0 - k * k),
        -m2 * k * k,
    ];
    let max_deviation = quartic
        .iter()
        .zip(standard_quartic.iter())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    Ok(EuclideanLimitCharge2 {
        quartic,
        k,
        standard_quartic,
        max_deviation,
    })
}

/// Spectral curve of a massless charge-k monopole from a degree-k
/// rational map R = numer/denom (ascending coefficients, length k+1).
///
/// The curve of hat(R(w)) = R(hat(z)) clears to
///   sum_{i,j} (a_i conj(a_j) + b_i conj(b_j)) (-1)^(k+j) w^i z^(k-j) = 0.
pub fn nullaron_from_rational_map(
    numer: &[Complex64],
    denom: &[Complex64],
) -> Result<BidegreeCurve> {
    if numer.len() != denom.len() || numer.is_empty() {
        return Err(Error::domain(
            "numerator and denominator need equal length k+1".to_string(),
        ));
    }
    let k = numer.len() - 1;
    let top = numer[k].norm().max(denom[k].norm());
    let scale = numer
        .iter()
        .chain(denom.iter())
        .map(|c| c.norm())
        .fold(0.0, f64::max);
    if top <= 1e-14 * scale {
        return Err(Error::domain("rational map has degree below k".to_string()));
    }
    let res = resultant(numer, denom);
    if res.norm() <= 1e-12 * scale.powi(2 * k as i32) {
        return Err(Error::domain(
            "degenerate rational map: numerator and denominator share a root".to_string(),
        ));
    }
    let mut m = BidegreeCurve::zero(k);
    for i in 0..=k {
        for j in 0..=k {
            let sign = if (k + j) % 2 == 0 { 1.0 } else { -1.0 };
            let val = sign * (numer[i] * numer[j].conj() + denom[i] * denom[j].conj());
            let prev = m.get(i, k - j);
            m.set(i, k - j, prev + val);
        }
    }
    Ok(m.normalized_by_largest())
}

/// Sylvester resultant of two degree-n coefficient slices.
fn resultant(p: &[Complex64], q: &[Complex64]) -> Complex64 {
    let n = p.len() - 1;
    let dim = 2 * n;
    let mut m = vec![Complex64::new(0.0, 0.0); dim * dim];
    for row in 0..n {
        for (col, c) in p.iter().rev().enumerate() {
            m[row * dim + row + col] = *c;
        }
    }
    for row in 0..n {
        for (col, c) in q.iter().rev().enumerate() {
            m[(n + row) * dim + row + col] = *c;
        }
    }
    // LU determinant
    let mut det = Complex64::new(1.0, 0.0);
    for c in 0..dim {
        let mut piv = c;
        for r in (c + 1)..dim {
            if m[r * dim + c].norm() > m[piv * dim + c].norm() {
                piv = r;
            }
        }
        if m[piv * dim + c].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if piv != c {
            for j in 0..dim {
                m.swap(c * dim + j, piv * dim + j);
            }
            det = -det;
        }
        let pv = m[c * dim + c];
        det *= pv;
        for r in (c + 1)..dim {
            let f = m[r * dim + c] / pv;
            for j in c..dim {
                let v = m[c * dim + j];
                m[r * dim + j] -= f * v;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn star_examples() {
        // (0,0,1): z - w = 0 (the diagonal), up to sign
        let s = star_line(0.0, 0.0, 1.0).unwrap();
        assert!((s.get(0, 1) - c(1.0, 0.0)).norm() < 1e-15);
        assert!((s.get(1, 0) + c(1.0, 0.0)).norm() < 1e-15);
        assert!(s.get(1, 1).norm() < 1e-15);
        // (0,0,x3): z = x3^2 w
        let s = star_line(0.0, 0.0, 1.7).unwrap();
        assert!((s.get(1, 0) + c(1.7 * 1.7, 0.0)).norm() < 1e-15);
        // (1,0,1): wz - 2w + z - 1
        let s = star_line(1.0, 0.0, 1.0).unwrap();
        assert!((s.get(1, 1) - c(1.0, 0.0)).norm() < 1e-15);
        assert!((s.get(1, 0) - c(-2.0, 0.0)).norm() < 1e-15);
        assert!((s.get(0, 0) - c(-1.0, 0.0)).norm() < 1e-15);
        assert!(s.reality_defect() < 1e-15);
        assert!(star_line(0.0, 0.0, -1.0).is_err());

        // three geodesics through (1,0,1), constructed independently:
        // vertical line from infinity to 1, the symmetric half-circle
        // through the origin plane, and a half-circle in the x1 = 1 plane.
        let on_star = |w: Complex64, z: Complex64| s.eval(w, z).norm() < 1e-12;
        assert!(on_star(c(0.0, 0.0), c(1.0, 0.0)));
        let r2 = 2.0f64.sqrt();
        assert!(on_star(c(1.0 / r2, 0.0), c(r2, 0.0)));
        let a = c(1.0, 1.0 - r2); // start point; w = -1/conj(a)
        let w = -1.0 / a.conj();
        let z = c(1.0, 1.0 + r2);
        assert!(on_star(w, z));
    }

    #[test]
    fn axial_curve_and_factorization() {
        // m = 1: wz coefficient 2 cos(pi/4) = sqrt(2) against -(w^2+z^2)
        let curve = limit_axial(1.0).unwrap();
        assert!((curve.get(1, 1).re - 2.0f64.sqrt()).abs() < 1e-15);
        for m in [0.0, 0.5, 1.0, 2.5] {
            let curve = limit_axial(m).unwrap();
            let theta = std::f64::consts::FRAC_PI_2 / (m + 1.0);
            // psi = -(w - e^{i theta} z)(w - e^{-i theta} z)
            let e = Complex64::from_polar(1.0, theta);
            let mut prod = BidegreeCurve::zero(2);
            prod.set(2, 0, c(-1.0, 0.0));
            prod.set(1, 1, e + e.conj());
            prod.set(0, 2, -e * e.conj());
            let diff: f64 = (0..3)
                .flat_map(|i| (0..3).map(move |j| (i, j)))
                .map(|(i, j)| (curve.get(i, j) - prod.get(i, j)).norm())
                .fold(0.0, f64::max);
            assert!(diff < 1e-12, "m = {m}");
        }
    }

    #[test]
    fn nullaron_and_separation_limits() {
        let n = limit_nullaron(0.5).unwrap();
        assert!((n.get(2, 2).re - 0.5).abs() < 1e-15);
        assert!((n.get(0, 0).re - 0.5).abs() < 1e-15);
        assert!(n.get(1, 1).norm() < 1e-15);
        // equals curve_from_mass(0, kappa) exactly
        let m0 = curve_from_mass(0.0, 0.5).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(n.get(i, j), m0.get(i, j));
            }
        }
        let s = limit_separation();
        // (w^2 - 1)(z^2 - 1)
        assert!((s.eval(c(1.0, 0.0), c(5.0, 2.0))).norm() < 1e-12);
        assert!((s.eval(c(3.0, 1.0), c(-1.0, 0.0))).norm() < 1e-10);
    }

    #[test]
    fn axial_continuity_in_kappa() {
        for m in [0.3, 1.0, 2.0] {
            let a = limit_axial(m).unwrap();
            let b = curve_from_mass(m, 1e-7).unwrap();
            let diff: f64 = (0..3)
                .flat_map(|i| (0..3).map(move |j| (i, j)))
                .map(|(i, j)| (a.get(i, j) - b.get(i, j)).norm())
                .fold(0.0, f64::max);
            assert!(diff < 1e-6, "m = {m}, diff = {diff}");
        }
    }

    #[test]
    fn curve_from_mass_m1_bisection_form() {
        // kappa (w^2 z^2 + 1) + 2 kappa' sqrt(1+kappa') wz - (1+kappa')(w^2+z^2)
        for kappa in [0.3f64, 0.5, 0.6, 0.9] {
            let kp = (1.0 - kappa * kappa).sqrt();
            let curve = curve_from_mass(1.0, kappa).unwrap();
            let mut closed = BidegreeCurve::zero(2);
            closed.set(2, 2, re(kappa));
            closed.set(0, 0, re(kappa));
            closed.set(1, 1, re(2.0 * kp * (1.0 + kp).sqrt()));
            closed.set(2, 0, re(-(1.0 + kp)));
            closed.set(0, 2, re(-(1.0 + kp)));
            assert!(curve.projectively_equal(&closed, 1e-12), "kappa = {kappa}");
        }
        // kappa = 0.6 normalized coefficients (1/3, ~1.19257, -1) scaled
        let curve = curve_from_mass(1.0, 0.6).unwrap();
        let c22 = curve.get(2, 2).re / -curve.get(2, 0).re;
        let c11 = curve.get(1, 1).re / -curve.get(2, 0).re;
        assert!((c22 - 1.0 / 3.0).abs() < 1e-12);
        assert!((c11 - 1.1925695879998878).abs() < 1e-10);
    }

    #[test]
    fn derived_params_chain() {
        let d = derived_params(1.0, 0.5).unwrap();
        // alpha(1, 0.5) = 1/(kappa sn^2(K/4)); frozen from the jacobi oracle
        assert!((d.alpha - 12.113600584130245).abs() < 1e-9);
        assert!((d.u - (d.alpha + 1.0 / d.alpha)).abs() < 1e-12);
        assert!((d.v - 2.5).abs() < 1e-15);
        // lambda + 1/lambda = 1 + sqrt(3), Lambda^2 = 3 + sqrt(3) at (1, 1/2)
        assert!((d.lambda + 1.0 / d.lambda - (1.0 + 3.0f64.sqrt())).abs() < 1e-10);
        assert!((d.lambda_sq - (3.0 + 3.0f64.sqrt())).abs() < 1e-9);
        assert!(derived_params(1.0, 0.0).is_err());

        // m -> 0: alpha -> (1 + kappa')/kappa
        let d = derived_params(1e-12, 0.5).unwrap();
        let kp = 0.75f64.sqrt();
        assert!((d.alpha - (1.0 + kp) / 0.5).abs() < 1e-9);
    }

    #[test]
    fn triviality_residuals() {
        for (m, kappa) in [(1.0, 0.5), (0.5, 0.3)] {
            let v = verify_triviality(m, kappa).unwrap();
            assert!(v.mass_residual.abs() < 1e-10, "m={m} kappa={kappa}");
            let d = derived_params(m, kappa).unwrap();
            let closed = (kappa / d.alpha).sqrt() * complete_k(kappa).unwrap();
            assert!((v.i1 - closed).abs() < 1e-10 * closed);
            assert_eq!((v.ell1, v.ell2), (0, -1));
            assert!(v.ell2_residual < 1e-6);
        }
    }

    #[test]
    fn euclidean_limit_forms_agree() {
        let e = euclid_limit_charge2(0.3).unwrap();
        assert!(e.max_deviation < 1e-12);
        let kk = complete_k(0.3).unwrap();
        assert!((e.quartic[0] + kk * kk * 0.3).abs() < 1e-13);
        // branch points of the standard form are +-sqrt(kappa), +-1/sqrt(kappa)
        let (c4, c2, c0) = (e.standard_quartic[0], e.standard_quartic[1], e.standard_quartic[2]);
        let disc = (c2 * c2 - 4.0 * c4 * c0).sqrt();
        let z1 = (-c2 + disc) / (2.0 * c4);
        let z2 = (-c2 - disc) / (2.0 * c4);
        let (lo, hi) = if z1 < z2 { (z1, z2) } else { (z2, z1) };
        assert!((lo - 0.3).abs() < 1e-12 || (hi - 0.3).abs() < 1e-12);
        assert!((lo - 1.0 / 0.3).abs() < 1e-10 || (hi - 1.0 / 0.3).abs() < 1e-10);
    }

    #[test]
    fn nullaron_map_reproduces_standard_curve() {
        let kappa = 0.4;
        let kp = (1.0f64 - kappa * kappa).sqrt();
        // R(z) = kappa' / (z^2 - kappa)
        let curve = nullaron_from_rational_map(
            &[c(kp, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            &[c(-kappa, 0.0), c(0.0, 0.0), c(1.0, 0.0)],
        )
        .unwrap();
        let std = limit_nullaron(kappa).unwrap();
        assert!(curve.projectively_equal(&std, 1e-13));
        assert!(curve.reality_defect() < 1e-13);
        // degenerate map rejected
        assert!(nullaron_from_rational_map(
            &[c(1.0, 0.0), c(1.0, 0.0)],
            &[c(2.0, 0.0), c(2.0, 0.0)],
        )
        .is_err());
    }
}
