//! Legendre elliptic integrals of the first kind and Jacobi elliptic
//! functions.
//!
//! K(kappa) is computed by the arithmetic-geometric mean, F(phi, kappa) by
//! Carlson's symmetric R_F, and sn/cn/dn by the descending Landen (Gauss)
//! transformation iterated down to the circular limit.  Conventions follow
//! Byrd & Friedman: the second argument is the modulus kappa, not kappa^2.

use crate::error::{Error, Result};

fn check_modulus(kappa: f64) -> Result<()> {
    if !(0.0..1.0).contains(&kappa) {
        return Err(Error::domain(format!(
            "modulus must satisfy 0 <= kappa < 1, got {kappa}"
        )));
    }
    Ok(())
}

/// Complete elliptic integral of the first kind, K(kappa), by AGM.
pub fn complete_k(kappa: f64) -> Result<f64> {
    check_modulus(kappa)?;
    let mut a = 1.0f64;
    let mut b = (1.0 - kappa * kappa).sqrt();
    for _ in 0..64 {
        if (a - b).abs() <= 2.0 * f64::EPSILON * a {
            break;
        }
        let an = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = an;
    }
    Ok(std::f64::consts::FRAC_PI_2 / a)
}

/// Carlson's symmetric integral R_F(x, y, z) by the duplication theorem.
fn carlson_rf(mut x: f64, mut y: f64, mut z: f64) -> f64 {
    // Carlson 1995; relative error below 1e-15 at this tolerance.
    for _ in 0..255 {
        let lam = x.sqrt() * y.sqrt() + y.sqrt() * z.sqrt() + z.sqrt() * x.sqrt();
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        let mu = (x + y + z) / 3.0;
        let dev = [(x - mu) / mu, (y - mu) / mu, (z - mu) / mu];
        if dev.iter().all(|d| d.abs() < 1e-4) {
            let e2 = dev[0] * dev[1] + dev[1] * dev[2] + dev[2] * dev[0];
            let e3 = dev[0] * dev[1] * dev[2];
            let s = 1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0;
            return s / mu.sqrt();
        }
    }
    f64::NAN
}

/// Incomplete elliptic integral of the first kind F(phi, kappa) for
/// 0 <= phi <= pi/2.
pub fn incomplete_f(phi: f64, kappa: f64) -> Result<f64> {
    check_modulus(kappa)?;
    if !(0.0..=std::f64::consts::FRAC_PI_2 + 1e-15).contains(&phi) {
        return Err(Error::domain(format!(
            "amplitude must satisfy 0 <= phi <= pi/2, got {phi}"
        )));
    }
    if phi == 0.0 {
        return Ok(0.0);
    }
    let s = phi.sin();
    let c = phi.cos();
    Ok(s * carlson_rf(c * c, 1.0 - kappa * kappa * s * s, 1.0))
}

/// Values of the three Jacobi elliptic functions at one argument.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JacobiValues {
    pub sn: f64,
    pub cn: f64,
    pub dn: f64,
}

/// sn, cn, dn of (u, kappa) by descending Landen recursion.
///
/// The modulus sequence k_{i+1} = (1 - k_i')/(1 + k_i') converges
/// quadratically to 0, where the functions are circular; the values are
/// then transformed back up through the Gauss ascent
///   sn = (1+k1) s / (1 + k1 s^2),
///   cn = c d / (1 + k1 s^2),
///   dn = (1 - k1 s^2) / (1 + k1 s^2).
pub fn jacobi_sncndn(u: f64, kappa: f64) -> Result<JacobiValues> {
    check_modulus(kappa)?;
    if !u.is_finite() {
        return Err(Error::domain("jacobi argument must be finite".to_string()));
    }
    let mut moduli = Vec::with_capacity(16);
    let mut k = kappa;
    while k > 1e-16 && moduli.len() < 24 {
        let kp = (1.0 - k * k).sqrt();
        k = (1.0 - kp) / (1.0 + kp);
        moduli.push(k);
    }
    let mut v = u;
    for kk in &moduli {
        v /= 1.0 + kk;
    }
    let (mut s, mut c) = v.sin_cos();
    let mut d = 1.0;
    for kk in moduli.iter().rev() {
        let denom = 1.0 + kk * s * s;
        let sn = (1.0 + kk) * s / denom;
        let cn = c * d / denom;
        let dn = (1.0 - kk * s * s) / denom;
        s = sn;
        c = cn;
        d = dn;
    }
    Ok(JacobiValues { sn: s, cn: c, dn: d })
}

/// Descending Landen modulus: the kappa with k = 2 sqrt(kappa)/(1 + kappa)
/// and 0 < kappa < k, so that K(k) = (1 + kappa) K(kappa).
pub fn landen_descend(k: f64) -> Result<f64> {
    if !(0.0 < k && k < 1.0) {
        return Err(Error::domain(format!(
            "landen_descend needs 0 < k < 1, got {k}"
        )));
    }
    let kp = (1.0 - k * k).sqrt();
    Ok((1.0 - kp) / (1.0 + kp))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::tanh_sinh;
    use std::f64::consts::FRAC_PI_2;

    /// Defining-integral oracle for K.
    fn k_oracle(kappa: f64) -> f64 {
        tanh_sinh(
            |t: f64| 1.0 / (1.0 - (kappa * t.sin()).powi(2)).sqrt(),
            0.0,
            FRAC_PI_2,
            1e-14,
        )
        .unwrap()
    }

    /// Amplitude-ODE oracle: integrate phi' = sqrt(1 - kappa^2 sin^2 phi)
    /// by classical RK4 with a fine fixed step.
    fn jacobi_oracle(u: f64, kappa: f64) -> JacobiValues {
        let f = |phi: f64| (1.0 - (kappa * phi.sin()).powi(2)).sqrt();
        let n = 20_000.max((u.abs() * 4000.0) as usize);
        let h = u / n as f64;
        let mut phi = 0.0;
        for _ in 0..n {
            let k1 = f(phi);
            let k2 = f(phi + 0.5 * h * k1);
            let k3 = f(phi + 0.5 * h * k2);
            let k4 = f(phi + h * k3);
            phi += h * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0;
        }
        JacobiValues {
            sn: phi.sin(),
            cn: phi.cos(),
            dn: f(phi),
        }
    }

    #[test]
    fn complete_k_values() {
        assert_eq!(complete_k(0.0).unwrap(), FRAC_PI_2);
        // Frozen from the quadrature oracle of the defining integral.
        assert!((complete_k(0.5).unwrap() - 1.6857503548125961).abs() < 1e-13);
        for i in 1..=19 {
            let kappa = 0.05 * i as f64;
            let k = complete_k(kappa).unwrap();
            assert!(
                (k - k_oracle(kappa)).abs() <= 1e-12 * k,
                "kappa = {kappa}"
            );
        }
        assert!(complete_k(1.0).is_err());
        assert!(complete_k(-0.1).is_err());
    }

    #[test]
    fn landen_identity() {
        for i in 1..=9 {
            let kappa = 0.1 * i as f64;
            let k = 2.0 * kappa.sqrt() / (1.0 + kappa);
            let lhs = complete_k(k).unwrap();
            let rhs = (1.0 + kappa) * complete_k(kappa).unwrap();
            assert!((lhs - rhs).abs() < 1e-12 * rhs, "kappa = {kappa}");
            assert!((landen_descend(k).unwrap() - kappa).abs() < 1e-14);
        }
        // K(2 sqrt(0.3)/1.3) = 1.3 K(0.3)
        let k = 2.0 * 0.3f64.sqrt() / 1.3;
        assert!(
            (complete_k(k).unwrap() - 1.3 * complete_k(0.3).unwrap()).abs() < 1e-13
        );
        // small-k expansion kappa -> k^2/4
        let k = 1e-3;
        let kap = landen_descend(k).unwrap();
        assert!((kap - k * k / 4.0).abs() < 1e-12 * kap.max(1e-300) + 1e-15);
        assert!((landen_descend(0.8).unwrap() - 0.25).abs() < 1e-15);
    }

    #[test]
    fn incomplete_f_values() {
        for i in 1..=9 {
            let kappa = 0.1 * i as f64;
            assert!(
                (incomplete_f(FRAC_PI_2, kappa).unwrap() - complete_k(kappa).unwrap()).abs()
                    < 1e-13
            );
            assert_eq!(incomplete_f(0.0, kappa).unwrap(), 0.0);
            for j in 1..=4 {
                let phi = FRAC_PI_2 * (j as f64 / 5.0);
                let oracle = tanh_sinh(
                    |t: f64| 1.0 / (1.0 - (kappa * t.sin()).powi(2)).sqrt(),
                    0.0,
                    phi,
                    1e-14,
                )
                .unwrap();
                let v = incomplete_f(phi, kappa).unwrap();
                assert!((v - oracle).abs() <= 1e-12 * oracle, "phi={phi} kappa={kappa}");
            }
        }
        assert!(incomplete_f(2.0, 0.5).is_err());
        assert!(incomplete_f(0.3, 1.5).is_err());
    }

    #[test]
    fn jacobi_special_points() {
        let v = jacobi_sncndn(0.0, 0.7).unwrap();
        assert_eq!((v.sn, v.cn, v.dn), (0.0, 1.0, 1.0));
        for i in 1..=9 {
            let kappa = 0.1 * i as f64;
            let k = complete_k(kappa).unwrap();
            let v = jacobi_sncndn(k, kappa).unwrap();
            assert!((v.sn - 1.0).abs() < 1e-12, "kappa={kappa}");
            assert!(v.cn.abs() < 1e-12);
            assert!((v.dn - (1.0 - kappa * kappa).sqrt()).abs() < 1e-12);
        }
        // bisection value sn^2(K/2) = 1/(1+kappa')
        let kappa = 0.6;
        let kp = 0.8;
        let v = jacobi_sncndn(complete_k(kappa).unwrap() / 2.0, kappa).unwrap();
        assert!((v.sn * v.sn - 1.0 / (1.0 + kp)).abs() < 1e-13);
        let oracle = jacobi_oracle(complete_k(kappa).unwrap() / 2.0, kappa);
        assert!((v.sn - oracle.sn).abs() < 1e-9);
    }

    #[test]
    fn jacobi_identities_grid() {
        for i in 0..=9 {
            let kappa = 0.1 * i as f64;
            for j in -6..=6 {
                let u = 0.7 * j as f64;
                let v = jacobi_sncndn(u, kappa).unwrap();
                assert!((v.sn * v.sn + v.cn * v.cn - 1.0).abs() < 1e-12);
                assert!((v.dn * v.dn + (kappa * v.sn).powi(2) - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn jacobi_vs_ode_oracle() {
        for &(u, kappa) in &[(0.4, 0.3), (1.1, 0.6), (2.3, 0.9), (0.9, 0.05)] {
            let v = jacobi_sncndn(u, kappa).unwrap();
            let o = jacobi_oracle(u, kappa);
            assert!((v.sn - o.sn).abs() < 1e-9, "u={u} kappa={kappa}");
            assert!((v.cn - o.cn).abs() < 1e-9);
            assert!((v.dn - o.dn).abs() < 1e-9);
        }
    }
}
