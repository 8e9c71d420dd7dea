//! Division polynomials of the Weierstrass curve y^2 = 4x^3 - g2 x - g3,
//! exactly over Q[g2, g3], plus the numeric Hankel-determinant evaluation
//! of psi_n used as an independent oracle.
//!
//! Normalization is the sigma-quotient convention psi_n = sigma(nu)/sigma(u)^{n^2}:
//! psi_1 = 1, psi_2 = -p', psi_n(-u) = (-1)^{n+1} psi_n(u).  Writing
//! psi_n = f_n(p) for odd n and psi_n = -p' h_n(p) for even n, the
//! doubling recurrences close over polynomials in p alone.  The special
//! division polynomials are P_n = f_n/n (odd) and P_n = h_n/(n/2) (even),
//! both monic; their roots are exactly the n-division values of p.

use crate::error::{Error, Result};
use crate::exact::{qq, qq_int, Poly, Q2, Ring, QQ};
use crate::special::weierstrass::{weierstrass_p_derivatives, EllipticInvariants};
use num_complex::Complex64;
use std::collections::HashMap;

type PX = Poly<Q2>;

fn x_poly() -> PX {
    Poly::monomial(Q2::one(), 1)
}

/// 4x^3 - g2 x - g3.
fn curve_poly() -> PX {
    let mut c = Poly::monomial(Q2::constant(qq_int(4)), 3);
    c = c.sub(&Poly::monomial(Q2::g2(), 1));
    c.sub(&Poly::constant(Q2::g3()))
}

struct Tables {
    f: HashMap<u32, PX>, // odd n
    h: HashMap<u32, PX>, // even n
    r2: PX,              // (4x^3 - g2 x - g3)^2
}

impl Tables {
    fn new() -> Self {
        let x = x_poly();
        let mut f = HashMap::new();
        f.insert(0, Poly::zero());
        f.insert(1, Poly::one());
        // psi_3 = 3x^4 - (3/2) g2 x^2 - 3 g3 x - g2^2/16
        let f3 = Poly::monomial(Q2::constant(qq_int(3)), 4)
            .sub(&Poly::monomial(Q2::g2().scale_by(&qq(3, 2)), 2))
            .sub(&Poly::monomial(Q2::g3().scale_by(&qq_int(3)), 1))
            .sub(&Poly::constant(Q2::g2().mul(&Q2::g2()).scale_by(&qq(1, 16))));
        f.insert(3, f3);
        let mut h = HashMap::new();
        h.insert(0, Poly::zero());
        h.insert(2, Poly::one());
        // psi_4 = -p' h_4 with
        // h_4 = 2(x^6 - (5/4)g2 x^4 - 5 g3 x^3 - (5/16)g2^2 x^2
        //          - (1/4) g2 g3 x + g2^3/64 - g3^2/2)
        let g2 = Q2::g2();
        let g3 = Q2::g3();
        let h4 = Poly::monomial(Q2::one(), 6)
            .sub(&Poly::monomial(g2.scale_by(&qq(5, 4)), 4))
            .sub(&Poly::monomial(g3.scale_by(&qq_int(5)), 3))
            .sub(&Poly::monomial(g2.mul(&g2).scale_by(&qq(5, 16)), 2))
            .sub(&Poly::monomial(g2.mul(&g3).scale_by(&qq(1, 4)), 1))
            .add(&Poly::constant(
                g2.mul(&g2).mul(&g2).scale_by(&qq(1, 64)).sub(&g3.mul(&g3).scale_by(&qq(1, 2))),
            ));
        h.insert(4, h4.scale(&Q2::constant(qq_int(2))));
        let r = curve_poly();
        let _ = x;
        Tables {
            f,
            h,
            r2: r.mul(&r),
        }
    }

    fn f(&mut self, n: u32) -> PX {
        debug_assert!(n % 2 == 1 || n == 0);
        if let Some(p) = self.f.get(&n) {
            return p.clone();
        }
        let j = (n - 1) / 2;
        // psi_{2j+1} = psi_{j+2} psi_j^3 - psi_{j-1} psi_{j+1}^3
        let val = if j % 2 == 0 {
            let a = self.h(j + 2);
            let b = self.h(j);
            let c = self.f(j - 1);
            let d = self.f(j + 1);
            self.r2.mul(&a).mul(&b.pow(3)).sub(&c.mul(&d.pow(3)))
        } else {
            let a = self.f(j + 2);
            let b = self.f(j);
            let c = self.h(j - 1);
            let d = self.h(j + 1);
            a.mul(&b.pow(3)).sub(&self.r2.mul(&c).mul(&d.pow(3)))
        };
        self.f.insert(n, val.clone());
        val
    }

    fn h(&mut self, n: u32) -> PX {
        debug_assert!(n % 2 == 0);
        if let Some(p) = self.h.get(&n) {
            return p.clone();
        }
        let j = n / 2;
        // psi_2 psi_{2j} = psi_j (psi_{j+2} psi_{j-1}^2 - psi_{j-2} psi_{j+1}^2)
        let val = if j % 2 == 0 {
            let a = self.h(j);
            let b = self.h(j + 2);
            let c = self.f(j - 1);
            let d = self.h(j - 2);
            let e = self.f(j + 1);
            a.mul(&b.mul(&c.mul(&c)).sub(&d.mul(&e.mul(&e))))
        } else {
            let a = self.f(j);
            let b = self.f(j + 2);
            let c = self.h(j - 1);
            let d = self.f(j - 2);
            let e = self.h(j + 1);
            a.mul(&b.mul(&c.mul(&c)).sub(&d.mul(&e.mul(&e))))
        };
        self.h.insert(n, val.clone());
        val
    }
}

/// The special division polynomial P_n(x; g2, g3), monic, with
/// deg P_n = (n^2-1)/2 for odd n and (n^2-4)/2 for even n >= 4.
///
/// P_2 is special-cased to the monic two-division cubic
/// x^3 - (g2/4) x - g3/4, whose roots are the half-period values
/// e1, e2, e3; the degree-(n^2-4)/2 formula would make it a constant,
/// which is useless to every caller that reaches a two-division point.
pub fn division_poly(n: u32) -> Result<PX> {
    if n < 2 {
        return Err(Error::domain(format!("division_poly requires n >= 2, got {n}")));
    }
    if n == 2 {
        return Ok(Poly::monomial(Q2::one(), 3)
            .sub(&Poly::monomial(Q2::g2().scale_by(&qq(1, 4)), 1))
            .sub(&Poly::constant(Q2::g3().scale_by(&qq(1, 4)))));
    }
    let mut t = Tables::new();
    let p = if n % 2 == 1 {
        t.f(n).scale(&Q2::constant(QQ::new(1.into(), n.into())))
    } else {
        t.h(n).scale(&Q2::constant(QQ::new(1.into(), (n / 2).into())))
    };
    Ok(p)
}

/// Evaluate an exact x-polynomial over Q[g2,g3] at numeric arguments.
/// Returns (value, magnitude) where magnitude accumulates |term| for use
/// as a conditioning scale.
pub fn eval_poly_numeric(p: &PX, x: Complex64, g2: f64, g3: f64) -> (Complex64, f64) {
    let mut acc = Complex64::new(0.0, 0.0);
    let mut mag = 0.0;
    for c in p.coeffs().iter().rev() {
        let (cv, cm) = c.eval_f64(g2, g3);
        acc = acc * x + cv;
        mag = mag * x.norm() + cm;
    }
    (acc, mag)
}

/// psi_n(u) by the Hankel determinant of derivatives of p,
///
///   psi_n = (-1)^(n-1) / (1! 2! ... (n-1)!)^2 * det[ p^(i+j-1) ]_{i,j=1..n-1},
///
/// in the sigma-quotient normalization (so psi_3 = 3 P_3, psi_2 = -p').
pub fn division_psi_numeric(n: u32, u: Complex64, inv: &EllipticInvariants) -> Result<Complex64> {
    if n < 2 {
        return Err(Error::domain(format!(
            "division_psi_numeric requires n >= 2, got {n}"
        )));
    }
    let order = (2 * n - 3) as usize;
    let derivs = weierstrass_p_derivatives(u, inv, order)?;
    let dim = (n - 1) as usize;
    let mut m = vec![Complex64::new(0.0, 0.0); dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            m[i * dim + j] = derivs[i + j + 1];
        }
    }
    let det = complex_det(&mut m, dim);
    let mut prefactor = if n % 2 == 0 { -1.0 } else { 1.0 };
    let mut fact = 1.0f64;
    for j in 1..n as u64 {
        fact *= j as f64;
    }
    prefactor /= fact * fact;
    Ok(prefactor * det)
}

fn complex_det(m: &mut [Complex64], n: usize) -> Complex64 {
    let mut det = Complex64::new(1.0, 0.0);
    for k in 0..n {
        let mut pivot = k;
        for i in (k + 1)..n {
            if m[i * n + k].norm() > m[pivot * n + k].norm() {
                pivot = i;
            }
        }
        if m[pivot * n + k].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot != k {
            for j in 0..n {
                m.swap(k * n + j, pivot * n + j);
            }
            det = -det;
        }
        let p = m[k * n + k];
        det *= p;
        for i in (k + 1)..n {
            let factor = m[i * n + k] / p;
            for j in k..n {
                let v = m[k * n + j];
                m[i * n + j] -= factor * v;
            }
        }
    }
    det
}
