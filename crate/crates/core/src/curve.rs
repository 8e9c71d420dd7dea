//! Curves of bidegree (k, k) on P^1 x P^1, stored as dense coefficient
//! matrices: `coeff[i][j]` multiplies w^i z^j.
//!
//! The reality structure sigma: (w, z) -> (-1/conj(z), -1/conj(w)) acts on
//! coefficient matrices as the antilinear involution
//! R(M)[i][j] = conj(M[k-j][k-i]) (-1)^(i+j); a curve is real when
//! M = phase * R(M) for one global phase.

use crate::error::{Error, Result};
use num_complex::Complex64;

#[derive(Clone, Debug)]
pub struct BidegreeCurve {
    k: usize,
    coeff: Vec<Complex64>, // row-major (k+1) x (k+1)
}

impl BidegreeCurve {
    pub fn zero(k: usize) -> Self {
        BidegreeCurve {
            k,
            coeff: vec![Complex64::new(0.0, 0.0); (k + 1) * (k + 1)],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Result<Self> {
        let k = rows.len().checked_sub(1).ok_or_else(|| Error::domain("empty matrix"))?;
        if rows.iter().any(|r| r.len() != k + 1) {
            return Err(Error::domain("coefficient matrix must be square".to_string()));
        }
        Ok(BidegreeCurve {
            k,
            coeff: rows.into_iter().flatten().collect(),
        })
    }

    /// The charge k (bidegree of the curve).
    pub fn charge(&self) -> usize {
        self.k
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.coeff[i * (self.k + 1) + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.coeff[i * (self.k + 1) + j] = v;
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.coeff
    }

    pub fn eval(&self, w: Complex64, z: Complex64) -> Complex64 {
        // Horner in w of Horner in z
        let n = self.k + 1;
        let mut acc = Complex64::new(0.0, 0.0);
        for i in (0..n).rev() {
            let mut row = Complex64::new(0.0, 0.0);
            for j in (0..n).rev() {
                row = row * z + self.get(i, j);
            }
            acc = acc * w + row;
        }
        acc
    }

    /// Coefficients (ascending) of psi(z, z), the restriction to the
    /// diagonal; degree at most 2k.
    pub fn diagonal_poly(&self) -> Vec<Complex64> {
        let mut out = vec![Complex64::new(0.0, 0.0); 2 * self.k + 1];
        for i in 0..=self.k {
            for j in 0..=self.k {
                out[i + j] += self.get(i, j);
            }
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.coeff.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Scale so the entry of largest modulus becomes exactly 1
    /// (first such entry in row-major order on ties).
    pub fn normalized_by_largest(&self) -> Self {
        let mut best = 0usize;
        for (idx, c) in self.coeff.iter().enumerate() {
            if c.norm() > self.coeff[best].norm() * (1.0 + 1e-14) {
                best = idx;
            }
        }
        let pivot = self.coeff[best];
        if pivot.norm() == 0.0 {
            return self.clone();
        }
        BidegreeCurve {
            k: self.k,
            coeff: self.coeff.iter().map(|c| c / pivot).collect(),
        }
    }

    /// max |coeff[i][j] - coeff[j][i]|, the sigma_plus defect.
    pub fn sigma_plus_defect(&self) -> f64 {
        let mut d = 0.0f64;
        for i in 0..=self.k {
            for j in 0..i {
                d = d.max((self.get(i, j) - self.get(j, i)).norm());
            }
        }
        d
    }

    fn reality_image(&self) -> Self {
        let mut out = BidegreeCurve::zero(self.k);
        for i in 0..=self.k {
            for j in 0..=self.k {
                let sign = if (i + j) % 2 == 0 { 1.0 } else { -1.0 };
                out.set(i, j, sign * self.get(self.k - j, self.k - i).conj());
            }
        }
        out
    }

    /// Relative defect from sigma-reality, minimized over the global phase.
    pub fn reality_defect(&self) -> f64 {
        let image = self.reality_image();
        let scale = self.max_abs();
        if scale == 0.0 {
            return 0.0;
        }
        // estimate the phase from the largest image entry
        let mut best = 0usize;
        for (idx, c) in image.coeff.iter().enumerate() {
            if c.norm() > image.coeff[best].norm() {
                best = idx;
            }
        }
        if image.coeff[best].norm() == 0.0 {
            return 1.0;
        }
        let phase = self.coeff[best] / image.coeff[best];
        let phase = phase / phase.norm();
        let mut d = 0.0f64;
        for (a, b) in self.coeff.iter().zip(image.coeff.iter()) {
            d = d.max((a - phase * b).norm());
        }
        d / scale
    }

    /// Representative with the reality relation holding entrywise
    /// (global phase absorbed, then symmetrized).
    pub fn reality_normalized(&self) -> Result<Self> {
        if self.reality_defect() > 1e-9 {
            return Err(Error::configuration(
                "curve is not real with respect to sigma".to_string(),
            ));
        }
        let image = self.reality_image();
        let mut best = 0usize;
        for (idx, c) in image.coeff.iter().enumerate() {
            if c.norm() > image.coeff[best].norm() {
                best = idx;
            }
        }
        let phase = self.coeff[best] / image.coeff[best];
        let half = Complex64::from_polar(1.0, -0.5 * phase.arg());
        let rotated = BidegreeCurve {
            k: self.k,
            coeff: self.coeff.iter().map(|c| c * half).collect(),
        };
        let img = rotated.reality_image();
        Ok(BidegreeCurve {
            k: self.k,
            coeff: rotated
                .coeff
                .iter()
                .zip(img.coeff.iter())
                .map(|(a, b)| 0.5 * (a + b))
                .collect(),
        })
    }

    /// Projective equality: curves equal up to one complex scale.
    pub fn projectively_equal(&self, other: &Self, tol: f64) -> bool {
        if self.k != other.k {
            return false;
        }
        let mut best = 0usize;
        for (idx, c) in self.coeff.iter().enumerate() {
            if c.norm() > self.coeff[best].norm() {
                best = idx;
            }
        }
        if self.coeff[best].norm() == 0.0 {
            return other.max_abs() <= tol;
        }
        let ratio = other.coeff[best] / self.coeff[best];
        let scale = other.max_abs().max(self.max_abs() * ratio.norm()).max(1e-300);
        self.coeff
            .iter()
            .zip(other.coeff.iter())
            .all(|(a, b)| (b - ratio * a).norm() <= tol * scale)
    }

    /// All roots in z of psi(w, .) at fixed w (Durand-Kerner iteration on
    /// the actual degree after trimming vanishing top coefficients).
    pub fn roots_in_z(&self, w: Complex64) -> Vec<Complex64> {
        let n = self.k + 1;
        let mut poly: Vec<Complex64> = (0..n)
            .map(|j| {
                let mut acc = Complex64::new(0.0, 0.0);
                for i in (0..n).rev() {
                    acc = acc * w + self.get(i, j);
                }
                acc
            })
            .collect();
        let scale = poly.iter().map(|c| c.norm()).fold(0.0, f64::max);
        while poly.last().map_or(false, |c| c.norm() <= 1e-14 * scale) {
            poly.pop();
        }
        polynomial_roots(&poly)
    }
}

/// Durand-Kerner roots of a dense complex polynomial (ascending
/// coefficients, nonzero leading coefficient).
pub fn polynomial_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let deg = match coeffs.len().checked_sub(1) {
        Some(d) if d > 0 => d,
        _ => return Vec::new(),
    };
    let lead = coeffs[deg];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    let radius = 1.0
        + monic[..deg]
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max);
    let mut roots: Vec<Complex64> = (0..deg)
        .map(|i| Complex64::from_polar(radius.min(2.0), 2.0 * std::f64::consts::PI * (i as f64 + 0.25) / deg as f64))
        .collect();
    let eval = |x: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in monic.iter().rev() {
            acc = acc * x + c;
        }
        acc
    };
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..deg {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..deg {
                if j != i {
                    denom *= roots[i] - roots[j];
                }
            }
            if denom.norm() == 0.0 {
                continue;
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            moved = moved.max(step.norm());
        }
        if moved < 1e-14 * radius {
            break;
        }
    }
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn diagonal_and_eval() {
        // w^2 z^2 + 1 - (w^2 + z^2): nullaron at kappa = 1 scale
        let mut m = BidegreeCurve::zero(2);
        m.set(2, 2, c(1.0, 0.0));
        m.set(0, 0, c(1.0, 0.0));
        m.set(2, 0, c(-1.0, 0.0));
        m.set(0, 2, c(-1.0, 0.0));
        let d = m.diagonal_poly();
        assert_eq!(d.len(), 5);
        assert!((d[4] - c(1.0, 0.0)).norm() < 1e-15);
        assert!((d[2] - c(-2.0, 0.0)).norm() < 1e-15);
        assert!((m.eval(c(1.0, 0.0), c(1.0, 0.0))).norm() < 1e-15);
        assert_eq!(m.sigma_plus_defect(), 0.0);
        assert!(m.reality_defect() < 1e-15);
    }

    #[test]
    fn projective_equality() {
        let mut a = BidegreeCurve::zero(1);
        a.set(0, 1, c(1.0, 0.0));
        a.set(1, 0, c(-2.0, 0.0));
        let mut b = BidegreeCurve::zero(1);
        b.set(0, 1, c(0.0, 3.0));
        b.set(1, 0, c(0.0, -6.0));
        assert!(a.projectively_equal(&b, 1e-12));
        b.set(1, 1, c(0.1, 0.0));
        assert!(!a.projectively_equal(&b, 1e-12));
    }

    #[test]
    fn root_finding() {
        // (z-1)(z-2i) = z^2 - (1+2i) z + 2i
        let roots = polynomial_roots(&[c(0.0, 2.0), c(-1.0, -2.0), c(1.0, 0.0)]);
        assert_eq!(roots.len(), 2);
        let mut ok = [false, false];
        for r in roots {
            if (r - c(1.0, 0.0)).norm() < 1e-10 {
                ok[0] = true;
            }
            if (r - c(0.0, 2.0)).norm() < 1e-10 {
                ok[1] = true;
            }
        }
        assert!(ok[0] && ok[1]);
    }
}
