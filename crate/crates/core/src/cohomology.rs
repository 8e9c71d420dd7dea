//! Multiplication-by-psi matrices between Cech cohomology groups of line
//! bundles on P^1 x P^1, their exact determinants, and the half-integer
//! mass values of alpha that make them degenerate.
//!
//! H^1(P^1, O(-n)) is realised by Laurent monomials w^(-i), 1 <= i <= n-1;
//! products falling outside the window are coboundaries and are dropped.
//! The level-r operator
//!
//!   Psi_r : H^1(Q, O(-2-r-k, r)) -> H^1(Q, O(-2-r, k+r))
//!
//! is square of size (k+r+1)(r+1); its determinant is an exact polynomial
//! in alpha over the Gaussian rationals, computed by fraction-free
//! (Bareiss) elimination.  det Psi_r picks up a new vanishing locus at the
//! mass m = r/2, which is how Table-1 values of alpha arise.

use crate::error::{Error, Result};
use crate::exact::{GaussRational, Poly, Ring, QQ};
use crate::platonic::{alpha_from_mass, ansatz_symbolic, Family};

type GaussPoly = Poly<GaussRational>;

/// The matrix of multiplication by the Ansatz polynomial between Cech
/// bases, entries exact polynomials in alpha.
#[derive(Clone, Debug)]
pub struct CechMatrix {
    pub family: Family,
    pub r: u32,
    /// Codomain basis: (w exponent, z exponent) per row.
    pub rows: Vec<(i32, i32)>,
    /// Domain basis: (w exponent, z exponent) per column.
    pub cols: Vec<(i32, i32)>,
    /// Row-major square matrix.
    pub entries: Vec<GaussPoly>,
}

impl CechMatrix {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &GaussPoly {
        &self.entries[i * self.cols.len() + j]
    }
}

/// Build Psi_r for the family, with symbolic alpha.
pub fn multiplication_matrix(family: Family, r: u32) -> CechMatrix {
    let k = family.charge() as i32;
    let r = r as i32;
    let psi = ansatz_symbolic(family);

    // domain: w^(-i) z^s, 1 <= i <= k+r+1, 0 <= s <= r
    // (columns ordered s ascending, then i descending, which reproduces
    // the printed matrices at r = 0)
    let mut cols = Vec::new();
    for s in 0..=r {
        for i in (1..=k + r + 1).rev() {
            cols.push((-i, s));
        }
    }
    // codomain: w^(-i') z^j, 1 <= i' <= r+1, 0 <= j <= k+r
    let mut rows = Vec::new();
    for ip in 1..=r + 1 {
        for j in 0..=k + r {
            rows.push((-ip, j));
        }
    }
    let n = rows.len();
    debug_assert_eq!(n, cols.len());

    let mut entries = vec![GaussPoly::zero(); n * n];
    for (ci, &(iw, s)) in cols.iter().enumerate() {
        // psi * w^iw z^s = sum_{a,b} psi[a][b] w^(a+iw) z^(b+s)
        for (a, row_of_psi) in psi.iter().enumerate() {
            for (b, coeff) in row_of_psi.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                let we = a as i32 + iw;
                let ze = b as i32 + s;
                if we < -(r + 1) || we > -1 || ze < 0 || ze > k + r {
                    continue; // coboundary
                }
                let ri = rows
                    .iter()
                    .position(|&(x, y)| x == we && y == ze)
                    .expect("row basis covers the window");
                entries[ri * n + ci] = entries[ri * n + ci].add(coeff);
            }
        }
    }
    CechMatrix {
        family,
        r: r as u32,
        rows,
        cols,
        entries,
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn det_poly(m: &CechMatrix) -> GaussPoly {
    bareiss_det(m.entries.clone(), m.dim())
}

fn bareiss_det<R: Ring>(mut m: Vec<R>, n: usize) -> R {
    if n == 0 {
        return R::one();
    }
    let mut sign_flip = false;
    let mut prev = R::one();
    for p in 0..n - 1 {
        if m[p * n + p].is_zero() {
            match (p + 1..n).find(|&r| !m[r * n + p].is_zero()) {
                Some(r) => {
                    for j in 0..n {
                        m.swap(p * n + j, r * n + j);
                    }
                    sign_flip = !sign_flip;
                }
                None => return R::zero(),
            }
        }
        for i in p + 1..n {
            for j in p + 1..n {
                let t = m[i * n + j]
                    .mul(&m[p * n + p])
                    .sub(&m[i * n + p].mul(&m[p * n + j]));
                m[i * n + j] = t.exact_div(&prev);
            }
            m[i * n + p] = R::zero();
        }
        prev = m[p * n + p].clone();
    }
    let det = m[n * n - 1].clone();
    if sign_flip {
        det.neg()
    } else {
        det
    }
}

/// Result of the half-integer mass extraction at level r (mass m = r/2).
#[derive(Clone, Debug)]
pub struct HalfIntegerAlpha {
    pub family: Family,
    pub r: u32,
    /// Squarefree part of det Psi_r with every lower-level factor removed;
    /// the minimal polynomial of alpha(r/2) divides this.
    pub new_factor: Poly<QQ>,
    /// Real roots of the new factor inside the parameter interval.
    pub candidates: Vec<f64>,
    /// The candidate consistent with the numeric mass relation.
    pub alpha: f64,
}

/// Determinant of Psi_r as a rational polynomial (the imaginary parts
/// cancel for both families).
pub fn det_rational(family: Family, r: u32) -> Result<Poly<QQ>> {
    let det = det_poly(&multiplication_matrix(family, r));
    det.into_rational().ok_or_else(|| {
        Error::integrity("det Psi has a nonzero imaginary part".to_string())
    })
}

/// Half-integer mass extraction: the new real vanishing locus of
/// det Psi_r inside the parameter interval, cross-checked against the
/// numeric mass relation at m = r/2.
pub fn half_integer_alpha(family: Family, r: u32) -> Result<HalfIntegerAlpha> {
    if r == 0 {
        return Err(Error::domain("half_integer_alpha requires r >= 1".to_string()));
    }
    if r > 8 {
        return Err(Error::resource(format!(
            "det Psi_{r} exceeds the exact-arithmetic budget (r <= 8)"
        )));
    }
    let mut new_factor = det_rational(family, r)?.squarefree_part();
    for lower in 0..r {
        let prev = det_rational(family, lower)?.squarefree_part();
        loop {
            let g = new_factor.gcd(&prev);
            if g.degree().unwrap_or(0) == 0 {
                break;
            }
            new_factor = new_factor.exact_div_poly(&g);
        }
    }
    let hi = family.alpha_max();
    let candidates =
        crate::exact::roots::real_roots_in(&new_factor, 1e-9, hi * (1.0 + 1e-12), 4096);
    if candidates.is_empty() {
        return Err(Error::integrity(format!(
            "det Psi_{r} has no new real roots in the parameter interval"
        )));
    }
    let numeric = alpha_from_mass(family, r as f64 / 2.0)?;
    let alpha = candidates
        .iter()
        .copied()
        .min_by(|a, b| {
            (a - numeric)
                .abs()
                .partial_cmp(&(b - numeric).abs())
                .unwrap()
        })
        .unwrap();
    if (alpha - numeric).abs() > 1e-8 * (1.0 + numeric) {
        return Err(Error::integrity(format!(
            "no det Psi_{r} root matches the mass relation: nearest {alpha} vs numeric {numeric}"
        )));
    }
    Ok(HalfIntegerAlpha {
        family,
        r,
        new_factor,
        candidates,
        alpha,
    })
}

/// Remainder of `p` modulo `modulus` over Q; zero means every root of the
/// modulus (e.g. the algebraic alpha) is an exact root of p.
pub fn vanishes_mod(p: &Poly<QQ>, modulus: &Poly<QQ>) -> bool {
    p.divrem(modulus).1.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{qq_int, GaussRational};

    fn qp(v: &[i64]) -> Poly<QQ> {
        Poly::new(v.iter().map(|&c| qq_int(c)).collect())
    }

    /// (coefficients ascending) of the expected determinant identities.
    fn expected_det(family: Family, r: u32) -> Poly<QQ> {
        match (family, r) {
            // (3 - a^2)^2
            (Family::TetraK3, 0) => qp(&[3, 0, -1]).pow(2),
            // 4 (1 - 3a^2)^2 (3 - a^2)^2
            (Family::TetraK3, 1) => qp(&[1, 0, -3]).pow(2).mul(&qp(&[3, 0, -1]).pow(2)).scale(&qq_int(4)),
            // 4 (a^2+5)^2 (1-3a^2)^2 (a^2-4a+1)^2 (a^2+4a+1)^2
            (Family::TetraK3, 2) => qp(&[5, 0, 1])
                .pow(2)
                .mul(&qp(&[1, 0, -3]).pow(2))
                .mul(&qp(&[1, -4, 1]).pow(2))
                .mul(&qp(&[1, 4, 1]).pow(2))
                .scale(&qq_int(4)),
            // 96 (1+a)^2 (1-a)^3
            (Family::OctaK4, 0) => qp(&[1, 1]).pow(2).mul(&qp(&[1, -1]).pow(3)).scale(&qq_int(96)),
            // 16 (1+5a)^2 (a+5)^3 (3a-1)^3 (a-1)^4
            (Family::OctaK4, 1) => qp(&[1, 5])
                .pow(2)
                .mul(&qp(&[5, 1]).pow(3))
                .mul(&qp(&[-1, 3]).pow(3))
                .mul(&qp(&[-1, 1]).pow(4))
                .scale(&qq_int(16)),
            _ => unreachable!(),
        }
    }

    fn matches_up_to_sign(det: &Poly<QQ>, target: &Poly<QQ>) -> bool {
        det == target || det == &target.neg()
    }

    #[test]
    fn matrix_shapes_and_entries() {
        let m = multiplication_matrix(Family::TetraK3, 0);
        assert_eq!(m.dim(), 4);
        // entry multiset {+-1, +-3, +-i a} twice each
        let mut ones = 0;
        let mut threes = 0;
        let mut ias = 0;
        for e in &m.entries {
            if e.is_zero() {
                continue;
            }
            match e.degree() {
                Some(0) => {
                    let c = e.coeff(0);
                    let mag = c.norm_sq();
                    if mag == qq_int(1) * qq_int(1) {
                        ones += 1;
                    } else {
                        assert_eq!(mag, qq_int(9));
                        threes += 1;
                    }
                }
                Some(1) => {
                    let c = e.coeff(1);
                    assert!(c.re.is_zero());
                    ias += 1;
                }
                _ => panic!("unexpected entry {e:?}"),
            }
        }
        assert_eq!((ones, threes, ias), (2, 2, 4));

        let m = multiplication_matrix(Family::OctaK4, 0);
        assert_eq!(m.dim(), 5);
        // diagonal multiset {1, 4-4a, 6+6a, 4-4a, 1} up to sign, anti-corner alpha
        let diag: Vec<_> = (0..5).map(|i| m.entry(i, i).clone()).collect();
        assert_eq!(diag[0], Poly::constant(GaussRational::from_int(1)));
        assert_eq!(diag[4], Poly::constant(GaussRational::from_int(1)));
        assert_eq!(diag[2].coeff(0), GaussRational::from_int(6));
        assert_eq!(diag[2].coeff(1), GaussRational::from_int(6));
        for i in [1usize, 3] {
            let e = &diag[i];
            let c0 = e.coeff(0);
            let c1 = e.coeff(1);
            assert_eq!((&c0.re * &c0.re).to_string(), "16");
            assert_eq!((&c1.re * &c1.re).to_string(), "16");
        }
        assert_eq!(m.entry(0, 4), &Poly::monomial(GaussRational::from_int(1), 1));
        assert_eq!(m.entry(4, 0), &Poly::monomial(GaussRational::from_int(1), 1));

        let m = multiplication_matrix(Family::TetraK3, 1);
        assert_eq!(m.dim(), 10);
    }

    #[test]
    fn determinant_identities() {
        for (family, r) in [
            (Family::TetraK3, 0),
            (Family::TetraK3, 1),
            (Family::TetraK3, 2),
            (Family::OctaK4, 0),
            (Family::OctaK4, 1),
        ] {
            let det = det_rational(family, r).unwrap();
            let target = expected_det(family, r);
            assert!(
                matches_up_to_sign(&det, &target),
                "{family:?} r={r}: got {}",
                det.to_string_in("a")
            );
        }
    }

    #[test]
    fn determinant_independent_of_basis_order() {
        let m = multiplication_matrix(Family::TetraK3, 1);
        let d1 = det_poly(&m);
        // permute rows and columns with a seeded shuffle
        let n = m.dim();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = 0xdeadbeefu64;
        for i in (1..n).rev() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            let j = (state % (i as u64 + 1)) as usize;
            perm.swap(i, j);
        }
        let mut entries = vec![GaussPoly::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                entries[i * n + j] = m.entry(perm[i], perm[j]).clone();
            }
        }
        let d2 = bareiss_det(entries, n);
        // row and column permuted by the same permutation: same sign
        assert_eq!(d1, d2);
    }

    #[test]
    fn half_integer_values() {
        // r = 1: alpha = 1/sqrt(3), new factor 3a^2 - 1 exactly
        let h = half_integer_alpha(Family::TetraK3, 1).unwrap();
        assert!((h.alpha - 1.0 / 3.0f64.sqrt()).abs() < 1e-9);
        let ints = h.new_factor.primitive_integer();
        let want = qp(&[-1, 0, 3]).primitive_integer();
        assert_eq!(ints, want);

        // r = 2: alpha = 2 - sqrt(3); (a^2 - 4a + 1) divides the new factor
        let h = half_integer_alpha(Family::TetraK3, 2).unwrap();
        assert!((h.alpha - (2.0 - 3.0f64.sqrt())).abs() < 1e-9);
        assert!(qp(&[1, -4, 1]).divides(&h.new_factor));

        // octa r = 1: alpha = 1/3
        let h = half_integer_alpha(Family::OctaK4, 1).unwrap();
        assert!((h.alpha - 1.0 / 3.0).abs() < 1e-9);
    }

    #[test]
    fn kernel_at_algebraic_root() {
        // det Psi_1 vanishes identically modulo the minimal polynomial of
        // alpha(1/2): exact kernel at the algebraic number.
        let det = det_rational(Family::TetraK3, 1).unwrap();
        assert!(vanishes_mod(&det, &qp(&[-1, 0, 3])));
        let det = det_rational(Family::OctaK4, 1).unwrap();
        assert!(vanishes_mod(&det, &qp(&[-1, 3])));
        // and does not vanish at the wrong algebraic number
        assert!(!vanishes_mod(&det, &qp(&[-1, 2])));
    }
}
