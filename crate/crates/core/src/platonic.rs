//! Tetrahedral charge-3 and octahedral charge-4 curve families.
//!
//! Each family is a one-parameter pencil of symmetric (k,k) curves whose
//! quotient by the platonic group is an elliptic curve E in Weierstrass
//! form.  The monopole mass is tied to the family parameter alpha through
//! a division-value relation on E:
//!
//!   tetrahedral:  p(2 varpi1/(2m+3)) = 1/12 - 1/alpha^2
//!   octahedral:   p(3 varpi1/(m+2))  = (-4a^4+10a^3-115a^2+60a-3)/(54a^2(a+1)^2)
//!
//! with the invariants g2(alpha), g3(alpha) listed below.  Inverting the
//! p-function along the imaginary period axis reduces both relations to
//! real period integrals, which also recover the cycle integers
//! (ell1, ell2) = (4, -8) and (6, -12).

use crate::curve::BidegreeCurve;
use crate::error::{Error, Result};
use crate::exact::{qq_int, GaussRational, Poly, QQ};
use crate::quad::{exp_sinh, tanh_sinh};
use crate::special::gamma::gamma;
use crate::special::weierstrass::{
    cubic_roots, half_periods, weierstrass_p, CubicConfiguration, EllipticInvariants,
    HalfPeriods,
};
use num_complex::Complex64;
use num_traits::{One, Zero};

/// The platonic rotation groups (klein_form also serves A5, although no
/// A5 curve family is in scope).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlatonicGroup {
    A4,
    S4,
    A5,
}

/// The two in-scope symmetric curve families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    TetraK3,
    OctaK4,
}

impl Family {
    pub fn charge(&self) -> usize {
        match self {
            Family::TetraK3 => 3,
            Family::OctaK4 => 4,
        }
    }

    /// Upper end of the parameter interval (the massless endpoint).
    pub fn alpha_max(&self) -> f64 {
        match self {
            Family::TetraK3 => 3.0f64.sqrt(),
            Family::OctaK4 => 1.0,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::TetraK3 => "tetrahedral k=3",
            Family::OctaK4 => "octahedral k=4",
        }
    }
}

/// A family member: the group together with the shape parameter alpha.
#[derive(Clone, Copy, Debug)]
pub struct PlatonicFamily {
    pub group: Family,
    pub alpha: f64,
}

impl PlatonicFamily {
    pub fn new(group: Family, alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= group.alpha_max() * (1.0 + 1e-12)) {
            return Err(Error::domain(format!(
                "alpha must lie in (0, {:.6}] for the {} family, got {alpha}",
                group.alpha_max(),
                group.name()
            )));
        }
        Ok(PlatonicFamily { group, alpha })
    }
}

/// Klein's invariant binary form of minimal positive degree, as dense
/// coefficients of zeta1^j zeta0^(deg-j), ascending in j.
pub fn klein_form(group: PlatonicGroup) -> Vec<i64> {
    match group {
        // K_e = z0 z1 (z1^4 - z0^4)
        PlatonicGroup::A4 => vec![0, -1, 0, 0, 0, 1, 0],
        // K_f = z1^8 + 14 z0^4 z1^4 + z0^8
        PlatonicGroup::S4 => vec![1, 0, 0, 0, 14, 0, 0, 0, 1],
        // K_v = z0 z1 (z1^10 + 11 z0^5 z1^5 - z0^10)
        PlatonicGroup::A5 => vec![0, -1, 0, 0, 0, 0, 11, 0, 0, 0, 0, 1, 0],
    }
}

/// Exact coefficient matrix of the Ansatz polynomial with symbolic alpha:
/// entry (i, j) is a Gaussian-rational polynomial in alpha multiplying
/// w^i z^j.
pub(crate) fn ansatz_symbolic(family: Family) -> Vec<Vec<Poly<GaussRational>>> {
    let k = family.charge();
    let c = |n: i64| Poly::constant(GaussRational::from_int(n));
    let ia = || Poly::monomial(GaussRational::imaginary(QQ::one()), 1); // i*alpha
    let a = || Poly::monomial(GaussRational::one(), 1); // alpha
    let mut m: Vec<Vec<Poly<GaussRational>>> = vec![vec![Poly::zero(); k + 1]; k + 1];
    match family {
        Family::TetraK3 => {
            // (w - z)^3 + i alpha (w + z)((wz)^2 - 1)
            m[3][0] = c(1);
            m[2][1] = c(-3);
            m[1][2] = c(3);
            m[0][3] = c(-1);
            m[3][2] = ia();
            m[2][3] = ia();
            m[1][0] = ia().neg();
            m[0][1] = ia().neg();
        }
        Family::OctaK4 => {
            // (w - z)^4 + alpha (w^4 z^4 + 6 w^2 z^2 + 4 wz (w^2 + z^2) + 1)
            m[4][0] = c(1);
            m[0][4] = c(1);
            m[3][1] = c(-4).add(&a().scale(&GaussRational::from_int(4)));
            m[1][3] = m[3][1].clone();
            m[2][2] = c(6).add(&a().scale(&GaussRational::from_int(6)));
            m[4][4] = a();
            m[0][0] = a();
        }
    }
    m
}

/// The Ansatz curve.  `beta` extends the octahedral curve into the
/// two-parameter tetrahedrally symmetric (4,4) family; it must vanish for
/// the k=3 family.
pub fn ansatz_curve(family: &PlatonicFamily, beta: f64) -> Result<BidegreeCurve> {
    if beta != 0.0 && family.group != Family::OctaK4 {
        return Err(Error::domain(
            "the two-parameter family exists only at k = 4".to_string(),
        ));
    }
    let sym = ansatz_symbolic(family.group);
    let k = family.group.charge();
    let alpha = QQ::from_float(family.alpha)
        .ok_or_else(|| Error::domain("alpha must be finite".to_string()))?;
    let mut curve = BidegreeCurve::zero(k);
    for (i, row) in sym.iter().enumerate() {
        for (j, p) in row.iter().enumerate() {
            let v = p.eval(&GaussRational::from_rational(alpha.clone()));
            curve.set(
                i,
                j,
                Complex64::new(
                    crate::exact::rational::qq_to_f64(&v.re),
                    crate::exact::rational::qq_to_f64(&v.im),
                ),
            );
        }
    }
    if beta != 0.0 {
        // + i beta (w - z)(w + z)((wz)^2 - 1)
        for (i, j, s) in [(4, 2, 1.0), (0, 2, 1.0), (2, 4, -1.0), (2, 0, -1.0)] {
            let prev = curve.get(i, j);
            curve.set(i, j, prev + Complex64::new(0.0, s * beta));
        }
    }
    Ok(curve)
}

// ---- quotient elliptic data -------------------------------------------

/// Exact tetrahedral invariants as a function of d = alpha^2:
/// g2 = (d + 216)/(12 d), g3 = (-d^2 + 540 d + 5832)/(216 d^2).
pub fn tetra_invariants_exact(d: &QQ) -> Result<(QQ, QQ)> {
    if d.is_zero() {
        return Err(Error::pole("alpha = 0 is a pole of the invariants".to_string()));
    }
    let g2 = (d + qq_int(216)) / (qq_int(12) * d);
    let g3 = (-(d * d) + qq_int(540) * d + qq_int(5832)) / (qq_int(216) * d * d);
    Ok((g2, g3))
}

/// Exact octahedral invariants:
/// g2 = (16 a^3 - 144 a^2 + 405 a - 324)/(243 a^3),
/// g3 = (64 a^4 - 864 a^3 + 4374 a^2 - 9963 a + 8748)/(19683 a^4).
pub fn octa_invariants_exact(a: &QQ) -> Result<(QQ, QQ)> {
    if a.is_zero() {
        return Err(Error::pole("alpha = 0 is a pole of the invariants".to_string()));
    }
    let a2 = a * a;
    let a3 = &a2 * a;
    let a4 = &a3 * a;
    let g2 = (qq_int(16) * &a3 - qq_int(144) * &a2 + qq_int(405) * a - qq_int(324))
        / (qq_int(243) * &a3);
    let g3 = (qq_int(64) * &a4 - qq_int(864) * &a3 + qq_int(4374) * &a2 - qq_int(9963) * a
        + qq_int(8748))
        / (qq_int(19683) * &a4);
    Ok((g2, g3))
}

/// Elliptic invariants of the quotient curve E = Sigma/G.
pub fn quotient_invariants(family: &PlatonicFamily) -> Result<EllipticInvariants> {
    let a = family.alpha;
    let (g2, g3) = match family.group {
        Family::TetraK3 => {
            let d = a * a;
            (
                1.0 / 12.0 + 18.0 / d,
                -1.0 / 216.0 + 2.5 / d + 27.0 / (d * d),
            )
        }
        Family::OctaK4 => (
            16.0 / 243.0 - 16.0 / (27.0 * a) + 5.0 / (3.0 * a * a) - 4.0 / (3.0 * a.powi(3)),
            64.0 / 19683.0 - 32.0 / (729.0 * a) + 2.0 / (9.0 * a * a)
                - 41.0 / (81.0 * a.powi(3))
                + 4.0 / (9.0 * a.powi(4)),
        ),
    };
    EllipticInvariants::new(g2, g3)
}

/// x-coordinate of the common image of the poles of dw/w - dz/z on E.
pub fn pole_x(family: &PlatonicFamily) -> f64 {
    match family.group {
        Family::TetraK3 => 1.0 / 12.0 - 1.0 / (family.alpha * family.alpha),
        Family::OctaK4 => -2.0 / 27.0 - 7.0 / (6.0 * family.alpha),
    }
}

/// Right-hand side of the mass relation (the division value the flow
/// must hit).  For the tetrahedral family this equals pole_x; the
/// octahedral relation carries the duplicated value.
pub fn mass_rhs(family: &PlatonicFamily) -> f64 {
    match family.group {
        Family::TetraK3 => pole_x(family),
        Family::OctaK4 => {
            let a = family.alpha;
            (-4.0 * a.powi(4) + 10.0 * a.powi(3) - 115.0 * a * a + 60.0 * a - 3.0)
                / (54.0 * a * a * (a + 1.0) * (a + 1.0))
        }
    }
}

fn rational_function_pair(family: Family) -> (Poly<QQ>, Poly<QQ>, Poly<QQ>, Poly<QQ>) {
    // returns (A, P, B, Q) with g2 = A/P, g3 = B/Q in the family variable
    // (d = alpha^2 for TetraK3, alpha for OctaK4).
    let p = |v: &[i64]| Poly::new(v.iter().map(|&c| qq_int(c)).collect::<Vec<_>>());
    match family {
        Family::TetraK3 => (
            p(&[216, 1]),
            p(&[0, 12]),
            p(&[5832, 540, -1]),
            p(&[0, 0, 216]),
        ),
        Family::OctaK4 => (
            p(&[-324, 405, -144, 16]),
            p(&[0, 0, 0, 243]),
            p(&[8748, -9963, 4374, -864, 64]),
            p(&[0, 0, 0, 0, 19683]),
        ),
    }
}

fn j_closed_pair(family: Family) -> (Poly<QQ>, Poly<QQ>) {
    // j = N/D in the family variable
    let p = |v: &[i64]| Poly::new(v.iter().map(|&c| qq_int(c)).collect::<Vec<_>>());
    match family {
        Family::TetraK3 => {
            // d (d + 216)^3 / (1728 (d - 27)^3)
            let n = p(&[0, 1]).mul(&p(&[216, 1]).pow(3));
            let d = p(&[-27, 1]).pow(3).scale(&qq_int(1728));
            (n, d)
        }
        Family::OctaK4 => {
            // (16a^3 - 144a^2 + 405a - 324)^3 / (78732 (a-4)^2 (a-3)^3)
            let n = p(&[-324, 405, -144, 16]).pow(3);
            let d = p(&[-4, 1]).pow(2).mul(&p(&[-3, 1]).pow(3)).scale(&qq_int(78732));
            (n, d)
        }
    }
}

/// Exact j-invariant at a rational point of the family variable
/// (d = alpha^2 for TetraK3, alpha for OctaK4), computed by both the
/// closed form and g2^3/(g2^3 - 27 g3^2); the two routes must agree
/// exactly.
pub fn j_exact(family: Family, var: &QQ) -> Result<QQ> {
    let (a, p, b, q) = rational_function_pair(family);
    let (av, pv, bv, qv) = (a.eval(var), p.eval(var), b.eval(var), q.eval(var));
    if pv.is_zero() || qv.is_zero() {
        return Err(Error::pole("alpha = 0 is a pole of the invariants".to_string()));
    }
    let num = &av * &av * &av * &qv * &qv;
    let den = &num - qq_int(27) * &bv * &bv * &pv * &pv * &pv;
    if den.is_zero() {
        return Err(Error::pole("discriminant vanishes here".to_string()));
    }
    let route = num / den;
    let (n, d) = j_closed_pair(family);
    let dv = d.eval(var);
    if dv.is_zero() {
        return Err(Error::pole("closed-form j has a pole here".to_string()));
    }
    let closed = n.eval(var) / dv;
    if route != closed {
        return Err(Error::integrity(format!(
            "j-invariant routes disagree at {var}: {route} vs {closed}"
        )));
    }
    Ok(route)
}

/// Verify j = g2^3/(g2^3 - 27 g3^2) against the closed form as an exact
/// identity of rational functions: N (A^3 Q^2 - 27 B^2 P^3) = D A^3 Q^2.
pub fn j_polynomial_identity(family: Family) -> bool {
    let (a, p, b, q) = rational_function_pair(family);
    let (n, d) = j_closed_pair(family);
    let a3q2 = a.pow(3).mul(&q.pow(2));
    let delta = a3q2.sub(&b.pow(2).mul(&p.pow(3)).scale(&qq_int(27)));
    n.mul(&delta) == d.mul(&a3q2)
}

/// Floating j-invariant (closed form; cross-checked against the
/// invariant route to 1e-10 relative).
pub fn j_invariant(family: &PlatonicFamily) -> Result<f64> {
    let var = match family.group {
        Family::TetraK3 => family.alpha * family.alpha,
        Family::OctaK4 => family.alpha,
    };
    let (n, d) = j_closed_pair(family.group);
    let dv = d.eval_f64(var);
    if dv == 0.0 {
        return Err(Error::pole("closed-form j has a pole here".to_string()));
    }
    let closed = n.eval_f64(var) / dv;
    let inv = quotient_invariants(family)?;
    let g2c = inv.g2().powi(3);
    let route = g2c / (g2c - 27.0 * inv.g3() * inv.g3());
    if (closed - route).abs() > 1e-10 * closed.abs().max(1.0) {
        return Err(Error::integrity(format!(
            "j-invariant routes disagree: {closed} vs {route}"
        )));
    }
    Ok(closed)
}

// ---- mass relation -----------------------------------------------------

/// p evaluated at the imaginary argument of the mass relation; the result
/// must be real (imaginary part checked, then dropped).
fn wp_at_imag(u_im: f64, inv: &EllipticInvariants) -> Result<f64> {
    let p = weierstrass_p(Complex64::new(0.0, u_im), inv)?;
    if p.im.abs() > 1e-9 * (1.0 + p.norm()) {
        return Err(Error::numeric(format!(
            "p-function at imaginary argument has imaginary part {:e}",
            p.im
        )));
    }
    Ok(p.re)
}

/// Residual of the mass relation at (alpha, m).
pub fn mass_relation_residual(family: &PlatonicFamily, m: f64) -> Result<f64> {
    if !(m > 0.0) {
        return Err(Error::domain(format!("mass must be positive, got {m}")));
    }
    let inv = quotient_invariants(family)?;
    let hp = half_periods(&inv)?;
    let w1 = hp.varpi1.im;
    let u = match family.group {
        Family::TetraK3 => 2.0 * w1 / (2.0 * m + 3.0),
        Family::OctaK4 => 3.0 * w1 / (m + 2.0),
    };
    Ok(wp_at_imag(u, &inv)? - mass_rhs(family))
}

struct PeriodData {
    hp: HalfPeriods,
    e2: f64,
    inv: EllipticInvariants,
}

fn period_data(family: &PlatonicFamily) -> Result<PeriodData> {
    let inv = quotient_invariants(family)?;
    let e2 = match cubic_roots(&inv) {
        CubicConfiguration::ConjugatePair(r) => r.e2,
        CubicConfiguration::AllReal(_) => {
            return Err(Error::configuration(
                "family invariants must have a conjugate root pair".to_string(),
            ))
        }
    };
    let hp = half_periods(&inv)?;
    Ok(PeriodData { hp, e2, inv })
}

/// int_{-inf}^{px} dx / sqrt(-F(x)) : the imaginary-axis flow time from
/// the pole of p to the point above px.
fn flow_time_to(px: f64, inv: &EllipticInvariants) -> Result<f64> {
    let (g2, g3) = (inv.g2(), inv.g3());
    exp_sinh(
        move |y: f64| {
            let x = px - y;
            let f = 4.0 * x * x * x - g2 * x - g3;
            1.0 / (-f).sqrt()
        },
        0.0,
        1e-13,
    )
}

/// int_{px}^{e2} dx / sqrt(-F(x)), the complementary segment.
fn flow_time_from(px: f64, e2: f64, inv: &EllipticInvariants) -> Result<f64> {
    let (g2, g3) = (inv.g2(), inv.g3());
    tanh_sinh(
        move |x: f64| {
            let f = 4.0 * x * x * x - g2 * x - g3;
            1.0 / (-f).sqrt()
        },
        px,
        e2,
        1e-13,
    )
}

/// The mass as a function of alpha, by inverting the p-function along the
/// imaginary axis with the real period integrals:
/// tetra: 2 varpi1/(2m+3) <-> J = int_{-inf}^{px}; octa: the relation
/// reduces to S = int_{px}^{e2} = (3/2) |varpi1| / (m+2).
pub fn mass_from_alpha(family: &PlatonicFamily) -> Result<f64> {
    let pd = period_data(family)?;
    let w = pd.hp.varpi1.im.abs();
    let px = pole_x(family);
    let m = match family.group {
        Family::TetraK3 => {
            let j = flow_time_to(px, &pd.inv)?;
            w / j - 1.5
        }
        Family::OctaK4 => {
            let s = flow_time_from(px, pd.e2, &pd.inv)?;
            1.5 * w / s - 2.0
        }
    };
    if !m.is_finite() {
        return Err(Error::numeric("mass inversion produced a non-finite value".to_string()));
    }
    Ok(m)
}

/// Solve the mass relation for alpha at the given mass.  m = 0 returns
/// the closed-form endpoints sqrt(3) and 1.
///
/// The mass is a strictly decreasing function of alpha (verified by the
/// property tests, not assumed blindly: a failed bracket is an explicit
/// error), so the root is bracketed by walking down from the massless
/// endpoint and then bisected on a geometric grid.
pub fn alpha_from_mass(group: Family, m: f64) -> Result<f64> {
    if !(m >= 0.0) || !m.is_finite() {
        return Err(Error::domain(format!("mass must be >= 0, got {m}")));
    }
    if m == 0.0 {
        return Ok(group.alpha_max());
    }
    let mass_at =
        |alpha: f64| -> Result<f64> { mass_from_alpha(&PlatonicFamily { group, alpha }) };
    // lo/hi in alpha: mass(lo) >= m >= mass(hi)
    let mut hi = group.alpha_max() * (1.0 - 1e-12);
    let mut lo = hi;
    let mut m_lo = mass_at(lo)?;
    while m_lo < m {
        hi = lo;
        lo *= 0.25;
        if lo < 1e-30 {
            return Err(Error::numeric(
                "alpha_from_mass: failed to bracket the mass relation root".to_string(),
            ));
        }
        m_lo = mass_at(lo)?;
    }
    if lo == hi {
        // mass below the value just inside the massless endpoint
        return Ok(group.alpha_max());
    }
    for _ in 0..200 {
        let mid = (lo * hi).sqrt();
        if mid <= lo || mid >= hi || (hi - lo) <= 1e-14 * hi {
            break;
        }
        if mass_at(mid)? >= m {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let alpha = 0.5 * (lo + hi);
    let family = PlatonicFamily { group, alpha };
    let res = mass_relation_residual(&family, m)?;
    if res.abs() > 1e-7 * (1.0 + mass_rhs(&family).abs()) {
        return Err(Error::integrity(format!(
            "alpha_from_mass: residual {res:e} too large at alpha = {alpha}"
        )));
    }
    Ok(alpha)
}

/// Cycle integers recovered from the period integrals.
#[derive(Clone, Copy, Debug)]
pub struct CycleIntegers {
    pub ell1: i64,
    pub ell2: i64,
    /// Pre-rounding distance of ell1 from the nearest integer.
    pub residual: f64,
}

/// Recover (ell1, ell2) with ell2 = -2 ell1 from the real-axis integrals;
/// rounding residual above 1e-6 is an integrity error (wrong path or
/// branch).
pub fn verify_cycle_integers(family: &PlatonicFamily, m: f64) -> Result<CycleIntegers> {
    if !(m >= 0.0) {
        return Err(Error::domain(format!("mass must be >= 0, got {m}")));
    }
    let pd = period_data(family)?;
    let w = pd.hp.varpi1.im.abs();
    let px = pole_x(family);
    let ell1_f = match family.group {
        Family::TetraK3 => {
            let j = flow_time_to(px, &pd.inv)?;
            2.0 * (2.0 * m + 3.0) * j / w
        }
        Family::OctaK4 => {
            let s = flow_time_from(px, pd.e2, &pd.inv)?;
            4.0 * (m + 2.0) * s / w
        }
    };
    let ell1 = ell1_f.round();
    let residual = (ell1_f - ell1).abs();
    if residual > 1e-6 {
        return Err(Error::integrity(format!(
            "cycle integer recovery failed: ell1 = {ell1_f} is not near an integer"
        )));
    }
    Ok(CycleIntegers {
        ell1: ell1 as i64,
        ell2: -2 * ell1 as i64,
        residual,
    })
}

// ---- invariants of points on the curve ----------------------------------

/// Map a point of P^1 x P^1 to the Weierstrass coordinates (x, y) of the
/// quotient elliptic curve.  Poles on the diagonal w = z.
pub fn invariants_at_point(
    family: &PlatonicFamily,
    w: Complex64,
    z: Complex64,
) -> Result<(Complex64, Complex64)> {
    let d = w - z;
    let scale = w.norm().max(z.norm()).max(1.0);
    if d.norm() < 1e-9 * scale {
        return Err(Error::pole("invariants have poles on the diagonal w = z".to_string()));
    }
    let wz = w * z;
    let s = w + z;
    let yh = ((wz).powu(6)
        - ((wz) * (wz) + 1.0) * (s.powu(4) + 4.0 * wz * s * s + wz * wz)
        + 1.0)
        / d.powu(6);
    match family.group {
        Family::TetraK3 => {
            let xh = (w.powu(4) * z.powu(4) + w.powu(4) + z.powu(4) + 12.0 * wz * wz + 1.0)
                / d.powu(4);
            Ok((xh - 11.0 / 12.0, 2.0 * yh))
        }
        Family::OctaK4 => {
            let vh = s * (wz * wz - 1.0) / d.powu(3);
            let y = Complex64::new(0.0, 2.0f64.sqrt()) * vh * yh;
            let x = 1.5 * vh * vh + 1.0 / (3.0 * family.alpha) - 2.0 / 27.0;
            Ok((x, y))
        }
    }
}

/// Max Weierstrass residual |y^2 - (4x^3 - g2 x - g3)| / (1 + |x|^3) over
/// points of the Ansatz curve above seeded-random unit-circle w values.
pub fn weierstrass_residual_samples(
    family: &PlatonicFamily,
    samples: usize,
    seed: u64,
) -> Result<f64> {
    let curve = ansatz_curve(family, 0.0)?;
    let inv = quotient_invariants(family)?;
    let mut state = seed | 1;
    let mut worst = 0.0f64;
    let mut taken = 0usize;
    while taken < samples {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        let theta = (state >> 11) as f64 / (1u64 << 53) as f64 * std::f64::consts::TAU;
        let w = Complex64::from_polar(1.0, theta);
        let mut used = false;
        for z in curve.roots_in_z(w) {
            if (w - z).norm() < 1e-6 {
                continue;
            }
            let (x, y) = invariants_at_point(family, w, z)?;
            let f = 4.0 * x * x * x - inv.g2() * x - inv.g3();
            let res = (y * y - f).norm() / (1.0 + x.norm().powi(3));
            worst = worst.max(res);
            used = true;
        }
        if used {
            taken += 1;
        }
    }
    Ok(worst)
}

// ---- euclidean limit -----------------------------------------------------

/// The infinite-mass limit of the tetrahedral family.
#[derive(Clone, Debug)]
pub struct EuclideanTetraLimit {
    /// alpha_bar = Gamma(1/3)^9 / (2^6 pi^3), the limit of m^3 alpha(m).
    pub alpha_bar: f64,
    /// Coefficients (ascending in zeta) of the polynomial part of
    /// eta^3 + 2 i alpha_bar zeta (zeta^4 - 1) = 0.
    pub zeta_coeffs: [Complex64; 6],
    /// |varpi1(0, 27/alpha_bar^4) - i alpha_bar|
    pub half_period_residual: f64,
    /// |varpi - alpha_bar/sqrt(3)| for the same invariants (the closed
    /// Gamma-function form of the real period).
    pub real_period_residual: f64,
    /// Relative deviation of Gamma(1/3) from its quadrature oracle.
    pub gamma_residual: f64,
}

pub fn euclid_limit_tetra() -> Result<EuclideanTetraLimit> {
    let g13 = gamma(1.0 / 3.0)?;
    let oracle = crate::quad::exp_sinh(|t: f64| t.powf(-2.0 / 3.0) * (-t).exp(), 0.0, 1e-14)?;
    let gamma_residual = (g13 - oracle).abs() / g13;
    if gamma_residual > 1e-12 {
        return Err(Error::integrity(format!(
            "Gamma(1/3) disagrees with its quadrature oracle by {gamma_residual:e}"
        )));
    }
    let alpha_bar = g13.powi(9) / (64.0 * std::f64::consts::PI.powi(3));
    let inv = EllipticInvariants::new(0.0, 27.0 / alpha_bar.powi(4))?;
    let hp = half_periods(&inv)?;
    let half_period_residual = (hp.varpi1 - Complex64::new(0.0, alpha_bar)).norm();
    if half_period_residual > 1e-9 * alpha_bar {
        return Err(Error::integrity(format!(
            "varpi1 = {} is not i alpha_bar = i {alpha_bar}",
            hp.varpi1
        )));
    }
    let real_period_residual = (hp.varpi - alpha_bar / 3.0f64.sqrt()).abs();
    if real_period_residual > 1e-10 * alpha_bar {
        return Err(Error::integrity(format!(
            "varpi = {} is not alpha_bar/sqrt(3)",
            hp.varpi
        )));
    }
    let two_i_ab = Complex64::new(0.0, 2.0 * alpha_bar);
    let mut zeta_coeffs = [Complex64::new(0.0, 0.0); 6];
    zeta_coeffs[1] = -two_i_ab;
    zeta_coeffs[5] = two_i_ab;
    Ok(EuclideanTetraLimit {
        alpha_bar,
        zeta_coeffs,
        half_period_residual,
        real_period_residual,
        gamma_residual,
    })
}

/// Assembled quotient-curve report for one family member.
#[derive(Clone, Debug)]
pub struct QuotientCurve {
    pub inv: EllipticInvariants,
    pub j: f64,
    pub x_pole: f64,
    pub rhs: f64,
    pub periods: HalfPeriods,
    pub ell1: i64,
    pub ell2: i64,
}

pub fn quotient_curve(family: &PlatonicFamily, m: f64) -> Result<QuotientCurve> {
    let inv = quotient_invariants(family)?;
    let periods = half_periods(&inv)?;
    let cyc = verify_cycle_integers(family, m)?;
    Ok(QuotientCurve {
        inv,
        j: j_invariant(family)?,
        x_pole: pole_x(family),
        rhs: mass_rhs(family),
        periods,
        ell1: cyc.ell1,
        ell2: cyc.ell2,
    })
}
