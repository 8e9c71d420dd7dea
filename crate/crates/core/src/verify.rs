//! The acceptance suite: every headline claim of the library as a
//! checkable criterion with pinned tolerances.  The `acceptance`
//! integration test and the CLI `verify` command both run these.

use crate::charge2;
use crate::cohomology;
use crate::division;
use crate::error::Result;
use crate::exact::{qq, qq_int, Poly, QQ};
use crate::platonic::{self, Family, PlatonicFamily};
use crate::special::divpoly::{division_poly, division_psi_numeric, eval_poly_numeric};
use crate::special::elliptic::{complete_k, jacobi_sncndn};
use crate::special::weierstrass::{weierstrass_p_and_prime, EllipticInvariants};
use num_complex::Complex64;

/// Outcome of one acceptance criterion.
#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub details: Vec<String>,
}

impl CriterionResult {
    fn new(id: u32, name: &'static str) -> Self {
        CriterionResult {
            id,
            name,
            passed: true,
            details: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        let what = what.into();
        if !ok {
            self.passed = false;
            self.details.push(format!("FAIL {what}"));
        } else {
            self.details.push(format!("ok   {what}"));
        }
    }

    fn error(&mut self, what: impl Into<String>) {
        self.passed = false;
        self.details.push(format!("ERROR {}", what.into()));
    }
}

fn guard<T>(r: Result<T>, c: &mut CriterionResult, what: &str) -> Option<T> {
    match r {
        Ok(v) => Some(v),
        Err(e) => {
            c.error(format!("{what}: {e}"));
            None
        }
    }
}

/// Criterion 1: closed-form Table values of alpha at half-integer masses.
pub fn criterion_table1() -> CriterionResult {
    let mut c = CriterionResult::new(1, "half-integer mass table reproduction");
    let s3 = 3.0f64.sqrt();
    let cases = [
        (Family::TetraK3, 0.0, s3),
        (Family::TetraK3, 0.5, 1.0 / s3),
        (Family::TetraK3, 1.0, 2.0 - s3),
        (Family::TetraK3, 1.5, (23.0 - 4.0 * 33.0f64.sqrt()).sqrt()),
        (Family::OctaK4, 0.0, 1.0),
        (Family::OctaK4, 0.5, 1.0 / 3.0),
        (Family::OctaK4, 1.0, 1.0 / 7.0),
        (Family::OctaK4, 1.5, 7.0 - 4.0 * s3),
    ];
    for (g, m, want) in cases {
        match platonic::alpha_from_mass(g, m) {
            Ok(a) => c.check(
                (a - want).abs() <= 1e-9,
                format!("{g:?} m={m}: alpha = {a:.12} vs closed form {want:.12}"),
            ),
            Err(e) => c.error(format!("{g:?} m={m}: {e}")),
        }
    }
    c
}

/// Criterion 2: exact determinant factorizations of the Cech matrices.
pub fn criterion_determinants() -> CriterionResult {
    let mut c = CriterionResult::new(2, "Cech determinant identities");
    let qp = |v: &[i64]| Poly::new(v.iter().map(|&x| qq_int(x)).collect::<Vec<QQ>>());
    let targets: [(Family, u32, Poly<QQ>); 5] = [
        (Family::TetraK3, 0, qp(&[3, 0, -1]).pow(2)),
        (
            Family::TetraK3,
            1,
            qp(&[1, 0, -3]).pow(2).mul(&qp(&[3, 0, -1]).pow(2)).scale(&qq_int(4)),
        ),
        (
            Family::TetraK3,
            2,
            qp(&[5, 0, 1])
                .pow(2)
                .mul(&qp(&[1, 0, -3]).pow(2))
                .mul(&qp(&[1, -4, 1]).pow(2))
                .mul(&qp(&[1, 4, 1]).pow(2))
                .scale(&qq_int(4)),
        ),
        (
            Family::OctaK4,
            0,
            qp(&[1, 1]).pow(2).mul(&qp(&[1, -1]).pow(3)).scale(&qq_int(96)),
        ),
        (
            Family::OctaK4,
            1,
            qp(&[1, 5])
                .pow(2)
                .mul(&qp(&[5, 1]).pow(3))
                .mul(&qp(&[-1, 3]).pow(3))
                .mul(&qp(&[-1, 1]).pow(4))
                .scale(&qq_int(16)),
        ),
    ];
    for (family, r, target) in targets {
        match cohomology::det_rational(family, r) {
            Ok(det) => {
                let ok = det == target || det == target.neg();
                c.check(
                    ok,
                    format!("det Psi_{r} ({family:?}) = +-[{}]", target.to_string_in("a")),
                );
            }
            Err(e) => c.error(format!("det Psi_{r} ({family:?}): {e}")),
        }
    }
    c
}

/// Criterion 3: the m = 1/3 tetrahedral minimal polynomial and root.
pub fn criterion_rational_mass() -> CriterionResult {
    let mut c = CriterionResult::new(3, "rational mass m = 1/3 pipeline");
    let target = Poly::new(
        [-11i64, 0, -715, 0, 866, 0, 506, 0, -39, 0, 1]
            .iter()
            .map(|&x| qq_int(x))
            .collect::<Vec<QQ>>(),
    );
    match division::alpha_for_rational_mass(Family::TetraK3, 1, 3) {
        Ok(r) => {
            c.check(
                target.divides(&r.polynomial.poly()),
                "alpha^10 - 39 alpha^8 + 506 alpha^6 + 866 alpha^4 - 715 alpha^2 - 11 divides the cleared polynomial",
            );
            c.check(
                (r.alpha - 0.791875).abs() <= 1e-5,
                format!("selected root {0:.9} within 1e-5 of 0.791875", r.alpha),
            );
            c.check(
                r.residual < 1e-8,
                format!("mass-relation residual {:e}", r.residual),
            );
        }
        Err(e) => c.error(format!("pipeline: {e}")),
    }
    c
}

/// Criterion 4: cycle integers at the Table-1 mass points.
pub fn criterion_cycle_integers() -> CriterionResult {
    let mut c = CriterionResult::new(4, "cycle integers (ell1, ell2)");
    let s3 = 3.0f64.sqrt();
    let cases = [
        (Family::TetraK3, s3, 0.0),
        (Family::TetraK3, 1.0 / s3, 0.5),
        (Family::TetraK3, 2.0 - s3, 1.0),
        (Family::TetraK3, (23.0 - 4.0 * 33.0f64.sqrt()).sqrt(), 1.5),
        (Family::OctaK4, 1.0, 0.0),
        (Family::OctaK4, 1.0 / 3.0, 0.5),
        (Family::OctaK4, 1.0 / 7.0, 1.0),
        (Family::OctaK4, 7.0 - 4.0 * s3, 1.5),
    ];
    for (g, a, m) in cases {
        let want = match g {
            Family::TetraK3 => (4, -8),
            Family::OctaK4 => (6, -12),
        };
        let fam = match PlatonicFamily::new(g, a) {
            Ok(f) => f,
            Err(e) => {
                c.error(format!("{g:?} m={m}: {e}"));
                continue;
            }
        };
        match platonic::verify_cycle_integers(&fam, m) {
            Ok(cy) => c.check(
                (cy.ell1, cy.ell2) == want && cy.residual < 1e-6,
                format!(
                    "{g:?} m={m}: (ell1, ell2) = ({}, {}), residual {:.2e}",
                    cy.ell1, cy.ell2, cy.residual
                ),
            ),
            Err(e) => c.error(format!("{g:?} m={m}: {e}")),
        }
    }
    c
}

/// Criterion 5: the charge-2 mass relation on the (m, kappa) grid and the
/// m = 1 closed form.
pub fn criterion_charge2() -> CriterionResult {
    let mut c = CriterionResult::new(5, "charge-2 mass relation");
    let mut worst: f64 = 0.0;
    let mut ok = true;
    for i in 0..10 {
        let m = 0.1 + (4.0 - 0.1) * i as f64 / 9.0;
        for j in 0..10 {
            let kappa = 0.05 + 0.1 * j as f64;
            match charge2::verify_triviality(m, kappa) {
                Ok(v) => worst = worst.max(v.mass_residual.abs()),
                Err(e) => {
                    ok = false;
                    c.error(format!("({m:.2}, {kappa:.2}): {e}"));
                }
            }
        }
    }
    if ok {
        c.check(
            worst < 1e-10,
            format!("max |mass residual| on the 10x10 grid = {worst:.2e}"),
        );
    }
    let mut worst_curve: f64 = 0.0;
    for j in 1..=9 {
        let kappa = 0.1 * j as f64;
        let kp = (1.0 - kappa * kappa).sqrt();
        let curve = match charge2::curve_from_mass(1.0, kappa) {
            Ok(v) => v,
            Err(e) => {
                c.error(format!("curve(1, {kappa:.1}): {e}"));
                continue;
            }
        };
        // kappa (w^2 z^2 + 1) + 2 kappa' sqrt(1 + kappa') wz - (1+kappa')(w^2+z^2),
        // normalized to the -(w^2 + z^2) gauge
        let scale = -(1.0 + kp);
        let c22 = kappa / -scale;
        let c11 = 2.0 * kp * (1.0 + kp).sqrt() / -scale;
        let d = (curve.get(2, 2).re - c22)
            .abs()
            .max((curve.get(1, 1).re - c11).abs())
            .max((curve.get(2, 0).re + 1.0).abs());
        worst_curve = worst_curve.max(d);
    }
    c.check(
        worst_curve < 1e-12,
        format!("m = 1 bisection closed form max deviation {worst_curve:.2e}"),
    );
    c
}

/// Criterion 6: limit identities (Landen, euclidean charge 2, the
/// Gamma-function constant and the infinite-mass extrapolation).
pub fn criterion_limits() -> CriterionResult {
    let mut c = CriterionResult::new(6, "limit identities");
    let mut worst: f64 = 0.0;
    for i in 1..=9 {
        let kappa = 0.1 * i as f64;
        let k = 2.0 * kappa.sqrt() / (1.0 + kappa);
        let lhs = complete_k(k).unwrap();
        let rhs = (1.0 + kappa) * complete_k(kappa).unwrap();
        worst = worst.max((lhs - rhs).abs() / rhs);
    }
    c.check(worst < 1e-12, format!("Landen identity max deviation {worst:.2e}"));
    let mut worst: f64 = 0.0;
    for i in 1..=9 {
        let e = match charge2::euclid_limit_charge2(0.1 * i as f64) {
            Ok(v) => v,
            Err(err) => {
                c.error(format!("euclid_limit_charge2: {err}"));
                continue;
            }
        };
        let scale = e.quartic.iter().map(|x| x.abs()).fold(0.0, f64::max);
        worst = worst.max(e.max_deviation / scale);
    }
    c.check(
        worst < 1e-12,
        format!("euclidean charge-2 parametrization match {worst:.2e}"),
    );
    if let Some(e) = guard(platonic::euclid_limit_tetra(), &mut c, "euclid_limit_tetra") {
        c.check(
            (e.alpha_bar - 3.581254225738249).abs() < 1e-9,
            format!("alpha_bar = {:.12}", e.alpha_bar),
        );
        c.check(
            e.half_period_residual < 1e-9 * e.alpha_bar,
            format!("varpi1 = i alpha_bar residual {:.2e}", e.half_period_residual),
        );
        // m^3 alpha(m) -> alpha_bar under Richardson extrapolation
        let mut vals = Vec::new();
        for m in [10.0, 20.0, 40.0] {
            match platonic::alpha_from_mass(Family::TetraK3, m) {
                Ok(a) => vals.push(m.powi(3) * a),
                Err(err) => c.error(format!("alpha_from_mass({m}): {err}")),
            }
        }
        if vals.len() == 3 {
            let w1 = 2.0 * vals[1] - vals[0];
            let w2 = 2.0 * vals[2] - vals[1];
            let rich = (4.0 * w2 - w1) / 3.0;
            let rel = (rich - e.alpha_bar).abs() / e.alpha_bar;
            c.check(
                rel < 1e-2,
                format!("m^3 alpha(m) extrapolates to {rich:.6} ({rel:.2e} relative)"),
            );
        }
    }
    c
}

/// Criterion 7: quotient geometry (sampled Weierstrass residuals and
/// exact j-invariant route agreement).
pub fn criterion_quotient_geometry() -> CriterionResult {
    let mut c = CriterionResult::new(7, "quotient elliptic geometry");
    for (g, a) in [(Family::TetraK3, 0.9), (Family::OctaK4, 0.35)] {
        let fam = PlatonicFamily::new(g, a).unwrap();
        match platonic::weierstrass_residual_samples(&fam, 50, 0xabcdef) {
            Ok(worst) => c.check(
                worst < 1e-9,
                format!("{g:?} sampled Weierstrass residual {worst:.2e} over 50 fibres"),
            ),
            Err(e) => c.error(format!("{g:?}: {e}")),
        }
    }
    c.check(
        platonic::j_polynomial_identity(Family::TetraK3),
        "tetra j closed form = invariant route (exact rational functions)",
    );
    c.check(
        platonic::j_polynomial_identity(Family::OctaK4),
        "octa j closed form = invariant route (exact rational functions)",
    );
    for d in [qq_int(3), qq(1, 4), qq(7, 5)] {
        c.check(
            platonic::j_exact(Family::TetraK3, &d).is_ok(),
            format!("tetra j routes agree exactly at d = {d}"),
        );
    }
    for a in [qq(1, 3), qq(1, 7), qq(2, 5)] {
        c.check(
            platonic::j_exact(Family::OctaK4, &a).is_ok(),
            format!("octa j routes agree exactly at alpha = {a}"),
        );
    }
    c
}

/// Criterion 8: property suites (Jacobi identities, the p-function ODE
/// and duplication, the division-polynomial oracle, and tri-oracle
/// alpha consistency).
pub fn criterion_properties() -> CriterionResult {
    let mut c = CriterionResult::new(8, "property suites");

    let mut worst: f64 = 0.0;
    for i in 0..=9 {
        let kappa = 0.0999 * i as f64;
        for j in -5..=5 {
            let u = 0.9 * j as f64;
            let v = jacobi_sncndn(u, kappa).unwrap();
            worst = worst
                .max((v.sn * v.sn + v.cn * v.cn - 1.0).abs())
                .max((v.dn * v.dn + (kappa * v.sn).powi(2) - 1.0).abs());
        }
    }
    c.check(worst < 1e-12, format!("Jacobi identities max defect {worst:.2e}"));

    let inv = EllipticInvariants::new(5.0, 3.0).unwrap();
    let mut state = 0x6a09e667f3bcc909u64;
    let mut rand = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state >> 11) as f64 / (1u64 << 53) as f64
    };
    let mut worst_ode: f64 = 0.0;
    let mut worst_dup: f64 = 0.0;
    let mut n = 0;
    while n < 100 {
        let u = Complex64::new(2.0 * rand() - 1.0, 2.0 * rand() - 1.0);
        if u.norm() < 0.05 {
            continue;
        }
        n += 1;
        let (p, dp) = weierstrass_p_and_prime(u, &inv).unwrap();
        let ode = (dp * dp - (4.0 * p * p * p - inv.g2() * p - inv.g3())).norm()
            / (1.0 + p.norm().powi(3));
        worst_ode = worst_ode.max(ode);
        if let Ok((p2, _)) = weierstrass_p_and_prime(2.0 * u, &inv) {
            let cc = 6.0 * p * p - inv.g2() / 2.0;
            let dup = -2.0 * p + (cc / (2.0 * dp)).powi(2);
            worst_dup = worst_dup.max((p2 - dup).norm() / (1.0 + p2.norm()));
        }
    }
    c.check(worst_ode < 1e-9, format!("p-function ODE residual {worst_ode:.2e}"));
    c.check(worst_dup < 1e-9, format!("duplication residual {worst_dup:.2e}"));

    // division recurrence vs determinant oracle, n <= 7, 20 samples
    let mut worst_div: f64 = 0.0;
    let mut checked = 0;
    let mut state2 = 0x243f6a8885a308d3u64;
    let mut rand2 = move || {
        state2 ^= state2 << 13;
        state2 ^= state2 >> 7;
        state2 ^= state2 << 17;
        (state2 >> 11) as f64 / (1u64 << 53) as f64
    };
    while checked < 20 {
        let g2 = 4.0 * rand2() - 2.0;
        let g3 = 4.0 * rand2() - 2.0;
        let inv = match EllipticInvariants::new(g2, g3) {
            Ok(v) => v,
            Err(_) => continue,
        };
        let u = Complex64::new(0.2 + 0.5 * rand2(), 0.2 + 0.5 * rand2());
        let (p, dp) = match weierstrass_p_and_prime(u, &inv) {
            Ok(v) => v,
            Err(_) => continue,
        };
        checked += 1;
        for nn in 3..=7u32 {
            let psi = division_psi_numeric(nn, u, &inv).unwrap();
            let pn = division_poly(nn).unwrap();
            let (pv, mag) = eval_poly_numeric(&pn, p, g2, g3);
            let (lhs, rhs, scale) = if nn % 2 == 1 {
                (psi, nn as f64 * pv, nn as f64 * mag)
            } else {
                (
                    psi,
                    -(nn as f64 / 2.0) * dp * pv,
                    (nn as f64 / 2.0) * dp.norm() * mag,
                )
            };
            worst_div = worst_div.max((lhs - rhs).norm() / scale.max(lhs.norm()).max(1e-12));
        }
    }
    c.check(
        worst_div < 1e-8,
        format!("division recurrence vs Hankel oracle, relative {worst_div:.2e}"),
    );

    // tri-oracle alpha consistency at m in {1/2, 1, 3/2}
    for g in [Family::TetraK3, Family::OctaK4] {
        for r in 1..=3u32 {
            let m = r as f64 / 2.0;
            let numeric = guard(platonic::alpha_from_mass(g, m), &mut c, "alpha_from_mass");
            let coh = guard(cohomology::half_integer_alpha(g, r), &mut c, "half_integer_alpha");
            let div = guard(
                division::alpha_for_rational_mass(g, r as i64, 2),
                &mut c,
                "alpha_for_rational_mass",
            );
            if let (Some(a), Some(b), Some(d)) = (numeric, coh, div) {
                let spread = (a - b.alpha).abs().max((a - d.alpha).abs());
                c.check(
                    spread < 1e-8,
                    format!("{g:?} m={m}: tri-oracle spread {spread:.2e}"),
                );
            }
        }
    }
    c
}

/// Run every criterion (or one, by id).
pub fn run_suite(only: Option<u32>) -> Vec<CriterionResult> {
    let all: Vec<fn() -> CriterionResult> = vec![
        criterion_table1,
        criterion_determinants,
        criterion_rational_mass,
        criterion_cycle_integers,
        criterion_charge2,
        criterion_limits,
        criterion_quotient_geometry,
        criterion_properties,
    ];
    all.iter()
        .enumerate()
        .filter(|(i, _)| only.map_or(true, |id| id == *i as u32 + 1))
        .map(|(_, f)| f())
        .collect()
}
