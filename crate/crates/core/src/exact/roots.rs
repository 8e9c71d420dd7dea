//! Real-root isolation for exact rational polynomials by sign-change
//! bisection, with a floating-point fast path.
//!
//! The floating evaluation carries a running error bound; only when the
//! bound straddles zero does the (expensive) exact evaluation run.  Signs
//! are therefore always exact.

use super::poly::Poly;
use super::rational::{qq_to_f64, QQ};
use num_traits::{Signed, Zero};

pub struct SignEvaluator {
    exact: Poly<QQ>,
    f64_coeffs: Vec<f64>,
}

impl SignEvaluator {
    pub fn new(p: &Poly<QQ>) -> Self {
        SignEvaluator {
            exact: p.clone(),
            f64_coeffs: p.coeffs().iter().map(qq_to_f64).collect(),
        }
    }

    /// Sign of p(x) for a f64 point (which converts to QQ exactly).
    pub fn sign_at(&self, x: f64) -> i32 {
        let mut acc = 0.0f64;
        let mut mag = 0.0f64;
        for c in self.f64_coeffs.iter().rev() {
            acc = acc * x + c;
            mag = mag * x.abs() + c.abs();
        }
        let bound = mag * (self.f64_coeffs.len() as f64) * 4.0 * f64::EPSILON;
        if acc.is_finite() && mag.is_finite() && acc.abs() > bound {
            return if acc > 0.0 { 1 } else { -1 };
        }
        let v = self.exact.eval(&QQ::from_float(x).expect("finite grid point"));
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }
}

/// Isolate real roots of `p` in the open interval (lo, hi) by scanning
/// `grid` uniform cells and bisecting every sign change.  Roots of even
/// multiplicity produce no sign change and are not found; the polynomials
/// fed here are squarefree or have known-simple physical roots.
///
/// Returns refined roots as f64, ascending.
pub fn real_roots_in(p: &Poly<QQ>, lo: f64, hi: f64, grid: u32) -> Vec<f64> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let ev = SignEvaluator::new(p);
    let mut roots = Vec::new();
    let step = (hi - lo) / grid as f64;
    let mut prev_x = lo;
    let mut prev_s = ev.sign_at(prev_x);
    for i in 1..=grid {
        let x = if i == grid { hi } else { lo + step * i as f64 };
        let s = ev.sign_at(x);
        if prev_s == 0 {
            roots.push(prev_x);
        } else if s != 0 && s != prev_s {
            roots.push(bisect(&ev, prev_x, x, prev_s));
        }
        prev_x = x;
        prev_s = s;
    }
    if prev_s == 0 {
        roots.push(prev_x);
    }
    roots
}

fn bisect(ev: &SignEvaluator, mut a: f64, mut b: f64, sa: i32) -> f64 {
    let mut sa = sa;
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let sm = ev.sign_at(m);
        if sm == 0 {
            return m;
        }
        if sm == sa {
            a = m;
        } else {
            b = m;
        }
        sa = ev.sign_at(a);
        if (b - a) <= f64::EPSILON * (a.abs() + b.abs()) {
            break;
        }
    }
    0.5 * (a + b)
}
