//! Dense univariate polynomials over an exact coefficient ring.

use super::rational::{GaussRational, QQ};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt::Write as _;

/// Minimal exact-ring interface: enough for polynomial arithmetic and
/// fraction-free (Bareiss) elimination.
pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Exact quotient.  Callers only invoke this when divisibility is
    /// guaranteed (Bareiss pivots, content removal); panics otherwise.
    fn exact_div(&self, o: &Self) -> Self;
}

impl Ring for QQ {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, o: &Self) -> Self {
        self / o
    }
}

impl Ring for GaussRational {
    fn zero() -> Self {
        GaussRational::zero()
    }
    fn one() -> Self {
        GaussRational::one()
    }
    fn is_zero(&self) -> bool {
        GaussRational::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, o: &Self) -> Self {
        self.mul(&o.inverse().expect("division by zero"))
    }
}

/// Dense polynomial, coefficients in ascending powers, no trailing zeros.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Poly::new(vec![c])
    }

    pub fn monomial(c: R, deg: usize) -> Self {
        let mut v = vec![R::zero(); deg + 1];
        v[deg] = c;
        Poly::new(v)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn lead(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i).add(&o.coeff(i)));
        }
        Poly::new(v)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i).sub(&o.coeff(i)));
        }
        Poly::new(v)
    }

    pub fn neg(&self) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.neg()).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![R::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                v[i + j] = v[i + j].add(&a.mul(b));
            }
        }
        Poly::new(v)
    }

    pub fn scale(&self, s: &R) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.mul(s)).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let mut v = Vec::with_capacity(self.coeffs.len() - 1);
        let mut k = R::one();
        let one = R::one();
        for c in self.coeffs.iter().skip(1) {
            v.push(c.mul(&k));
            k = k.add(&one);
        }
        Poly::new(v)
    }

    /// Quotient and remainder; requires the leading coefficient of `d` to be
    /// invertible through `exact_div` (true over a field).
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.degree().unwrap();
        let lead = d.lead().unwrap().clone();
        let mut rem = self.clone();
        let mut quot = vec![R::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let q = rem.lead().unwrap().exact_div(&lead);
            let shift = rd - dd;
            quot[shift] = q.clone();
            let sub = d.mul(&Poly::monomial(q, shift));
            rem = rem.sub(&sub);
        }
        (Poly::new(quot), rem)
    }

    /// Exact polynomial quotient; panics when the remainder is nonzero.
    pub fn exact_div_poly(&self, d: &Self) -> Self {
        let (q, r) = self.divrem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.divrem(self).1.is_zero()
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        Poly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Poly::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Poly::mul(self, o)
    }
    fn neg(&self) -> Self {
        Poly::neg(self)
    }
    fn exact_div(&self, o: &Self) -> Self {
        self.exact_div_poly(o)
    }
}

impl Poly<QQ> {
    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        if let Some(l) = a.lead().cloned() {
            a = a.scale(&(<QQ as One>::one() / l));
        }
        a
    }

    /// self / gcd(self, self'): same roots, all simple.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) < 1 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div_poly(&g)
    }

    /// Primitive integer form: clear denominators, divide by content, make
    /// the leading coefficient positive.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut lcm = BigInt::one();
        for c in self.coeffs() {
            lcm = lcm.lcm(c.denom());
        }
        let mut ints: Vec<BigInt> = self
            .coeffs()
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = content.gcd(c);
        }
        if !content.is_zero() {
            for c in &mut ints {
                *c /= &content;
            }
        }
        if ints.last().map_or(false, |c| c.is_negative()) {
            for c in &mut ints {
                *c = -c.clone();
            }
        }
        ints
    }

    pub fn from_integers(ints: &[BigInt]) -> Self {
        Poly::new(ints.iter().map(|c| QQ::from_integer(c.clone())).collect())
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + super::rational::qq_to_f64(c);
        }
        acc
    }

    /// Render with integer-normalized coefficients, e.g. "3*a^2 - 1".
    pub fn to_string_in(&self, var: &str) -> String {
        let ints = self.primitive_integer();
        if ints.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (d, c) in ints.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if s.is_empty() {
                if c.is_negative() {
                    s.push('-');
                }
            } else if c.is_negative() {
                s.push_str(" - ");
            } else {
                s.push_str(" + ");
            }
            let show_coeff = !mag.is_one() || d == 0;
            if show_coeff {
                let _ = write!(s, "{mag}");
            }
            if d > 0 {
                if show_coeff {
                    s.push('*');
                }
                let _ = write!(s, "{var}");
                if d > 1 {
                    let _ = write!(s, "^{d}");
                }
            }
        }
        s
    }
}

impl Poly<GaussRational> {
    /// Demote to a rational polynomial; None when any coefficient has a
    /// nonzero imaginary part.
    pub fn into_rational(&self) -> Option<Poly<QQ>> {
        if self.coeffs.iter().any(|c| !c.is_real()) {
            return None;
        }
        Some(Poly::new(self.coeffs.iter().map(|c| c.re.clone()).collect()))
    }
}
