//! The coefficient ring Q[g2, g3] for division polynomials.

use super::poly::Ring;
use super::rational::QQ;
use num_traits::Zero;
use std::collections::BTreeMap;

/// Sparse polynomial in the two Weierstrass invariants.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct Q2 {
    /// (g2 exponent, g3 exponent) -> coefficient
    terms: BTreeMap<(u32, u32), QQ>,
}

impl Q2 {
    pub fn constant(c: QQ) -> Self {
        let mut t = BTreeMap::new();
        if !num_traits::Zero::is_zero(&c) {
            t.insert((0, 0), c);
        }
        Q2 { terms: t }
    }

    pub fn term(c: QQ, g2_exp: u32, g3_exp: u32) -> Self {
        let mut t = BTreeMap::new();
        if !num_traits::Zero::is_zero(&c) {
            t.insert((g2_exp, g3_exp), c);
        }
        Q2 { terms: t }
    }

    pub fn g2() -> Self {
        Q2::term(QQ::from_integer(1.into()), 1, 0)
    }

    pub fn g3() -> Self {
        Q2::term(QQ::from_integer(1.into()), 0, 1)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &QQ)> {
        self.terms.iter()
    }

    /// Evaluate at exact rational invariants.
    pub fn eval_qq(&self, g2: &QQ, g3: &QQ) -> QQ {
        let mut acc: QQ = Zero::zero();
        for (&(i, j), c) in &self.terms {
            let mut t = c.clone();
            for _ in 0..i {
                t *= g2;
            }
            for _ in 0..j {
                t *= g3;
            }
            acc += t;
        }
        acc
    }

    /// Evaluate at floating invariants; also returns the sum of absolute
    /// values of the accumulated terms (a conditioning scale).
    pub fn eval_f64(&self, g2: f64, g3: f64) -> (f64, f64) {
        let mut acc = 0.0;
        let mut mag = 0.0;
        for (&(i, j), c) in &self.terms {
            let t = crate::exact::rational::qq_to_f64(c)
                * g2.powi(i as i32)
                * g3.powi(j as i32);
            acc += t;
            mag += t.abs();
        }
        (acc, mag)
    }
}

impl Ring for Q2 {
    fn zero() -> Self {
        Q2::default()
    }

    fn one() -> Self {
        Q2::constant(QQ::from_integer(1.into()))
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, o: &Self) -> Self {
        let mut t = self.terms.clone();
        for (k, v) in &o.terms {
            let entry = t.entry(*k).or_insert_with(|| <QQ as Zero>::zero());
            *entry += v;
            if Zero::is_zero(entry) {
                t.remove(k);
            }
        }
        Q2 { terms: t }
    }

    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    fn mul(&self, o: &Self) -> Self {
        let mut t: BTreeMap<(u32, u32), QQ> = BTreeMap::new();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &o.terms {
                let k = (i1 + i2, j1 + j2);
                let entry = t.entry(k).or_insert_with(|| <QQ as Zero>::zero());
                *entry += c1 * c2;
            }
        }
        t.retain(|_, v| !Zero::is_zero(v));
        Q2 { terms: t }
    }

    fn neg(&self) -> Self {
        Q2 {
            terms: self.terms.iter().map(|(k, v)| (*k, -v.clone())).collect(),
        }
    }

    fn exact_div(&self, _o: &Self) -> Self {
        // Never reached: no elimination runs over this ring.
        unimplemented!("exact division in Q[g2,g3] is not required")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::qq_int;

    #[test]
    fn ring_ops() {
        let a = Q2::g2().mul(&Q2::g2()).add(&Q2::g3().scale_by(&qq_int(3)));
        assert_eq!(a.eval_qq(&qq_int(2), &qq_int(5)), qq_int(19));
    }
}

impl Q2 {
    pub fn scale_by(&self, s: &QQ) -> Self {
        if Zero::is_zero(s) {
            return Q2::default();
        }
        Q2 {
            terms: self.terms.iter().map(|(k, v)| (*k, v * s)).collect(),
        }
    }
}
