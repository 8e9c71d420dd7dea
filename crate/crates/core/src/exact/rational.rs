use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Arbitrary-precision rational number.
pub type QQ = BigRational;

pub fn qq(num: i64, den: i64) -> QQ {
    QQ::new(BigInt::from(num), BigInt::from(den))
}

pub fn qq_int(n: i64) -> QQ {
    QQ::from_integer(BigInt::from(n))
}

pub fn qq_to_f64(x: &QQ) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Gaussian rational a + b i with exact rational parts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GaussRational {
    pub re: QQ,
    pub im: QQ,
}

impl GaussRational {
    pub fn new(re: QQ, im: QQ) -> Self {
        GaussRational { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        GaussRational::new(qq_int(n), QQ::zero())
    }

    pub fn from_rational(re: QQ) -> Self {
        GaussRational::new(re, QQ::zero())
    }

    /// b i with rational b.
    pub fn imaginary(im: QQ) -> Self {
        GaussRational::new(QQ::zero(), im)
    }

    pub fn zero() -> Self {
        GaussRational::new(QQ::zero(), QQ::zero())
    }

    pub fn one() -> Self {
        GaussRational::new(QQ::one(), QQ::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRational::new(self.re.clone(), -self.im.clone())
    }

    /// |z|^2, a nonnegative rational.
    pub fn norm_sq(&self) -> QQ {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sq();
        Some(GaussRational::new(&self.re / &n, -(&self.im / &n)))
    }
}

impl Add for &GaussRational {
    type Output = GaussRational;
    fn add(self, o: &GaussRational) -> GaussRational {
        GaussRational::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl Sub for &GaussRational {
    type Output = GaussRational;
    fn sub(self, o: &GaussRational) -> GaussRational {
        GaussRational::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl Mul for &GaussRational {
    type Output = GaussRational;
    fn mul(self, o: &GaussRational) -> GaussRational {
        GaussRational::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl Neg for &GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational::new(-self.re.clone(), -self.im.clone())
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}{}i", self.re, self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_field_ops() {
        let a = GaussRational::new(qq(1, 2), qq(3, 1));
        let inv = a.inverse().unwrap();
        let prod = &a * &inv;
        assert_eq!(prod, GaussRational::one());
        assert_eq!((&a * &a.conj()).re, a.norm_sq());
    }
}
