//! Complex numbers over [`BigFloat`].

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;

use super::float::BigFloat;
use super::gaussian::GaussianRational;

#[derive(Clone, PartialEq, Eq)]
pub struct BigComplex {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl BigComplex {
    pub fn new(re: BigFloat, im: BigFloat) -> Self {
        let p = re.min_prec(&im);
        BigComplex { re: re.with_precision(p), im: im.with_precision(p) }
    }

    pub fn from_real(re: BigFloat) -> Self {
        let p = re.precision();
        BigComplex { re, im: BigFloat::zero(p) }
    }

    pub fn zero(prec: u32) -> Self {
        Self::from_real(BigFloat::zero(prec))
    }

    pub fn one(prec: u32) -> Self {
        Self::from_real(BigFloat::one(prec))
    }

    pub fn i(prec: u32) -> Self {
        BigComplex { re: BigFloat::zero(prec), im: BigFloat::one(prec) }
    }

    /// Each part correctly rounded to `prec` bits.
    pub fn from_gaussian(z: &GaussianRational, prec: u32) -> Self {
        BigComplex {
            re: BigFloat::from_rational(&z.re, prec),
            im: BigFloat::from_rational(&z.im, prec),
        }
    }

    pub fn from_rational(r: &BigRational, prec: u32) -> Self {
        Self::from_real(BigFloat::from_rational(r, prec))
    }

    pub fn precision(&self) -> u32 {
        self.re.min_prec(&self.im)
    }

    pub fn with_precision(&self, prec: u32) -> Self {
        BigComplex { re: self.re.with_precision(prec), im: self.im.with_precision(prec) }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        BigComplex { re: self.re.clone(), im: -&self.im }
    }

    /// Multiplication by `i`.
    pub fn mul_i(&self) -> Self {
        BigComplex { re: -&self.im, im: self.re.clone() }
    }

    pub fn scale(&self, k: &BigFloat) -> Self {
        BigComplex { re: &self.re * k, im: &self.im * k }
    }

    pub fn mul_pow2(&self, k: i64) -> Self {
        BigComplex { re: self.re.mul_pow2(k), im: self.im.mul_pow2(k) }
    }

    pub fn norm_sqr(&self) -> BigFloat {
        &self.re.square() + &self.im.square()
    }

    pub fn abs(&self) -> BigFloat {
        self.norm_sqr().sqrt()
    }

    /// `(re, im)` as doubles, for diagnostics and coarse searches.
    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    pub fn recip(&self) -> Self {
        let n = self.norm_sqr();
        BigComplex { re: &self.re / &n, im: -(&self.im / &n) }
    }

    /// Principal square root (branch cut on the negative real axis,
    /// `sqrt(-x) = i sqrt(x)` on the cut).
    pub fn sqrt(&self) -> Self {
        let p = self.precision();
        if self.is_zero() {
            return Self::zero(p);
        }
        let t = (&self.abs() + &self.re.abs()).mul_pow2(-1).sqrt();
        let other = (&self.im.abs() / &t).mul_pow2(-1);
        if !self.re.is_negative() {
            let im = if self.im.is_negative() { -other } else { other };
            BigComplex { re: t, im }
        } else {
            let im = if self.im.is_negative() { -t } else { t };
            BigComplex { re: other, im }
        }
    }

    pub fn exp(&self) -> Self {
        let m = self.re.exp();
        let (s, c) = self.im.sin_cos();
        BigComplex { re: &m * &c, im: &m * &s }
    }

    /// `e^{i theta}`.
    pub fn exp_unit(theta: &BigFloat) -> Self {
        let (s, c) = theta.sin_cos();
        BigComplex { re: c, im: s }
    }

    pub fn powi(&self, n: i64) -> Self {
        let p = self.precision();
        let guard = 64 - n.unsigned_abs().leading_zeros() + 8;
        let mut base = self.with_precision(p + guard);
        let mut acc = Self::one(p + guard);
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        if n < 0 {
            acc = acc.recip();
        }
        acc.with_precision(p)
    }

    pub fn to_sci_strings(&self, digits: usize) -> (String, String) {
        (self.re.to_sci_string(digits), self.im.to_sci_string(digits))
    }
}

impl fmt::Debug for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}i) [{} bits]", self.re.to_sci_string(20), self.im.to_sci_string(20), self.precision())
    }
}

impl From<BigFloat> for BigComplex {
    fn from(x: BigFloat) -> Self {
        Self::from_real(x)
    }
}

impl Neg for &BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex { re: -&self.re, im: -&self.im }
    }
}

impl Neg for BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        -&self
    }
}

impl Add for &BigComplex {
    type Output = BigComplex;
    fn add(self, rhs: &BigComplex) -> BigComplex {
        BigComplex { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub for &BigComplex {
    type Output = BigComplex;
    fn sub(self, rhs: &BigComplex) -> BigComplex {
        BigComplex { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul for &BigComplex {
    type Output = BigComplex;
    fn mul(self, rhs: &BigComplex) -> BigComplex {
        BigComplex {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
}

impl Div for &BigComplex {
    type Output = BigComplex;
    fn div(self, rhs: &BigComplex) -> BigComplex {
        let n = rhs.norm_sqr();
        let num = self * &rhs.conj();
        BigComplex { re: &num.re / &n, im: &num.im / &n }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<BigComplex> for BigComplex {
            type Output = BigComplex;
            fn $m(self, rhs: BigComplex) -> BigComplex { (&self).$m(&rhs) }
        }
        impl $tr<&BigComplex> for BigComplex {
            type Output = BigComplex;
            fn $m(self, rhs: &BigComplex) -> BigComplex { (&self).$m(rhs) }
        }
        impl $tr<BigComplex> for &BigComplex {
            type Output = BigComplex;
            fn $m(self, rhs: BigComplex) -> BigComplex { self.$m(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::elementary::pi;
    use crate::arith::rational::rat;

    fn small(x: &BigFloat, bits: i64) -> bool {
        x.is_zero() || x.mag_exp().unwrap() <= -bits
    }

    #[test]
    fn exp_unit_landmarks() {
        let p = 128;
        let one = BigComplex::exp_unit(&BigFloat::zero(p));
        assert_eq!(one, BigComplex::one(p));
        let m1 = BigComplex::exp_unit(&pi(p));
        assert!(small(&(&m1 - &BigComplex::from_real(BigFloat::from_i64(-1, p))).abs(), 124));
        let i = BigComplex::exp_unit(&pi(p).mul_pow2(-1));
        assert!(small(&(&i - &BigComplex::i(p)).abs(), 124));
    }

    #[test]
    fn exp_unit_has_unit_modulus_and_inverse() {
        let p = 160;
        for v in ["0.1", "-3.7", "200", "1e-9", "12345.6789"] {
            let t = BigFloat::parse(v, p).unwrap();
            let e = BigComplex::exp_unit(&t);
            assert!(small(&(&e.abs() - &BigFloat::one(p)), p as i64 - 1));
            let prod = &e * &BigComplex::exp_unit(&-&t);
            assert!(small(&(&prod - &BigComplex::one(p)).abs(), p as i64 - 4), "at {v}");
        }
    }

    #[test]
    fn principal_sqrt_branches() {
        let p = 128;
        let z = BigComplex::from_gaussian(&GaussianRational::new(rat(-4, 1), rat(0, 1)), p);
        assert_eq!(z.sqrt(), BigComplex::new(BigFloat::zero(p), BigFloat::from_i64(2, p)));
        let w = BigComplex::from_gaussian(&GaussianRational::new(rat(-3, 1), rat(-4, 1)), p);
        assert_eq!(w.sqrt(), BigComplex::new(BigFloat::one(p), BigFloat::from_i64(-2, p)));
        let v = BigComplex::from_gaussian(&GaussianRational::new(rat(3, 1), rat(4, 1)), p);
        assert_eq!(v.sqrt(), BigComplex::new(BigFloat::from_i64(2, p), BigFloat::one(p)));
    }

    #[test]
    fn gaussian_conversion_and_division() {
        let p = 96;
        let a = GaussianRational::new(rat(1, 3), rat(-2, 7));
        let b = GaussianRational::new(rat(5, 2), rat(1, 9));
        let exact = BigComplex::from_gaussian(&(&a / &b), p);
        let float = &BigComplex::from_gaussian(&a, p) / &BigComplex::from_gaussian(&b, p);
        assert!(small(&(&exact - &float).abs(), 92));
        assert_eq!(BigComplex::from_gaussian(&a, 40).precision(), 40);
    }

    #[test]
    fn integer_powers() {
        let p = 128;
        let z = BigComplex::from_gaussian(&GaussianRational::new(rat(1, 2), rat(3, 4)), p);
        let z5 = z.powi(5);
        let mut acc = BigComplex::one(p);
        for _ in 0..5 {
            acc = &acc * &z;
        }
        assert!(small(&(&z5 - &acc).abs(), 120));
        assert!(small(&(&(&z.powi(-3) * &z.powi(3)) - &BigComplex::one(p)).abs(), 120));
    }
}
