//! Complex numbers with exact rational parts.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, parse_rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        GaussianRational { re, im: BigRational::zero() }
    }

    pub fn imag(im: BigRational) -> Self {
        GaussianRational { re: BigRational::zero(), im }
    }

    pub fn zero() -> Self {
        Self::real(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::real(BigRational::one())
    }

    pub fn i() -> Self {
        Self::imag(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        GaussianRational { re: &self.re * k, im: &self.im * k }
    }

    pub fn recip(&self) -> Self {
        let n = self.norm_sqr();
        assert!(!n.is_zero(), "reciprocal of zero GaussianRational");
        GaussianRational { re: &self.re / &n, im: -&self.im / &n }
    }

    pub fn powi(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Parses `a/b+c/di`, `1/2i`, `-i`, `3/4`, or the pair form `(a/b, c/d)`.
    pub fn parse(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = || Error::Parse(format!("invalid Gaussian rational literal {s:?}"));
        if t.is_empty() {
            return Err(err());
        }
        if let Some(inner) = t.strip_prefix('(') {
            let inner = inner.strip_suffix(')').ok_or_else(err)?;
            let (a, b) = inner.split_once(',').ok_or_else(err)?;
            return Ok(Self::new(parse_rational(a)?, parse_rational(b)?));
        }
        let Some(body) = t.strip_suffix('i') else {
            return Ok(Self::real(parse_rational(&t)?));
        };
        // Split at the last sign that is not the leading one or an exponent sign.
        let bytes = body.as_bytes();
        let split = (1..bytes.len())
            .rev()
            .find(|&j| (bytes[j] == b'+' || bytes[j] == b'-') && !matches!(bytes[j - 1], b'e' | b'E'));
        let (re_part, im_part) = match split {
            Some(j) => (&body[..j], &body[j..]),
            None => ("", body),
        };
        let im = match im_part {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            other => parse_rational(other)?,
        };
        let re = if re_part.is_empty() {
            BigRational::zero()
        } else {
            parse_rational(re_part)?
        };
        Ok(Self::new(re, im))
    }
}

impl FromStr for GaussianRational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return f.write_str(&format_rational(&self.re));
        }
        if self.re.is_zero() {
            return write!(f, "{}i", format_rational(&self.im));
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}i", format_rational(&self.re), sign, format_rational(&self.im.abs()))
    }
}

impl From<BigRational> for GaussianRational {
    fn from(r: BigRational) -> Self {
        Self::real(r)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -&self.re, im: -&self.im }
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for &GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self * &rhs.recip()
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: GaussianRational) -> GaussianRational { (&self).$m(&rhs) }
        }
        impl $tr<&GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: &GaussianRational) -> GaussianRational { (&self).$m(rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, rat};
    use proptest::prelude::*;

    fn g(a: i64, b: i64, c: i64, d: i64) -> GaussianRational {
        GaussianRational::new(rat(a, b), rat(c, d))
    }

    #[test]
    fn parses_all_literal_forms() {
        assert_eq!(GaussianRational::parse("0+1/2i").unwrap(), g(0, 1, 1, 2));
        assert_eq!(GaussianRational::parse("3/4").unwrap(), g(3, 4, 0, 1));
        assert_eq!(GaussianRational::parse("1/2-3/4i").unwrap(), g(1, 2, -3, 4));
        assert_eq!(GaussianRational::parse("-i").unwrap(), g(0, 1, -1, 1));
        assert_eq!(GaussianRational::parse("i").unwrap(), g(0, 1, 1, 1));
        assert_eq!(GaussianRational::parse("2+i").unwrap(), g(2, 1, 1, 1));
        assert_eq!(GaussianRational::parse("-5/3i").unwrap(), g(0, 1, -5, 3));
        assert_eq!(GaussianRational::parse("(1/2, -3)").unwrap(), g(1, 2, -3, 1));
        assert_eq!(GaussianRational::parse("1e-2+2.5i").unwrap(), g(1, 100, 5, 2));
        for bad in ["", "1/2+", "x", "(1,2", "1/0i", "1+2j", "(1;2)"] {
            assert!(GaussianRational::parse(bad).is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn display_examples() {
        assert_eq!(g(1, 1, -1, 2).to_string(), "1-1/2i");
        assert_eq!(g(0, 1, 1, 1).to_string(), "1i");
        assert_eq!(g(-3, 4, 0, 1).to_string(), "-3/4");
    }

    #[test]
    fn division_and_powers() {
        let z = g(1, 2, 3, 1);
        assert_eq!(&(&z / &z), &GaussianRational::one());
        assert_eq!(GaussianRational::i().powi(2), GaussianRational::real(int(-1)));
        assert_eq!(z.powi(3), &(&z * &z) * &z);
    }

    fn gauss() -> impl Strategy<Value = GaussianRational> {
        (-100i64..100, 1i64..40, -100i64..100, 1i64..40).prop_map(|(a, b, c, d)| g(a, b, c, d))
    }

    proptest! {
        #[test]
        fn conjugation_is_an_involution(z in gauss()) {
            prop_assert_eq!(z.conj().conj(), z);
        }

        #[test]
        fn field_ops_are_exact(a in gauss(), b in gauss()) {
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            if !b.is_zero() {
                prop_assert_eq!(&(&a * &b) / &b, a);
            }
        }

        #[test]
        fn display_round_trips(z in gauss()) {
            prop_assert_eq!(GaussianRational::parse(&z.to_string()).unwrap(), z);
        }
    }
}
