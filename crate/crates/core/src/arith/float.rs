//! Binary floating-point numbers with an arbitrary, per-value precision.
//!
//! A [`BigFloat`] is `±mag · 2^exp` where `mag` carries at most `prec`
//! significant bits. Arithmetic rounds to nearest, ties to even, and the
//! result of a binary operation carries the smaller of the two operand
//! precisions.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::parse_rational;
use crate::error::Result;

/// Smallest precision a value may carry.
pub const MIN_PRECISION: u32 = 2;

#[derive(Clone)]
pub struct BigFloat {
    neg: bool,
    // Odd, or zero. Trailing zero bits are folded into `exp`.
    mag: BigUint,
    exp: i64,
    prec: u32,
}

fn normalize(mag: BigUint, exp: i64) -> (BigUint, i64) {
    match mag.trailing_zeros() {
        None => (mag, 0),
        Some(0) => (mag, exp),
        Some(tz) => (mag >> tz, exp + tz as i64),
    }
}

/// Rounds `mag · 2^exp` to `prec` bits. `sticky` records that nonzero bits
/// were discarded below `mag` already; callers that can lose bits supply at
/// least `prec + 2` bits so the flag only breaks ties.
fn round_mag(mag: BigUint, exp: i64, prec: u32, sticky: bool) -> (BigUint, i64) {
    let bits = mag.bits();
    if bits <= prec as u64 {
        return normalize(mag, exp);
    }
    let shift = bits - prec as u64;
    let mut q = &mag >> shift;
    let half = mag.bit(shift - 1);
    let lower = sticky || mag.trailing_zeros().unwrap_or(0) < shift - 1;
    if half && (lower || q.bit(0)) {
        q += 1u32;
    }
    normalize(q, exp + shift as i64)
}

impl BigFloat {
    fn from_parts(neg: bool, mag: BigUint, exp: i64, prec: u32, sticky: bool) -> Self {
        let prec = prec.max(MIN_PRECISION);
        let (mag, exp) = round_mag(mag, exp, prec, sticky);
        let neg = neg && !mag.is_zero();
        BigFloat { neg, mag, exp, prec }
    }

    pub fn zero(prec: u32) -> Self {
        BigFloat { neg: false, mag: BigUint::zero(), exp: 0, prec: prec.max(MIN_PRECISION) }
    }

    pub fn one(prec: u32) -> Self {
        Self::from_i64(1, prec)
    }

    pub fn from_i64(v: i64, prec: u32) -> Self {
        Self::from_parts(v < 0, BigUint::from(v.unsigned_abs()), 0, prec, false)
    }

    pub fn from_bigint(v: &BigInt, prec: u32) -> Self {
        Self::from_parts(v.is_negative(), v.magnitude().clone(), 0, prec, false)
    }

    /// Exact conversion of a finite `f64` (rounded if `prec < 53`).
    pub fn from_f64(v: f64, prec: u32) -> Self {
        assert!(v.is_finite(), "BigFloat::from_f64 requires a finite value");
        if v == 0.0 {
            return Self::zero(prec);
        }
        let bits = v.to_bits();
        let neg = (bits >> 63) != 0;
        let biased = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (mant, exp) = if biased == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), biased - 1075)
        };
        Self::from_parts(neg, BigUint::from(mant), exp, prec, false)
    }

    /// Correctly rounded `num / den`.
    pub fn from_ratio(num: &BigInt, den: &BigInt, prec: u32) -> Self {
        assert!(!den.is_zero(), "BigFloat::from_ratio with zero denominator");
        let prec = prec.max(MIN_PRECISION);
        if num.is_zero() {
            return Self::zero(prec);
        }
        let neg = num.is_negative() != den.is_negative();
        let (n, d) = (num.magnitude(), den.magnitude());
        let want = prec as i64 + 2 + d.bits() as i64 - n.bits() as i64;
        let shift = want.max(0) as u64;
        let (q, r) = (n << shift).div_rem(d);
        Self::from_parts(neg, q, -(shift as i64), prec, !r.is_zero())
    }

    /// Correctly rounded conversion of an exact rational.
    pub fn from_rational(r: &BigRational, prec: u32) -> Self {
        Self::from_ratio(r.numer(), r.denom(), prec)
    }

    /// Parses a decimal or rational literal and rounds it to `prec` bits.
    pub fn parse(s: &str, prec: u32) -> Result<Self> {
        Ok(Self::from_rational(&parse_rational(s)?, prec))
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    /// The same value rounded (or relabelled) to `prec` bits.
    pub fn with_precision(&self, prec: u32) -> Self {
        Self::from_parts(self.neg, self.mag.clone(), self.exp, prec, false)
    }

    pub fn is_zero(&self) -> bool {
        self.mag.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.neg
    }

    pub fn signum(&self) -> i32 {
        if self.is_zero() {
            0
        } else if self.neg {
            -1
        } else {
            1
        }
    }

    pub fn abs(&self) -> Self {
        BigFloat { neg: false, ..self.clone() }
    }

    /// `e` with `2^(e-1) <= |self| < 2^e`, or `None` for zero.
    pub fn mag_exp(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.exp + self.mag.bits() as i64)
        }
    }

    /// `self · 2^k`, exact.
    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        BigFloat { exp: self.exp + k, ..self.clone() }
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.mag.bits();
        let sh = bits.saturating_sub(64);
        let top = (&self.mag >> sh).to_u64().unwrap_or(u64::MAX) as f64;
        let mut e = self.exp + sh as i64;
        let mut v = top;
        while e > 0 {
            let step = e.min(1000);
            v *= 2f64.powi(step as i32);
            e -= step;
            if v.is_infinite() {
                break;
            }
        }
        while e < 0 {
            let step = (-e).min(1000);
            v /= 2f64.powi(step as i32);
            e += step;
            if v == 0.0 {
                break;
            }
        }
        if self.neg {
            -v
        } else {
            v
        }
    }

    /// Exact value as a rational.
    pub fn to_rational(&self) -> BigRational {
        let m = BigInt::from_biguint(if self.neg { Sign::Minus } else { Sign::Plus }, self.mag.clone());
        if self.exp >= 0 {
            BigRational::from_integer(m << self.exp as u64)
        } else {
            BigRational::new(m, BigInt::one() << (-self.exp) as u64)
        }
    }

    /// Nearest integer, ties to even.
    pub fn round_to_bigint(&self) -> BigInt {
        let mag = if self.exp >= 0 {
            &self.mag << self.exp as u64
        } else {
            let shift = (-self.exp) as u64;
            let q = &self.mag >> shift;
            let half = self.mag.bit(shift - 1);
            let lower = self.mag.trailing_zeros().unwrap_or(0) < shift - 1;
            if half && (lower || q.bit(0)) {
                q + 1u32
            } else {
                q
            }
        };
        BigInt::from_biguint(if self.neg { Sign::Minus } else { Sign::Plus }, mag)
    }

    /// `round(self · 2^wp)` as a signed integer (fixed-point view).
    pub(crate) fn to_fixed(&self, wp: u32) -> BigInt {
        self.mul_pow2(wp as i64).round_to_bigint()
    }

    /// The fixed-point integer `x / 2^wp` rounded to `prec` bits.
    pub(crate) fn from_fixed(x: &BigInt, wp: u32, prec: u32) -> Self {
        Self::from_parts(x.is_negative(), x.magnitude().clone(), -(wp as i64), prec, false)
    }

    pub fn sqrt(&self) -> Self {
        assert!(!self.neg, "square root of a negative BigFloat");
        if self.is_zero() {
            return self.clone();
        }
        let prec = self.prec;
        let bits = self.mag.bits() as i64;
        let mut shift = (2 * (prec as i64 + 2) - bits).max(0);
        if (self.exp - shift) % 2 != 0 {
            shift += 1;
        }
        let m = &self.mag << shift as u64;
        let r = m.sqrt();
        let sticky = &r * &r != m;
        Self::from_parts(false, r, (self.exp - shift) / 2, prec, sticky)
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn recip(&self) -> Self {
        &Self::one(self.prec) / self
    }

    pub fn powi(&self, n: i64) -> Self {
        let prec = self.prec;
        let guard = 64 - (n.unsigned_abs().leading_zeros()) + 8;
        let wp = prec + guard;
        let mut base = self.with_precision(wp);
        let mut acc = Self::one(wp);
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = base.square();
            }
        }
        if n < 0 {
            acc = acc.recip();
        }
        acc.with_precision(prec)
    }

    pub fn min_prec(&self, other: &Self) -> u32 {
        self.prec.min(other.prec)
    }

    fn add_signed(&self, other: &Self, negate_other: bool) -> Self {
        let prec = self.min_prec(other);
        let other_neg = other.neg != negate_other;
        if other.is_zero() {
            return self.with_precision(prec);
        }
        if self.is_zero() {
            let mut r = other.with_precision(prec);
            r.neg = other_neg && !r.is_zero();
            return r;
        }
        let top_a = self.mag_exp().unwrap();
        let top_b = other.mag_exp().unwrap();
        let far = prec as i64 + 4;
        // Collapse an operand far below the other's last bit to a sticky unit.
        let (a_neg, a_mag, a_exp, b_neg, b_mag, b_exp) = if top_a - top_b > far {
            let e = top_a - far - 2;
            (self.neg, self.mag.clone(), self.exp, other_neg, BigUint::one(), e)
        } else if top_b - top_a > far {
            let e = top_b - far - 2;
            (self.neg, BigUint::one(), e, other_neg, other.mag.clone(), other.exp)
        } else {
            (self.neg, self.mag.clone(), self.exp, other_neg, other.mag.clone(), other.exp)
        };
        let e = a_exp.min(b_exp);
        let a = a_mag << (a_exp - e) as u64;
        let b = b_mag << (b_exp - e) as u64;
        if a_neg == b_neg {
            Self::from_parts(a_neg, a + b, e, prec, false)
        } else {
            match a.cmp(&b) {
                Ordering::Equal => Self::zero(prec),
                Ordering::Greater => Self::from_parts(a_neg, a - b, e, prec, false),
                Ordering::Less => Self::from_parts(b_neg, b - a, e, prec, false),
            }
        }
    }

    fn cmp_mag(&self, other: &Self) -> Ordering {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Ordering::Equal,
            (true, false) => return Ordering::Less,
            (false, true) => return Ordering::Greater,
            _ => {}
        }
        let ta = self.mag_exp().unwrap();
        let tb = other.mag_exp().unwrap();
        if ta != tb {
            return ta.cmp(&tb);
        }
        let e = self.exp.min(other.exp);
        let a = &self.mag << (self.exp - e) as u64;
        let b = &other.mag << (other.exp - e) as u64;
        a.cmp(&b)
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    /// Decimal scientific notation with `digits` significant digits,
    /// correctly rounded (ties to even), e.g. `-1.2345e-7`.
    pub fn to_sci_string(&self, digits: usize) -> String {
        let digits = digits.max(1);
        if self.is_zero() {
            return "0".to_string();
        }
        let value = self.to_rational().abs();
        let ten = BigInt::from(10);
        let mut e10 = ((self.mag_exp().unwrap() - 1) as f64 * std::f64::consts::LOG10_2).floor() as i64;
        let lo = ten.pow(digits as u32 - 1);
        let hi = &lo * &ten;
        loop {
            let k = digits as i64 - 1 - e10;
            let scaled = if k >= 0 {
                &value * BigRational::from_integer(ten.pow(k as u32))
            } else {
                &value / BigRational::from_integer(ten.pow((-k) as u32))
            };
            let n = round_half_even(&scaled);
            if n >= hi {
                e10 += 1;
                continue;
            }
            if n < lo {
                e10 -= 1;
                continue;
            }
            let s = n.to_string();
            let sign = if self.neg { "-" } else { "" };
            return if digits == 1 {
                format!("{sign}{s}e{e10}")
            } else {
                format!("{sign}{}.{}e{e10}", &s[..1], &s[1..])
            };
        }
    }
}

fn round_half_even(r: &BigRational) -> BigInt {
    let (q, rem) = r.numer().div_rem(r.denom());
    let twice: BigInt = &rem * 2;
    match twice.cmp(r.denom()) {
        Ordering::Less => q,
        Ordering::Greater => q + 1,
        Ordering::Equal => {
            if q.is_even() {
                q
            } else {
                q + 1
            }
        }
    }
}

impl fmt::Debug for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{} bits]", self.to_sci_string(20), self.prec)
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(((self.prec as f64) * std::f64::consts::LOG10_2) as usize);
        f.write_str(&self.to_sci_string(digits))
    }
}

impl PartialEq for BigFloat {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for BigFloat {}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BigFloat {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.signum(), other.signum()) {
            (a, b) if a != b => a.cmp(&b),
            (-1, _) => other.cmp_mag(self),
            _ => self.cmp_mag(other),
        }
    }
}

impl Neg for &BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        BigFloat { neg: !self.neg && !self.is_zero(), ..self.clone() }
    }
}

impl Neg for BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        -&self
    }
}

impl Add for &BigFloat {
    type Output = BigFloat;
    fn add(self, rhs: &BigFloat) -> BigFloat {
        self.add_signed(rhs, false)
    }
}

impl Sub for &BigFloat {
    type Output = BigFloat;
    fn sub(self, rhs: &BigFloat) -> BigFloat {
        self.add_signed(rhs, true)
    }
}

impl Mul for &BigFloat {
    type Output = BigFloat;
    fn mul(self, rhs: &BigFloat) -> BigFloat {
        let prec = self.min_prec(rhs);
        if self.is_zero() || rhs.is_zero() {
            return BigFloat::zero(prec);
        }
        BigFloat::from_parts(self.neg != rhs.neg, &self.mag * &rhs.mag, self.exp + rhs.exp, prec, false)
    }
}

impl Div for &BigFloat {
    type Output = BigFloat;
    fn div(self, rhs: &BigFloat) -> BigFloat {
        assert!(!rhs.is_zero(), "BigFloat division by zero");
        let prec = self.min_prec(rhs);
        if self.is_zero() {
            return BigFloat::zero(prec);
        }
        let want = prec as i64 + 2 + rhs.mag.bits() as i64 - self.mag.bits() as i64;
        let shift = want.max(0) as u64;
        let (q, r) = (&self.mag << shift).div_rem(&rhs.mag);
        BigFloat::from_parts(
            self.neg != rhs.neg,
            q,
            self.exp - rhs.exp - shift as i64,
            prec,
            !r.is_zero(),
        )
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<BigFloat> for BigFloat {
            type Output = BigFloat;
            fn $m(self, rhs: BigFloat) -> BigFloat { (&self).$m(&rhs) }
        }
        impl $tr<&BigFloat> for BigFloat {
            type Output = BigFloat;
            fn $m(self, rhs: &BigFloat) -> BigFloat { (&self).$m(rhs) }
        }
        impl $tr<BigFloat> for &BigFloat {
            type Output = BigFloat;
            fn $m(self, rhs: BigFloat) -> BigFloat { self.$m(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);
