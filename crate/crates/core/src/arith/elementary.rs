//! Elementary transcendental functions on [`BigFloat`].
//!
//! Kernels run in fixed point (`BigInt` scaled by `2^wp`) with a guard
//! margin above the caller's precision, then round once. Results are
//! accurate to a few ulps; they are not claimed to be correctly rounded.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::float::BigFloat;

const GUARD: u32 = 32;

type ConstCache = Mutex<HashMap<u32, BigFloat>>;

fn cached(cache: &'static OnceLock<ConstCache>, prec: u32, compute: impl FnOnce(u32) -> BigFloat) -> BigFloat {
    let map = cache.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = map.lock().unwrap().get(&prec) {
        return v.clone();
    }
    let v = compute(prec);
    map.lock().unwrap().entry(prec).or_insert(v).clone()
}

/// `sum_j (-1)^j / ((2j+1) k^(2j+1))` in fixed point.
fn atan_inv_fixed(k: u32, wp: u32) -> BigInt {
    let k2 = BigInt::from(k) * k;
    let mut power = (BigInt::one() << wp) / k;
    let mut sum = BigInt::zero();
    let mut j = 0u64;
    while !power.is_zero() {
        let term = &power / (2 * j + 1);
        if j.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &k2;
        j += 1;
    }
    sum
}

/// `sum_j 1 / ((2j+1) k^(2j+1))` in fixed point.
fn atanh_inv_fixed(k: u32, wp: u32) -> BigInt {
    let k2 = BigInt::from(k) * k;
    let mut power = (BigInt::one() << wp) / k;
    let mut sum = BigInt::zero();
    let mut j = 0u64;
    while !power.is_zero() {
        sum += &power / (2 * j + 1);
        power /= &k2;
        j += 1;
    }
    sum
}

static PI: OnceLock<ConstCache> = OnceLock::new();
static LN2: OnceLock<ConstCache> = OnceLock::new();
static SQRT_PI: OnceLock<ConstCache> = OnceLock::new();

/// π to `prec` bits (Machin's formula), cached per precision.
pub fn pi(prec: u32) -> BigFloat {
    cached(&PI, prec, |p| {
        let wp = p + GUARD;
        let v = atan_inv_fixed(5, wp) * 16 - atan_inv_fixed(239, wp) * 4;
        BigFloat::from_fixed(&v, wp, p)
    })
}

/// ln 2 = 2 atanh(1/3), cached per precision.
pub fn ln2(prec: u32) -> BigFloat {
    cached(&LN2, prec, |p| {
        let wp = p + GUARD;
        BigFloat::from_fixed(&(atanh_inv_fixed(3, wp) * 2), wp, p)
    })
}

pub fn sqrt_pi(prec: u32) -> BigFloat {
    cached(&SQRT_PI, prec, |p| pi(p + 8).sqrt().with_precision(p))
}

/// Fixed-point product, truncated toward zero so series terms reach zero.
fn fmul(a: &BigInt, b: &BigInt, wp: u32) -> BigInt {
    let p = a * b;
    if p.is_negative() {
        -((-p) >> wp)
    } else {
        p >> wp
    }
}

fn halvings(wp: u32) -> u32 {
    ((wp as f64).sqrt() / 2.0).ceil() as u32 + 2
}

impl BigFloat {
    /// `e^self`.
    pub fn exp(&self) -> BigFloat {
        let prec = self.precision();
        if self.is_zero() {
            return BigFloat::one(prec);
        }
        let top = self.mag_exp().unwrap().max(0) as u32;
        let s = halvings(prec);
        let wp = prec + GUARD + s;
        // x = k ln2 + r with |r| <= ln2 / 2
        let lnp = ln2(wp + top + 8);
        let x = self.with_precision(wp + top + 8);
        let k = (&x / &lnp).round_to_bigint();
        let kf = BigFloat::from_bigint(&k, wp + top + 8);
        let r = &x - &(&kf * &lnp);
        let rx = r.to_fixed(wp) >> s;
        let one = BigInt::one() << wp;
        let mut sum = one.clone();
        let mut term = one;
        let mut j = 1u64;
        loop {
            term = fmul(&term, &rx, wp) / j;
            if term.is_zero() {
                break;
            }
            sum += &term;
            j += 1;
        }
        for _ in 0..s {
            sum = fmul(&sum, &sum, wp);
        }
        let k = k.to_i64().expect("exponent overflow in BigFloat::exp");
        BigFloat::from_fixed(&sum, wp, prec).mul_pow2(k)
    }

    /// Natural logarithm of a positive value.
    pub fn ln(&self) -> BigFloat {
        assert!(!self.is_negative() && !self.is_zero(), "ln of a nonpositive BigFloat");
        let prec = self.precision();
        let roots = 8u32;
        let wp = prec + GUARD + roots;
        // self = m 2^e with m in [1/sqrt2, sqrt2)
        let mut e = self.mag_exp().unwrap() - 1;
        let mut m = self.with_precision(wp + 8).mul_pow2(-e);
        if m.to_f64() > std::f64::consts::SQRT_2 {
            m = m.mul_pow2(-1);
            e += 1;
        }
        if m == BigFloat::one(wp) && e == 0 {
            return BigFloat::zero(prec);
        }
        for _ in 0..roots {
            m = m.sqrt();
        }
        let one = BigFloat::one(wp + 8);
        let t = (&m - &one) / (&m + &one);
        let tx = t.to_fixed(wp);
        let t2 = fmul(&tx, &tx, wp);
        let mut power = tx;
        let mut sum = BigInt::zero();
        let mut j = 1u64;
        while !power.is_zero() {
            sum += &power / j;
            power = fmul(&power, &t2, wp);
            j += 2;
        }
        let ln_m = BigFloat::from_fixed(&(sum << (roots + 1)), wp, wp);
        let e_part = &BigFloat::from_i64(e, wp) * &ln2(wp + 64);
        (&ln_m + &e_part).with_precision(prec)
    }

    /// `(sin self, cos self)`, absolute error a few units of `2^-prec`.
    pub fn sin_cos(&self) -> (BigFloat, BigFloat) {
        let prec = self.precision();
        let (c, s) = sin_cos_at(self, prec + GUARD);
        // Recover relative accuracy for results that land near zero.
        let small = |v: &BigFloat| v.mag_exp().is_none_or(|e| e < -16);
        if small(&c) || small(&s) {
            let lost = c.mag_exp().unwrap_or(-(prec as i64)).min(s.mag_exp().unwrap_or(-(prec as i64)));
            let extra = (-lost).clamp(0, 4 * prec as i64) as u32;
            let (c, s) = sin_cos_at(self, prec + GUARD + extra);
            return (s.with_precision(prec), c.with_precision(prec));
        }
        (s.with_precision(prec), c.with_precision(prec))
    }

    pub fn sin(&self) -> BigFloat {
        self.sin_cos().0
    }

    pub fn cos(&self) -> BigFloat {
        self.sin_cos().1
    }

    pub fn atan(&self) -> BigFloat {
        let prec = self.precision();
        if self.is_zero() {
            return BigFloat::zero(prec);
        }
        let wp = prec + GUARD;
        let one = BigFloat::one(wp);
        let x = self.with_precision(wp);
        if x.abs() > one {
            let half_pi = pi(wp).mul_pow2(-1);
            let inner = x.recip().atan();
            let r = if x.is_negative() { -half_pi - inner } else { half_pi - inner };
            return r.with_precision(prec);
        }
        // atan x = 2 atan(x / (1 + sqrt(1 + x^2)))
        let reductions = 8u32;
        let mut t = x;
        for _ in 0..reductions {
            t = &t / &(&one + &(&one + &t.square()).sqrt());
        }
        let tx = t.to_fixed(wp);
        let t2 = fmul(&tx, &tx, wp);
        let mut power = tx;
        let mut sum = BigInt::zero();
        let mut j = 0u64;
        while !power.is_zero() {
            let term = &power / (2 * j + 1);
            if j.is_multiple_of(2) {
                sum += term;
            } else {
                sum -= term;
            }
            power = fmul(&power, &t2, wp);
            j += 1;
        }
        BigFloat::from_fixed(&(sum << reductions), wp, prec)
    }

    /// Arcsine on `[-1, 1]`.
    pub fn asin(&self) -> BigFloat {
        let prec = self.precision();
        let wp = prec + GUARD;
        let one = BigFloat::one(wp);
        let x = self.with_precision(wp);
        let a = x.abs();
        assert!(a <= one, "asin argument outside [-1, 1]");
        if a == one {
            let h = pi(prec).mul_pow2(-1);
            return if x.is_negative() { -h } else { h };
        }
        let c = (&(&one - &x) * &(&one + &x)).sqrt();
        (&x / &c).atan().with_precision(prec)
    }

    /// Positive real `k`-th root of a positive value.
    pub fn root(&self, k: u32) -> BigFloat {
        assert!(k >= 1);
        let prec = self.precision();
        if k == 1 || self.is_zero() {
            return self.clone();
        }
        if k == 2 {
            return self.sqrt();
        }
        assert!(!self.is_negative(), "even or general root of a negative BigFloat");
        let wp = prec + GUARD;
        let x = self.with_precision(wp);
        // Initial guess from the binary exponent and a double-precision mantissa.
        let e = x.mag_exp().unwrap();
        let q = e.div_euclid(k as i64);
        let rem = x.mul_pow2(-q * k as i64).to_f64();
        let mut y = BigFloat::from_f64(rem.powf(1.0 / k as f64), wp).mul_pow2(q);
        let kf = BigFloat::from_i64(k as i64, wp);
        let km1 = BigFloat::from_i64(k as i64 - 1, wp);
        for _ in 0..64 {
            let next = &(&(&km1 * &y) + &(&x / &y.powi(k as i64 - 1))) / &kf;
            let diff = (&next - &y).abs();
            y = next;
            let settled = diff.mag_exp().is_none_or(|d| d < y.mag_exp().unwrap() - wp as i64 + 4);
            if settled {
                break;
            }
        }
        y.with_precision(prec)
    }

    /// `self^(num/den)` for a positive base.
    pub fn pow_ratio(&self, num: i64, den: u32) -> BigFloat {
        let prec = self.precision();
        let wp = prec + GUARD;
        self.with_precision(wp).root(den).powi(num).with_precision(prec)
    }
}

/// Sine and cosine in fixed point at working precision `wp`.
fn sin_cos_at(x: &BigFloat, wp: u32) -> (BigFloat, BigFloat) {
    if x.is_zero() {
        return (BigFloat::one(wp), BigFloat::zero(wp));
    }
    let top = x.mag_exp().unwrap().max(0) as u32;
    let s = halvings(wp);
    let wq = wp + s + 8;
    // x = k pi/2 + r, |r| <= pi/4
    let rp = wq + top + 8;
    let half_pi = pi(rp).mul_pow2(-1);
    let xr = x.with_precision(rp);
    let k = (&xr / &half_pi).round_to_bigint();
    let r = &xr - &(&BigFloat::from_bigint(&k, rp) * &half_pi);
    let rx = r.to_fixed(wq) >> s;
    let one = BigInt::one() << wq;
    let mut c = one.clone();
    let mut sn = BigInt::zero();
    let mut term = one;
    let mut j = 1u64;
    loop {
        term = fmul(&term, &rx, wq) / j;
        if term.is_zero() {
            break;
        }
        match j % 4 {
            1 => sn += &term,
            2 => c -= &term,
            3 => sn -= &term,
            _ => c += &term,
        }
        j += 1;
    }
    for _ in 0..s {
        let c2 = fmul(&c, &c, wq) - fmul(&sn, &sn, wq);
        sn = fmul(&c, &sn, wq - 1);
        c = c2;
    }
    let quadrant = k.mod_floor_4();
    let (c, sn) = match quadrant {
        0 => (c, sn),
        1 => (-sn, c),
        2 => (-c, -sn),
        _ => (sn, -c),
    };
    (BigFloat::from_fixed(&c, wq, wp), BigFloat::from_fixed(&sn, wq, wp))
}

trait Mod4 {
    fn mod_floor_4(&self) -> u8;
}

impl Mod4 for BigInt {
    fn mod_floor_4(&self) -> u8 {
        let r = (self % 4u32).to_i64().unwrap();
        (if r < 0 { r + 4 } else { r }) as u8
    }
}
