//! Approximants on the segment `z = iy` and at its endpoint `z = i`.

use num_rational::BigRational;
use num_traits::{One, Signed};

use super::guard_for;
use crate::arith::{gamma_one_third, pi, BigComplex, BigFloat};
use crate::error::{Error, Result};

fn check_open_unit(y: &BigRational) -> Result<()> {
    if !y.is_positive() || *y >= BigRational::one() {
        return Err(Error::InvalidParameter(format!("need 0 < y < 1, got {y}")));
    }
    Ok(())
}

fn check_degree(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("need n >= 1".into()));
    }
    Ok(())
}

/// `√(1-y²)/y`, `asin y` folded into the phase `n(√(1-y²)/y + asin y) - π/4`,
/// returned as `(y, √(1-y²), cos phase, sin phase)` at `wp` bits.
fn segment_phase(n: u64, y: &BigRational, wp: u32) -> (BigFloat, BigFloat, BigFloat, BigFloat) {
    let yf = BigFloat::from_rational(y, wp);
    let c = (&BigFloat::one(wp) - &yf.square()).sqrt();
    let bracket = &(&c / &yf) + &yf.asin();
    let arg = &(&BigFloat::from_bigint(&n.into(), wp) * &bracket) - &pi(wp).mul_pow2(-2);
    let (s, co) = arg.sin_cos();
    (yf, c, co, s)
}

/// The amplitude `(nπy / (2√(1-y²)))^{1/2}` and the oscillating factor
/// (`cos` for even `n`, `sin` for odd `n`) of the segment approximant.
pub fn segment_terms(n: u64, y: &BigRational, prec: u32) -> Result<(BigFloat, BigFloat)> {
    check_open_unit(y)?;
    let wp = prec + guard_for(n);
    let (yf, c, co, s) = segment_phase(n, y, wp);
    let nf = BigFloat::from_bigint(&n.into(), wp);
    let amplitude = (&(&(&nf * &pi(wp)) * &yf) / &c.mul_pow2(1)).sqrt();
    let osc = if n.is_multiple_of(2) { co } else { s };
    Ok((amplitude.with_precision(prec), osc.with_precision(prec)))
}

/// `-(nπy / (2√(1-y²)))^{1/2} · {cos, sin}[n(√(1-y²)/y + asin y) - π/4]`
/// for `n` even, odd; approximates [`crate::hyper::target_quantity`].
pub fn segment_approx(n: u64, y: &BigRational, prec: u32) -> Result<BigFloat> {
    let (amplitude, osc) = segment_terms(n, y, prec + 8)?;
    Ok((-(&amplitude * &osc)).with_precision(prec))
}

/// Stationary-phase approximant of `I_n^-` on `0 < y < 1`:
/// `2y (2πy / (n√(1-y²)))^{1/2} cos[…]` for even `n`,
/// `-2iy (…)^{1/2} sin[…]` for odd `n`.
pub fn i_minus_approx(n: u64, y: &BigRational, prec: u32) -> Result<BigComplex> {
    check_open_unit(y)?;
    check_degree(n)?;
    let wp = prec + guard_for(n);
    let (yf, c, co, s) = segment_phase(n, y, wp);
    let nf = BigFloat::from_bigint(&n.into(), wp);
    let root = (&(&pi(wp).mul_pow2(1) * &yf) / &(&nf * &c)).sqrt();
    let envelope = &yf.mul_pow2(1) * &root;
    let zero = BigFloat::zero(wp);
    let value = if n.is_multiple_of(2) {
        BigComplex::new(&envelope * &co, zero)
    } else {
        BigComplex::new(zero, -(&envelope * &s))
    };
    Ok(value.with_precision(prec))
}

/// `6^{1/3} Γ(1/3) / (4√3)`, the modulus of the endpoint approximant over `n^{2/3}`.
pub fn endpoint_coefficient(prec: u32) -> BigFloat {
    let wp = prec + 32;
    let six_cbrt = BigFloat::from_i64(6, wp).root(3);
    let sqrt3 = BigFloat::from_i64(3, wp).sqrt();
    (&(&six_cbrt * &gamma_one_third(wp)) / &sqrt3.mul_pow2(2)).with_precision(prec)
}

/// Endpoint approximant at `z = i`:
/// `-6^{1/3} Γ(1/3) (-1)^{n/2} / (4√3 y) · n^{2/3}` for even `n` and
/// `6^{1/3} Γ(1/3) (-1)^{(n+1)/2} / (4√3 y) · n^{2/3}` for odd `n`.
pub fn endpoint_approx(n: u64, prec: u32) -> Result<BigFloat> {
    check_degree(n)?;
    let wp = prec + guard_for(n);
    // The formula carries a 1/y; at the endpoint y = 1.
    let y = BigFloat::one(wp);
    let coefficient = &endpoint_coefficient(wp) / &y;
    let n_two_thirds = BigFloat::from_bigint(&n.into(), wp).pow_ratio(2, 3);
    let magnitude = &coefficient * &n_two_thirds;
    let negative = if n.is_multiple_of(2) {
        // -(-1)^{n/2}
        (n / 2).is_multiple_of(2)
    } else {
        // (-1)^{(n+1)/2}
        n.div_ceil(2) % 2 == 1
    };
    let v = if negative { -magnitude } else { magnitude };
    Ok(v.with_precision(prec))
}

/// `Γ(1/3) (-i)^n / √3 · (6/n)^{1/3}`.
pub fn i_minus_endpoint_approx(n: u64, prec: u32) -> Result<BigComplex> {
    check_degree(n)?;
    let wp = prec + guard_for(n);
    let ratio = &BigFloat::from_i64(6, wp) / &BigFloat::from_bigint(&n.into(), wp);
    let modulus = &(&gamma_one_third(wp) * &ratio.root(3)) / &BigFloat::from_i64(3, wp).sqrt();
    let zero = BigFloat::zero(wp);
    let value = match n % 4 {
        0 => BigComplex::new(modulus, zero),
        1 => BigComplex::new(zero, -modulus),
        2 => BigComplex::new(-modulus, zero),
        _ => BigComplex::new(zero, modulus),
    };
    Ok(value.with_precision(prec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, rat};

    const P: u32 = 128;

    fn rel(a: &BigFloat, b: &BigFloat) -> f64 {
        (a - b).abs().to_f64() / b.abs().to_f64()
    }

    #[test]
    fn amplitude_at_one_half() {
        for n in [10u64, 77, 400] {
            let (amp, _) = segment_terms(n, &rat(1, 2), P).unwrap();
            let expected = (n as f64 * std::f64::consts::PI / (2.0 * 3f64.sqrt())).sqrt();
            assert!((amp.to_f64() / expected - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn phase_increment_at_one_half() {
        // Consecutive even n share the cosine; stepping n by 2 advances the
        // phase by 2(√3 + π/6).
        let step = 2.0 * (3f64.sqrt() + std::f64::consts::PI / 6.0);
        for n in [20u64, 100] {
            let (_, a) = segment_terms(n, &rat(1, 2), P).unwrap();
            let (_, b) = segment_terms(n + 2, &rat(1, 2), P).unwrap();
            let base = n as f64 * (3f64.sqrt() + std::f64::consts::PI / 6.0) - std::f64::consts::FRAC_PI_4;
            assert!((a.to_f64() - base.cos()).abs() < 1e-12);
            assert!((b.to_f64() - (base + step).cos()).abs() < 1e-12);
        }
    }

    #[test]
    fn domain_checks() {
        assert!(segment_approx(10, &int(1), P).is_err());
        assert!(segment_approx(10, &int(0), P).is_err());
        assert!(segment_approx(10, &rat(-1, 2), P).is_err());
        assert!(endpoint_approx(0, P).is_err());
        assert!(i_minus_endpoint_approx(0, P).is_err());
        assert!(i_minus_approx(0, &rat(1, 2), P).is_err());
    }

    #[test]
    fn endpoint_magnitude_and_sign_pattern() {
        let coef = endpoint_coefficient(P);
        // mpmath: cbrt(6) gamma(1/3) / (4 sqrt 3)
        assert!((coef.to_f64() - 0.702_628_692_685_654).abs() < 1e-15);
        let signs: Vec<i32> = (1..=8).map(|n| endpoint_approx(n, P).unwrap().signum()).collect();
        // odd: (-1)^{(n+1)/2} -> n=1: -, n=3: +; even: -(-1)^{n/2} -> n=2: +, n=4: -
        assert_eq!(signs, vec![-1, 1, 1, -1, -1, 1, 1, -1]);
        for n in [1u64, 8, 1000] {
            let v = endpoint_approx(n, P).unwrap().abs();
            let scaled = &v / &BigFloat::from_i64(n as i64, P).pow_ratio(2, 3);
            assert!(rel(&scaled, &coef) < 1e-30);
        }
    }

    #[test]
    fn endpoint_i_minus_rotates() {
        let m = i_minus_endpoint_approx(5, P).unwrap();
        for n in 5..9u64 {
            let a = i_minus_endpoint_approx(n, P).unwrap();
            assert!(rel(&a.abs(), &m.abs()) < 1e-10 * ((n as f64 / 5.0).powf(1.0 / 3.0)) + 0.2);
            let b = i_minus_endpoint_approx(n + 1, P).unwrap();
            // b / a = (-i) (n/(n+1))^{1/3}
            let q = &b / &a;
            let s = (n as f64 / (n as f64 + 1.0)).cbrt();
            assert!(q.re.to_f64().abs() < 1e-30 && (q.im.to_f64() + s).abs() < 1e-14);
        }
        let one = i_minus_endpoint_approx(1, P).unwrap();
        let expected = crate::arith::gamma_one_third(P).to_f64() * 6f64.cbrt() / 3f64.sqrt();
        assert!((one.im.to_f64() + expected).abs() < 1e-14);
    }

    #[test]
    fn i_minus_parity_and_envelope() {
        let y = rat(1, 2);
        for n in [40u64, 41] {
            let v = i_minus_approx(n, &y, P).unwrap();
            let envelope = 2.0 * 0.5 * (2.0 * std::f64::consts::PI * 0.5 / (n as f64 * 3f64.sqrt() / 2.0)).sqrt();
            if n % 2 == 0 {
                assert!(v.im.is_zero());
            } else {
                assert!(v.re.is_zero());
            }
            assert!(v.abs().to_f64() <= envelope * (1.0 + 1e-14));
        }
    }

    /// `S ≈ -(in/2y) I_n^-` and the target is `S/(2i)` or `S/2`.
    fn chain(n: u64, y: &BigFloat, i_minus: &BigComplex) -> BigFloat {
        let nf = BigFloat::from_i64(n as i64, P + 32);
        let s = i_minus.mul_i().scale(&-(&nf / &y.mul_pow2(1)));
        if n.is_multiple_of(2) {
            s.im.mul_pow2(-1)
        } else {
            s.re.mul_pow2(-1)
        }
    }

    #[test]
    fn segment_matches_i_minus_chain() {
        for y in [rat(1, 4), rat(1, 2), rat(3, 4)] {
            let yf = BigFloat::from_rational(&y, P + 32);
            for n in [3u64, 10, 51, 200] {
                let lhs = segment_approx(n, &y, P).unwrap();
                let rhs = chain(n, &yf, &i_minus_approx(n, &y, P + 32).unwrap());
                let d = (&lhs - &rhs).abs();
                assert!(d.is_zero() || d.mag_exp().unwrap() <= lhs.mag_exp().unwrap_or(0) - P as i64 + 8);
            }
        }
    }

    #[test]
    fn endpoint_matches_i_minus_chain() {
        let one = BigFloat::one(P + 32);
        for n in 1..=12u64 {
            let lhs = endpoint_approx(n, P).unwrap();
            let rhs = chain(n, &one, &i_minus_endpoint_approx(n, P + 32).unwrap());
            let d = (&lhs - &rhs).abs();
            assert!(d.is_zero() || d.mag_exp().unwrap() <= lhs.mag_exp().unwrap() - P as i64 + 8, "n = {n}");
        }
    }
}
