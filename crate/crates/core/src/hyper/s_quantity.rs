//! The combination `S` of the family at `±iy` and its parity-reduced form.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::family::{f3f1_exact, PolyParams};
use crate::arith::{BigComplex, BigFloat, GaussianRational};
use crate::error::{Error, Result};

const GUARD: u32 = 32;

fn check_y(y: &BigRational, allow_negative: bool) -> Result<()> {
    if y.is_zero() {
        return Err(Error::InvalidParameter("y must be nonzero".into()));
    }
    if y.abs() > BigRational::one() {
        return Err(Error::InvalidParameter(format!("|y| must not exceed 1, got {y}")));
    }
    if !allow_negative && y.is_negative() {
        return Err(Error::InvalidParameter(format!(
            "negative y is only reachable by conjugation, got {y}"
        )));
    }
    Ok(())
}

/// `e^{-in/y} F_n(iy)` at `prec + GUARD` bits, with `α = 1`.
fn rotated(n: u64, y: &BigRational, wp: u32) -> (BigComplex, BigComplex) {
    let params = PolyParams::new(n, 1).expect("alpha = 1");
    let f = f3f1_exact(&params, &GaussianRational::imag(y.clone()));
    let theta = BigFloat::from_rational(&(BigRational::from_integer(n.into()) / y), wp);
    let e = BigComplex::exp_unit(&theta);
    (e, BigComplex::from_gaussian(&f, wp))
}

/// `S = (-1)^{n+1} e^{in/y} F_n(-iy) + e^{-in/y} F_n(iy)` with `α = 1`.
pub fn compute_s(n: u64, y: &BigRational, prec: u32) -> Result<BigComplex> {
    check_y(y, true)?;
    let wp = prec + GUARD;
    let params = PolyParams::new(n, 1).expect("alpha = 1");
    let f_plus = BigComplex::from_gaussian(&f3f1_exact(&params, &GaussianRational::imag(y.clone())), wp);
    let f_minus = BigComplex::from_gaussian(&f3f1_exact(&params, &GaussianRational::imag(-y)), wp);
    let theta = BigFloat::from_rational(&(BigRational::from_integer(n.into()) / y), wp);
    let e = BigComplex::exp_unit(&theta);
    let first = &e * &f_minus;
    let first = if n % 2 == 1 { first } else { -first };
    let s = &first + &(&e.conj() * &f_plus);
    Ok(s.with_precision(prec))
}

/// `Im{e^{-in/y} F_n(iy)}` for even `n`, `Re{…}` for odd `n`, `0 < y <= 1`.
pub fn target_quantity(n: u64, y: &BigRational, prec: u32) -> Result<BigFloat> {
    check_y(y, false)?;
    let (e, f) = rotated(n, y, prec + GUARD);
    let v = &e.conj() * &f;
    let part = if n.is_multiple_of(2) { v.im } else { v.re };
    Ok(part.with_precision(prec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::rat;

    fn within(a: &BigFloat, b: &BigFloat, scale: &BigFloat, bits: i64) -> bool {
        let d = (a - b).abs();
        d.is_zero() || scale.is_zero() || d.mag_exp().unwrap() <= scale.mag_exp().unwrap() - bits
    }

    #[test]
    fn first_degree_values() {
        let p = 128;
        let y = rat(1, 2);
        let two = BigFloat::from_i64(2, p + 32);
        let (s2, c2) = two.sin_cos();
        // Re{e^{-2i}(1 - i/2)} = cos 2 - sin 2 / 2
        let expected = (&c2 - &s2.mul_pow2(-1)).with_precision(p);
        let t = target_quantity(1, &y, p).unwrap();
        assert!(within(&t, &expected, &expected, p as i64 - 2));
        let s = compute_s(1, &y, p).unwrap();
        assert!(within(&s.re, &expected.mul_pow2(1), &expected, p as i64 - 3));
        assert!(within(&s.im, &BigFloat::zero(p), &expected, p as i64 - 3));
    }

    #[test]
    fn rejects_bad_y() {
        assert!(compute_s(3, &rat(0, 1), 64).is_err());
        assert!(compute_s(3, &rat(5, 4), 64).is_err());
        assert!(compute_s(3, &rat(-1, 2), 64).is_ok());
        assert!(target_quantity(3, &rat(-1, 2), 64).is_err());
        assert!(target_quantity(3, &rat(0, 1), 64).is_err());
    }

    #[test]
    fn s_matches_target_quantity() {
        let p = 160;
        for n in [2u64, 3, 10, 37, 64] {
            for y in [rat(1, 3), rat(3, 4), rat(1, 1)] {
                let s = compute_s(n, &y, p).unwrap();
                let t = target_quantity(n, &y, p).unwrap();
                let part = if n % 2 == 0 { &s.im } else { &s.re };
                assert!(within(&part.mul_pow2(-1), &t, &s.abs(), p as i64 - 8), "n={n} y={y}");
            }
        }
    }

    #[test]
    fn parity_of_s() {
        let p = 96;
        for y in [rat(1, 4), rat(1, 2), rat(3, 4), rat(1, 1)] {
            for n in 1..=200u64 {
                let s = compute_s(n, &y, p).unwrap();
                let (stray, m) = if n % 2 == 0 { (&s.re, s.abs()) } else { (&s.im, s.abs()) };
                assert!(within(stray, &BigFloat::zero(p), &m, p as i64 - 8), "n={n} y={y}");
            }
        }
    }

    #[test]
    fn negative_y_by_conjugation() {
        let p = 128;
        let y = rat(2, 5);
        for n in [4u64, 7] {
            let a = compute_s(n, &y, p).unwrap();
            let b = compute_s(n, &-&y, p).unwrap();
            let expect = a.conj();
            assert!(within(&(&b - &expect).abs(), &BigFloat::zero(p), &a.abs(), p as i64 - 8));
        }
    }
}
