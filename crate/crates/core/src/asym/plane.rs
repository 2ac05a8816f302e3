//! Exterior and interior approximants off the curve.

use super::{guard_for, leading_order, AsymptoticResult};
use crate::arith::{gamma_half_shift, gamma_pos_int, pi, sqrt_pi, BigComplex, BigFloat};
use crate::error::Result;
use crate::geometry::{classify, map_w, phi, Point, RegimeTag, DEFAULT_TOLERANCE};
use crate::hyper::PolyParams;

fn n_float(n: u64, wp: u32) -> BigFloat {
    BigFloat::from_bigint(&n.into(), wp)
}

/// `(-1)^n / Γ(α) · n^{α-1/2} √(π/2) · ((1+s)/z)^{α-1} · (s/z)^{-1/2} · φ(z)^n`
/// with `s = √(z²+1)` on the branch of [`map_w`] and the principal square
/// root for the half power.
pub fn exterior_approx(params: &PolyParams, z: &Point, prec: u32) -> Result<AsymptoticResult> {
    let (n, alpha) = (params.n(), params.alpha());
    classify(z, DEFAULT_TOLERANCE, prec.max(64))?.expect(RegimeTag::Exterior)?;
    let wp = prec + guard_for(n) + 2 * guard_for(alpha as u64);

    let zc = z.to_complex(wp);
    let w = map_w(z, wp);
    let s = &w - &zc;
    let f = phi(z, wp)?;

    let gamma = BigFloat::from_rational(&gamma_pos_int(alpha as i64)?, wp);
    let nf = n_float(n, wp);
    let n_pow = &nf.sqrt().recip() * &nf.powi(alpha as i64);
    let root_half_pi = pi(wp).mul_pow2(-1).sqrt();
    let mut scalar = &(&n_pow * &root_half_pi) / &gamma;
    if n % 2 == 1 {
        scalar = -scalar;
    }
    let one = BigComplex::one(wp);
    let shifted = (&(&one + &s) / &zc).powi(alpha as i64 - 1);
    let ratio_root = (&s / &zc).sqrt().recip();
    let value = (&(&shifted * &ratio_root) * &f.powi(n as i64)).scale(&scalar);
    Ok(AsymptoticResult {
        value: value.with_precision(prec),
        regime: RegimeTag::Exterior,
        leading_order: leading_order(RegimeTag::Exterior, alpha).expect("exterior has an order"),
    })
}

/// `(2/n)^α · Γ(α+1/2)/√π · (-1/z)^α`.
pub fn interior_approx(params: &PolyParams, z: &Point, prec: u32) -> Result<AsymptoticResult> {
    let (n, alpha) = (params.n(), params.alpha());
    classify(z, DEFAULT_TOLERANCE, prec.max(64))?.expect(RegimeTag::Interior)?;
    let wp = prec + guard_for(n) + 2 * guard_for(alpha as u64);
    let two_over_n = &BigFloat::from_i64(2, wp) / &n_float(n, wp);
    let gamma_ratio = &gamma_half_shift(alpha, wp) / &sqrt_pi(wp);
    let scalar = &two_over_n.powi(alpha as i64) * &gamma_ratio;
    let minus_inv_z = -z.to_complex(wp).recip();
    let value = minus_inv_z.powi(alpha as i64).scale(&scalar);
    Ok(AsymptoticResult {
        value: value.with_precision(prec),
        regime: RegimeTag::Interior,
        leading_order: leading_order(RegimeTag::Interior, alpha).expect("interior has an order"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, rat};
    use crate::arith::GaussianRational;
    use crate::error::Error;

    const P: u32 = 128;

    fn real(x: i64) -> Point {
        Point::Exact(GaussianRational::real(int(x)))
    }

    #[test]
    fn interior_at_one_is_minus_one_over_n() {
        for n in [1u64, 7, 200] {
            let r = interior_approx(&PolyParams::new(n, 1).unwrap(), &real(1), P).unwrap();
            let expected = BigFloat::from_rational(&-rat(1, n as i64), P);
            assert!((&r.value.re - &expected).abs().mag_exp().is_none_or(|e| e < -(P as i64) + 4 - 8));
            assert!(r.value.im.is_zero());
            assert_eq!(r.leading_order, int(-1));
        }
    }

    #[test]
    fn interior_scales_by_power_of_two() {
        for alpha in 1..=3u32 {
            let a = interior_approx(&PolyParams::new(100, alpha).unwrap(), &real(2), P).unwrap().value;
            let b = interior_approx(&PolyParams::new(200, alpha).unwrap(), &real(2), P).unwrap().value;
            let ratio = (&a.re / &b.re).to_f64();
            assert!((ratio - 2f64.powi(alpha as i32)).abs() < 1e-30);
        }
    }

    #[test]
    fn regimes_are_enforced() {
        let p = PolyParams::new(10, 1).unwrap();
        assert!(matches!(interior_approx(&p, &real(3), P), Err(Error::RegimeMismatch { .. })));
        assert!(matches!(exterior_approx(&p, &real(1), P), Err(Error::RegimeMismatch { .. })));
        let seg = Point::Exact(GaussianRational::imag(rat(1, 2)));
        assert!(exterior_approx(&p, &seg, P).is_err());
        assert!(interior_approx(&p, &seg, P).is_err());
    }

    #[test]
    fn exterior_grows_like_phi_to_the_n() {
        let z = real(3);
        let m = phi(&z, P).unwrap().abs().to_f64();
        let a = exterior_approx(&PolyParams::new(100, 1).unwrap(), &z, P).unwrap().value.abs();
        let b = exterior_approx(&PolyParams::new(101, 1).unwrap(), &z, P).unwrap().value.abs();
        let step = (&b / &a).to_f64();
        let expected = m * (101f64 / 100.0).sqrt();
        assert!((step - expected).abs() < 1e-12);
    }

    #[test]
    fn alpha_one_drops_the_shift_factor() {
        // α = 1 versus the same expression with the shift factor divided out of α = 2.
        let z = Point::Exact(GaussianRational::new(int(3), int(1)));
        let a1 = exterior_approx(&PolyParams::new(50, 1).unwrap(), &z, P).unwrap().value;
        let a2 = exterior_approx(&PolyParams::new(50, 2).unwrap(), &z, P).unwrap().value;
        let zc = z.to_complex(P + 32);
        let w = map_w(&z, P + 32);
        let shift = &(&BigComplex::one(P + 32) + &(&w - &zc)) / &zc;
        let n = BigFloat::from_i64(50, P + 32);
        let back = (&a2 / &shift).scale(&n.recip());
        assert!((&back - &a1).abs().to_f64() / a1.abs().to_f64() < 1e-30);
    }
}
