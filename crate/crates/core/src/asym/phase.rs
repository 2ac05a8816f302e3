//! The phases `φ_±(θ) = -cos θ / y ± θ` and their stationary points.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{pi, BigFloat};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhaseBranch {
    Plus,
    Minus,
}

/// `φ_±(θ)`.
pub fn phase(branch: PhaseBranch, theta: &BigFloat, y: &BigFloat) -> BigFloat {
    let base = -(&theta.cos() / y);
    match branch {
        PhaseBranch::Plus => &base + theta,
        PhaseBranch::Minus => &base - theta,
    }
}

/// `d^k φ_± / dθ^k` for `k` in `1..=3`.
pub fn phase_derivative(branch: PhaseBranch, order: u32, theta: &BigFloat, y: &BigFloat) -> BigFloat {
    let (s, c) = theta.sin_cos();
    match order {
        1 => {
            let shifted = match branch {
                PhaseBranch::Plus => &s + y,
                PhaseBranch::Minus => &s - y,
            };
            &shifted / y
        }
        2 => &c / y,
        3 => -(&s / y),
        _ => panic!("phase_derivative supports orders 1 to 3, got {order}"),
    }
}

/// Phase data of `φ_-` at one stationary point.
#[derive(Clone, Debug)]
pub struct StationaryPoint {
    pub theta: BigFloat,
    pub value: BigFloat,
    pub first: BigFloat,
    pub second: BigFloat,
    pub third: BigFloat,
}

#[derive(Clone, Debug)]
pub struct PhaseData {
    /// `asin y` and `π - asin y`; equal at `y = 1`.
    pub points: [StationaryPoint; 2],
    pub coalesced: bool,
}

/// Stationary points of `φ_-` on `[0, π]` for `0 < y <= 1`.
pub fn phase_data(y: &BigRational, prec: u32) -> Result<PhaseData> {
    if !y.is_positive() || *y > BigRational::one() {
        return Err(Error::InvalidParameter(format!("phase data needs 0 < y <= 1, got {y}")));
    }
    let wp = prec + 32;
    let yf = BigFloat::from_rational(y, wp);
    let t1 = yf.asin();
    let t2 = &pi(wp) - &t1;
    let at = |theta: BigFloat| {
        let b = PhaseBranch::Minus;
        StationaryPoint {
            value: phase(b, &theta, &yf).with_precision(prec),
            first: phase_derivative(b, 1, &theta, &yf).with_precision(prec),
            second: phase_derivative(b, 2, &theta, &yf).with_precision(prec),
            third: phase_derivative(b, 3, &theta, &yf).with_precision(prec),
            theta: theta.with_precision(prec),
        }
    };
    let coalesced = (y - BigRational::one()).is_zero();
    Ok(PhaseData { points: [at(t1), at(t2)], coalesced })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, rat};

    const P: u32 = 128;

    fn close(a: &BigFloat, b: f64, eps: f64) -> bool {
        (a.to_f64() - b).abs() <= eps
    }

    #[test]
    fn endpoint_data() {
        let d = phase_data(&int(1), P).unwrap();
        assert!(d.coalesced);
        let half_pi = std::f64::consts::FRAC_PI_2;
        for p in &d.points {
            assert!(close(&p.theta, half_pi, 1e-15));
            assert!(close(&p.value, -half_pi, 1e-15));
            assert!(close(&p.first, 0.0, 1e-30));
            assert!(close(&p.second, 0.0, 1e-30));
            assert!(close(&p.third, -1.0, 1e-30));
        }
    }

    #[test]
    fn interior_data_at_one_half() {
        let d = phase_data(&rat(1, 2), P).unwrap();
        assert!(!d.coalesced);
        assert!(close(&d.points[0].theta, std::f64::consts::FRAC_PI_6, 1e-15));
        assert!(close(&d.points[0].second, 3f64.sqrt(), 1e-15));
        assert!(close(&d.points[1].second, -(3f64.sqrt()), 1e-15));
    }

    #[test]
    fn values_sum_to_minus_pi() {
        for y in [rat(1, 7), rat(1, 4), rat(1, 2), rat(3, 4), rat(99, 100), int(1)] {
            let d = phase_data(&y, P).unwrap();
            let sum = &d.points[0].value + &d.points[1].value;
            let err = (&sum + &pi(P)).abs();
            assert!(err.is_zero() || err.mag_exp().unwrap() < -(P as i64) + 8, "y = {y}");
            let yf = BigFloat::from_rational(&y, P).to_f64();
            let c = (1.0 - yf * yf).sqrt();
            assert!(close(&d.points[0].value, -c / yf - yf.asin(), 1e-13));
        }
        assert!(phase_data(&int(0), P).is_err());
        assert!(phase_data(&rat(3, 2), P).is_err());
    }

    #[test]
    fn finite_differences_at_stationary_points() {
        let h = BigFloat::parse("1e-5", P).unwrap();
        for y in [rat(1, 4), rat(1, 2), rat(3, 4)] {
            let yf = BigFloat::from_rational(&y, P);
            let d = phase_data(&y, P).unwrap();
            for p in &d.points {
                let f = |t: &BigFloat| phase(PhaseBranch::Minus, t, &yf);
                let fp = f(&(&p.theta + &h));
                let fm = f(&(&p.theta - &h));
                let f0 = f(&p.theta);
                let d1 = &(&fp - &fm) / &h.mul_pow2(1);
                let d2 = &(&(&fp + &fm) - &f0.mul_pow2(1)) / &h.square();
                // Central differences: first derivative error ~ h²|φ'''|.
                assert!(d1.abs().to_f64() < 1e-9, "y = {y}");
                let yv = yf.to_f64();
                let expected = (1.0 - yv * yv).sqrt() / yv;
                let sign = if p.theta.to_f64() < std::f64::consts::FRAC_PI_2 { 1.0 } else { -1.0 };
                assert!((d2.to_f64() - sign * expected).abs() < 1e-8, "y = {y}");
            }
        }
    }

    #[test]
    fn plus_phase_has_no_stationary_point() {
        for y in [rat(1, 100), rat(1, 4), rat(1, 2), rat(3, 4), int(1)] {
            let yf = BigFloat::from_rational(&y, 64);
            let mut min = f64::INFINITY;
            for j in 0..=10_000 {
                let t = BigFloat::from_f64(std::f64::consts::PI * j as f64 / 10_000.0, 64);
                min = min.min(phase_derivative(PhaseBranch::Plus, 1, &t, &yf).abs().to_f64());
            }
            // φ_+' = sin θ / y + 1 >= 1 on [0, π]
            assert!(min >= 1.0 - 1e-15, "y = {y}: {min}");
        }
    }
}
