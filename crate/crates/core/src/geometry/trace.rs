//! Tracing `|φ| = 1` along rays from the origin.
//!
//! Off the segment the curve lives in the right half-plane (every point with
//! negative real part has `|φ| > 1`), so rays are taken with angles in
//! `(-π/2, π/2)`, kept a guard away from the corners at `±i`.

use rayon::prelude::*;

use super::{phi, Point};
use crate::arith::{pi, BigComplex, BigFloat};
use crate::error::{Error, Result};

/// Search and sampling settings for [`trace_curve`].
#[derive(Clone, Debug)]
pub struct TraceOptions {
    /// Rays closer than this (radians) to `±π/2` are skipped.
    pub guard: f64,
    /// Initial radial bracket; the outer end is widened once by ×10.
    pub bracket: (f64, f64),
    /// Radial samples used to count sign changes along a ray.
    pub scan_points: usize,
    /// Points placed on `[-i, i]`, not counting the endpoints.
    pub segment_points: usize,
}

impl Default for TraceOptions {
    fn default() -> Self {
        TraceOptions { guard: 0.02, bracket: (1e-3, 10.0), scan_points: 160, segment_points: 64 }
    }
}

/// Points on the curve, ray by ray, then the segment from `-i` to `i`.
#[derive(Clone, Debug)]
pub struct CurveTrace {
    pub points: Vec<BigComplex>,
    pub ray_angles: Vec<f64>,
    pub residuals: Vec<BigFloat>,
}

fn gap(r: &BigFloat, dir: &BigComplex, prec: u32) -> BigFloat {
    let z = dir.scale(r);
    &phi(&Point::Float(z), prec).expect("r > 0").abs() - &BigFloat::one(prec)
}

fn sign_changes(lo: f64, hi: f64, samples: usize, dir: &BigComplex) -> Vec<(f64, f64)> {
    let ratio = (hi / lo).powf(1.0 / (samples - 1) as f64);
    let mut out = Vec::new();
    let mut prev: Option<(f64, i32)> = None;
    for j in 0..samples {
        let r = lo * ratio.powi(j as i32);
        let s = gap(&BigFloat::from_f64(r, 64), dir, 64).signum();
        if let Some((pr, ps)) = prev {
            if ps != 0 && s != 0 && ps != s {
                out.push((pr, r));
            }
        }
        prev = Some((r, s));
    }
    out
}

fn trace_ray(theta: f64, tol: f64, prec: u32, opts: &TraceOptions) -> Result<(BigComplex, BigFloat)> {
    let wp = prec + 16;
    let t = BigFloat::from_f64(theta, wp);
    let (s, c) = t.sin_cos();
    let dir = BigComplex::new(c, s);

    let (lo, hi) = opts.bracket;
    let mut brackets = sign_changes(lo, hi, opts.scan_points, &dir.with_precision(64));
    if brackets.is_empty() {
        brackets = sign_changes(lo, hi * 10.0, opts.scan_points, &dir.with_precision(64));
    }
    match brackets.len() {
        0 => return Err(Error::NoBracket { angle: theta }),
        1 => {}
        k => return Err(Error::MultipleCrossings { angle: theta, crossings: k }),
    }
    let (a, b) = brackets[0];
    let mut a = BigFloat::from_f64(a, wp);
    let mut b = BigFloat::from_f64(b, wp);
    let sa = gap(&a, &dir, wp).signum();
    let tol_f = BigFloat::from_f64(tol, wp);
    // Resolve the radius well below tol so the residual lands far inside it.
    let width_target = BigFloat::from_f64(tol * 1e-3, wp);
    loop {
        let m = (&a + &b).mul_pow2(-1);
        let g = gap(&m, &dir, wp);
        let done = (&b - &a) < width_target && g.abs() <= tol_f;
        if g.is_zero() || done || (&b - &a).mag_exp().unwrap_or(i64::MIN) < -(wp as i64) {
            let z = dir.scale(&m).with_precision(prec);
            return Ok((z, g.abs().with_precision(prec)));
        }
        if g.signum() == sa {
            a = m;
        } else {
            b = m;
        }
    }
}

/// Trace the curve on `angle_count` rays plus the segment `[-i, i]`.
pub fn trace_curve(angle_count: usize, tol: f64, prec: u32) -> Result<CurveTrace> {
    trace_curve_with(angle_count, tol, prec, &TraceOptions::default())
}

pub fn trace_curve_with(angle_count: usize, tol: f64, prec: u32, opts: &TraceOptions) -> Result<CurveTrace> {
    if angle_count < 8 {
        return Err(Error::InvalidParameter(format!("need at least 8 rays, got {angle_count}")));
    }
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::InvalidParameter(format!("tolerance must be positive, got {tol}")));
    }
    let half = std::f64::consts::FRAC_PI_2 - opts.guard;
    // Midpoint rule on (-half, half) keeps the angles symmetric about 0.
    let angles: Vec<f64> = (0..angle_count)
        .map(|j| -half + 2.0 * half * (j as f64 + 0.5) / angle_count as f64)
        .collect();
    let rays: Vec<(BigComplex, BigFloat)> =
        angles.par_iter().map(|&t| trace_ray(t, tol, prec, opts)).collect::<Result<_>>()?;

    let mut points = Vec::with_capacity(angle_count + opts.segment_points + 2);
    let mut ray_angles = Vec::with_capacity(points.capacity());
    let mut residuals = Vec::with_capacity(points.capacity());
    for (t, (z, r)) in angles.iter().zip(rays) {
        points.push(z);
        ray_angles.push(*t);
        residuals.push(r);
    }

    let wp = prec + 16;
    let m = opts.segment_points.max(2) & !1;
    let segment = (0..=m + 1).map(|j| {
        // -1, then midpoints of m equal cells, then 1; m even keeps 0 out.
        let y = match j {
            0 => BigFloat::from_i64(-1, wp),
            j if j == m + 1 => BigFloat::one(wp),
            j => BigFloat::from_ratio(&(2 * j as i64 - 1 - m as i64).into(), &(m as i64).into(), wp),
        };
        BigComplex::new(BigFloat::zero(wp), y)
    });
    let half_pi = pi(64).mul_pow2(-1).to_f64();
    for z in segment {
        let r = (&phi(&Point::Float(z.clone()), wp)?.abs() - &BigFloat::one(wp)).abs();
        ray_angles.push(if z.im.is_negative() { -half_pi } else { half_pi });
        points.push(z.with_precision(prec));
        residuals.push(r.with_precision(prec));
    }
    Ok(CurveTrace { points, ray_angles, residuals })
}

/// The point where the curve crosses the positive real axis, by bisection
/// on `(2, 3)` down to width `tol`.
pub fn real_axis_crossing(tol: f64, prec: u32) -> Result<BigFloat> {
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::InvalidParameter(format!("tolerance must be positive, got {tol}")));
    }
    let wp = prec + 16;
    let one = BigComplex::one(wp);
    let mut a = BigFloat::from_i64(2, wp);
    let mut b = BigFloat::from_i64(3, wp);
    let tol = BigFloat::from_f64(tol, wp);
    while (&b - &a) > tol && (&b - &a).mag_exp().unwrap_or(i64::MIN) > -(wp as i64) + 4 {
        let m = (&a + &b).mul_pow2(-1);
        if gap(&m, &one, wp).is_negative() {
            a = m;
        } else {
            b = m;
        }
    }
    Ok((&a + &b).mul_pow2(-1).with_precision(prec))
}
