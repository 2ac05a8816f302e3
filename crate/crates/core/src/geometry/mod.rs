//! The inverse Joukowsky map, `φ`, and the level curve `|φ| = 1`.

mod trace;

pub use trace::{real_axis_crossing, trace_curve, trace_curve_with, CurveTrace, TraceOptions};

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{BigComplex, BigFloat, GaussianRational};
use crate::error::{Error, Result};

const GUARD: u32 = 16;

/// Default classification tolerance on `| |φ| - 1 |`.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

/// A point of the plane, exact when it came from a literal.
#[derive(Clone, Debug, PartialEq)]
pub enum Point {
    Exact(GaussianRational),
    Float(BigComplex),
}

impl Point {
    pub fn to_complex(&self, prec: u32) -> BigComplex {
        match self {
            Point::Exact(g) => BigComplex::from_gaussian(g, prec),
            Point::Float(z) => z.with_precision(prec),
        }
    }

    pub fn conj(&self) -> Point {
        match self {
            Point::Exact(g) => Point::Exact(g.conj()),
            Point::Float(z) => Point::Float(z.conj()),
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            Point::Exact(g) => g.is_zero(),
            Point::Float(z) => z.is_zero(),
        }
    }

    /// `Some(y)` when the point is exactly `iy` with `|y| <= 1`.
    fn segment_coordinate(&self, prec: u32) -> Option<BigFloat> {
        match self {
            Point::Exact(g) if g.re.is_zero() && g.im.abs() <= BigRational::one() => {
                Some(BigFloat::from_rational(&g.im, prec))
            }
            Point::Float(z) if z.re.is_zero() && z.im.abs() <= BigFloat::one(prec) => {
                Some(z.im.with_precision(prec))
            }
            _ => None,
        }
    }
}

impl From<GaussianRational> for Point {
    fn from(g: GaussianRational) -> Self {
        Point::Exact(g)
    }
}

impl From<BigComplex> for Point {
    fn from(z: BigComplex) -> Self {
        Point::Float(z)
    }
}

/// `w = z + √(z²+1)` on the branch with `|w| > 1` off `[-i, i]`, and
/// `iy + √(1-y²)` on it.
pub fn map_w(z: &Point, prec: u32) -> BigComplex {
    let wp = prec + GUARD;
    if let Some(y) = z.segment_coordinate(wp) {
        let re = (&BigFloat::one(wp) - &y.square()).sqrt();
        return BigComplex::new(re, y).with_precision(prec);
    }
    let zc = z.to_complex(wp);
    let s = (&(&zc * &zc) + &BigComplex::one(wp)).sqrt();
    let plus = &zc + &s;
    let minus = &zc - &s;
    let w = if plus.norm_sqr() >= minus.norm_sqr() { plus } else { minus };
    w.with_precision(prec)
}

/// `φ(z) = w exp(-1/z - √(z²+1)/z)` with `√(z²+1) = w - z`.
pub fn phi(z: &Point, prec: u32) -> Result<BigComplex> {
    if z.is_zero() {
        return Err(Error::Singular("phi is undefined at z = 0".into()));
    }
    let wp = prec + GUARD;
    let w = map_w(z, wp);
    let zc = z.to_complex(wp);
    let s = &w - &zc;
    let exponent = -(&(&BigComplex::one(wp) + &s) / &zc);
    Ok((&w * &exponent.exp()).with_precision(prec))
}

/// `φ(z) = w exp(-2/(w-1) - 1)`, the same function written through `w` alone.
pub fn phi_from_w(z: &Point, prec: u32) -> Result<BigComplex> {
    if z.is_zero() {
        return Err(Error::Singular("phi is undefined at z = 0".into()));
    }
    let wp = prec + GUARD;
    let w = map_w(z, wp);
    let one = BigComplex::one(wp);
    let exponent = -(&(&BigComplex::from_real(BigFloat::from_i64(2, wp)) / &(&w - &one)) + &one);
    Ok((&w * &exponent.exp()).with_precision(prec))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RegimeTag {
    Exterior,
    Interior,
    SegmentInterior,
    SegmentEndpoint,
    CurveOther,
}

impl RegimeTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            RegimeTag::Exterior => "exterior",
            RegimeTag::Interior => "interior",
            RegimeTag::SegmentInterior => "segment-interior",
            RegimeTag::SegmentEndpoint => "segment-endpoint",
            RegimeTag::CurveOther => "curve",
        }
    }
}

impl fmt::Display for RegimeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Where a point sits relative to the curve.
#[derive(Clone, Debug, PartialEq)]
pub struct Regime {
    pub tag: RegimeTag,
    /// `|φ(z)|`, present for points off the segment.
    pub abs_phi: Option<BigFloat>,
}

impl Regime {
    pub fn expect(&self, tag: RegimeTag) -> Result<()> {
        if self.tag == tag {
            Ok(())
        } else {
            Err(Error::RegimeMismatch { expected: tag.to_string(), found: self.tag.to_string() })
        }
    }
}

/// Classify `z`; the segment test is exact for exact input and for float
/// input with an exactly zero real part.
pub fn classify(z: &Point, tol: f64, prec: u32) -> Result<Regime> {
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::InvalidParameter(format!("tolerance must be positive, got {tol}")));
    }
    let on_axis = match z {
        Point::Exact(g) => g.re.is_zero().then(|| g.im.abs().cmp(&BigRational::one())),
        Point::Float(c) => c.re.is_zero().then(|| c.im.abs().cmp(&BigFloat::one(c.precision()))),
    };
    match on_axis {
        Some(std::cmp::Ordering::Less) => {
            return Ok(Regime { tag: RegimeTag::SegmentInterior, abs_phi: None });
        }
        Some(std::cmp::Ordering::Equal) => {
            return Ok(Regime { tag: RegimeTag::SegmentEndpoint, abs_phi: None });
        }
        _ => {}
    }
    let m = phi(z, prec)?.abs();
    let gap = (&m - &BigFloat::one(prec)).to_f64();
    let tag = if gap > tol {
        RegimeTag::Exterior
    } else if gap < -tol {
        RegimeTag::Interior
    } else {
        RegimeTag::CurveOther
    };
    Ok(Regime { tag, abs_phi: Some(m) })
}
