//! Subcommand implementations. Each returns the text to print and an exit code.

use std::path::Path;

use rayon::prelude::*;
use thiserror::Error;

use hyp3f1::arith::{parse_rational, BigComplex, BigFloat, BigRational, GaussianRational};
use hyp3f1::asym::{endpoint_approx, endpoint_coefficient, exterior_approx, interior_approx, segment_approx, segment_terms};
use hyp3f1::geometry::{self, Point, RegimeTag};
use hyp3f1::hyper::{compute_s, f3f1_exact, f3f1_float, target_quantity, Argument, PolyParams};
use hyp3f1::quad::{cheb_integral, QuadratureConfig};

use crate::output::{Format, Table};
use crate::RegimeArg;

pub const EXIT_OK: u8 = 0;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_CEILING: u8 = 3;
pub const EXIT_REGIME: u8 = 4;
pub const EXIT_IDENTITY: u8 = 5;
pub const EXIT_QUADRATURE: u8 = 6;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] hyp3f1::Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

pub fn exit_code(e: &CliError) -> u8 {
    use hyp3f1::Error as E;
    match e {
        CliError::Usage(_) => EXIT_PARSE,
        CliError::Lib(E::Parse(_) | E::InvalidParameter(_)) => EXIT_PARSE,
        CliError::Lib(E::PrecisionCeiling { .. }) => EXIT_CEILING,
        CliError::Lib(E::RegimeMismatch { .. }) => EXIT_REGIME,
        CliError::Lib(E::NonConvergence { .. }) => EXIT_QUADRATURE,
        CliError::Lib(_) | CliError::Io { .. } => 1,
    }
}

pub struct Options {
    pub precision: u32,
    pub tol: f64,
    pub format: Format,
    pub digits: usize,
}

impl Options {
    fn num(&self, x: &BigFloat) -> String {
        x.to_sci_string(self.digits)
    }
}

pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: EXIT_OK }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn parse_point(s: &str) -> Result<GaussianRational> {
    Ok(GaussianRational::parse(s)?)
}

fn parse_y(s: &str) -> Result<BigRational> {
    Ok(parse_rational(s)?)
}

/// `lo:hi:step` or `lo:hi`, inclusive of `hi` when reached.
pub fn parse_range(s: &str) -> Result<Vec<u64>> {
    let parts: Vec<&str> = s.split(':').collect();
    let num = |p: &str| p.trim().parse::<u64>().map_err(|_| CliError::Usage(format!("bad n-range '{s}'")));
    let (lo, hi, step) = match parts.as_slice() {
        [lo, hi] => (num(lo)?, num(hi)?, 1),
        [lo, hi, step] => (num(lo)?, num(hi)?, num(step)?),
        _ => return Err(CliError::Usage(format!("n-range must be lo:hi[:step], got '{s}'"))),
    };
    if step == 0 || lo > hi {
        return Err(CliError::Usage(format!("empty or invalid n-range '{s}'")));
    }
    Ok((lo..=hi).step_by(step as usize).collect())
}

pub fn eval(opts: &Options, n: u64, alpha: u32, z: &str, exact: bool, float: bool, ceiling: u32) -> Result<Output> {
    let zq = parse_point(z)?;
    let params = PolyParams::new(n, alpha)?;
    let p = opts.precision;
    if float {
        let spec = params.series_spec(Argument::Exact(zq.clone()));
        let f = f3f1_float(&spec, p, ceiling)?;
        let mut t = Table::new(&["n", "alpha", "z", "re", "im", "working_precision", "cancellation_bits"]);
        t.push(vec![
            n.to_string(),
            alpha.to_string(),
            zq.to_string(),
            opts.num(&f.value.re),
            opts.num(&f.value.im),
            f.working_precision.to_string(),
            f.cancellation_bits.to_string(),
        ]);
        return Ok(Output::ok(t.render(opts.format)));
    }
    let v = f3f1_exact(&params, &zq);
    let c = BigComplex::from_gaussian(&v, p);
    let mut row = vec![n.to_string(), alpha.to_string(), zq.to_string(), opts.num(&c.re), opts.num(&c.im)];
    let mut t = if exact {
        row.push(v.to_string());
        Table::new(&["n", "alpha", "z", "re", "im", "exact"])
    } else {
        Table::new(&["n", "alpha", "z", "re", "im"])
    };
    t.push(row);
    Ok(Output::ok(t.render(opts.format)))
}

struct Row {
    n: u64,
    exact: BigComplex,
    approx: BigComplex,
    /// Scale below which `|approx|` counts as an oscillation zero.
    amplitude: Option<BigFloat>,
}

fn regime_mismatch(expected: RegimeTag, found: RegimeTag) -> CliError {
    CliError::Lib(hyp3f1::Error::RegimeMismatch { expected: expected.to_string(), found: found.to_string() })
}

pub fn converge(
    opts: &Options,
    regime: RegimeArg,
    alpha: u32,
    range: &str,
    y: Option<&str>,
    z: Option<&str>,
) -> Result<Output> {
    let ns = parse_range(range)?;
    let p = opts.precision;
    let rows: Vec<Row> = match regime {
        RegimeArg::Exterior | RegimeArg::Interior => {
            let z = z.ok_or_else(|| CliError::Usage("--z is required for this regime".into()))?;
            let zq = parse_point(z)?;
            let point = Point::Exact(zq.clone());
            // Fail fast on the regime before any heavy evaluation.
            let expected = if regime == RegimeArg::Exterior { RegimeTag::Exterior } else { RegimeTag::Interior };
            geometry::classify(&point, opts.tol, p)?.expect(expected)?;
            ns.par_iter()
                .map(|&n| {
                    let params = PolyParams::new(n, alpha)?;
                    let approx = if regime == RegimeArg::Exterior {
                        exterior_approx(&params, &point, p)?
                    } else {
                        interior_approx(&params, &point, p)?
                    };
                    let exact = BigComplex::from_gaussian(&f3f1_exact(&params, &zq), p);
                    Ok(Row { n, exact, approx: approx.value, amplitude: None })
                })
                .collect::<Result<_>>()?
        }
        RegimeArg::Segment => {
            let y = parse_y(y.ok_or_else(|| CliError::Usage("--y is required for the segment regime".into()))?)?;
            let tag = geometry::classify(&Point::Exact(GaussianRational::imag(y.clone())), opts.tol, p)?.tag;
            if tag != RegimeTag::SegmentInterior {
                return Err(regime_mismatch(RegimeTag::SegmentInterior, tag));
            }
            ns.par_iter()
                .map(|&n| {
                    let exact = target_quantity(n, &y, p)?;
                    let approx = segment_approx(n, &y, p)?;
                    let (amplitude, _) = segment_terms(n, &y, p)?;
                    Ok(Row { n, exact: exact.into(), approx: approx.into(), amplitude: Some(amplitude) })
                })
                .collect::<Result<_>>()?
        }
        RegimeArg::Endpoint => {
            let y = match y {
                Some(s) => parse_y(s)?,
                None => BigRational::from_integer(1.into()),
            };
            let tag = geometry::classify(&Point::Exact(GaussianRational::imag(y.clone())), opts.tol, p)?.tag;
            if tag != RegimeTag::SegmentEndpoint || y < BigRational::from_integer(0.into()) {
                return Err(regime_mismatch(RegimeTag::SegmentEndpoint, tag));
            }
            let coef = endpoint_coefficient(p);
            ns.par_iter()
                .map(|&n| {
                    let exact = target_quantity(n, &y, p)?;
                    let approx = endpoint_approx(n, p)?;
                    let amplitude = &coef * &BigFloat::from_i64(n as i64, p).pow_ratio(2, 3);
                    Ok(Row { n, exact: exact.into(), approx: approx.into(), amplitude: Some(amplitude) })
                })
                .collect::<Result<_>>()?
        }
    };

    let floor = BigFloat::from_rational(&parse_rational(&format!("1e-{}", opts.digits / 2))?, 64);
    let mut t = Table::new(&["n", "exact_re", "exact_im", "approx_re", "approx_im", "abs_error", "ratio"]);
    for r in rows {
        let err = (&r.exact - &r.approx).abs();
        let size = r.approx.abs();
        let negligible = match &r.amplitude {
            Some(a) => size < &floor * a,
            None => size.is_zero(),
        };
        let ratio = if negligible { "n/a".to_string() } else { opts.num(&(&r.exact / &r.approx).re) };
        t.push(vec![
            r.n.to_string(),
            opts.num(&r.exact.re),
            opts.num(&r.exact.im),
            opts.num(&r.approx.re),
            opts.num(&r.approx.im),
            opts.num(&err),
            ratio,
        ]);
    }
    Ok(Output::ok(t.render(opts.format)))
}

pub fn identity(opts: &Options, n: u64, y: &str, threshold: &str) -> Result<Output> {
    let y = parse_y(y)?;
    let threshold_q = parse_rational(threshold)?;
    let p = opts.precision;
    let s = compute_s(n, &y, p)?;
    let i = cheb_integral(n, &y, &QuadratureConfig::with_precision(p))?;
    let n_over_y = BigFloat::from_rational(&(BigRational::from_integer(n.into()) / &y), p);
    let residual = (&s + &i.value.mul_i().scale(&n_over_y)).abs();
    let pass = residual.to_rational() <= threshold_q;
    let mut t = Table::new(&["n", "y", "residual", "threshold", "result"]);
    t.push(vec![
        n.to_string(),
        hyp3f1::arith::rational::format_rational(&y),
        opts.num(&residual),
        threshold.to_string(),
        if pass { "pass" } else { "fail" }.to_string(),
    ]);
    Ok(Output { text: t.render(opts.format), code: if pass { EXIT_OK } else { EXIT_IDENTITY } })
}

pub fn trace(opts: &Options, angles: usize, out: Option<&Path>) -> Result<Output> {
    let tr = geometry::trace_curve(angles, opts.tol, opts.precision)?;
    let mut t = Table::new(&["theta", "re", "im", "residual"]);
    for ((z, theta), r) in tr.points.iter().zip(&tr.ray_angles).zip(&tr.residuals) {
        t.push(vec![
            BigFloat::from_f64(*theta, 64).to_sci_string(opts.digits.min(17)),
            opts.num(&z.re),
            opts.num(&z.im),
            r.to_sci_string(opts.digits.min(6)),
        ]);
    }
    let text = t.render(opts.format);
    match out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
            Ok(Output::ok(String::new()))
        }
        None => Ok(Output::ok(text)),
    }
}

pub fn classify(opts: &Options, z: &str) -> Result<Output> {
    let zq = parse_point(z)?;
    let r = geometry::classify(&Point::Exact(zq.clone()), opts.tol, opts.precision)?;
    let mut t = Table::new(&["z", "regime", "abs_phi"]);
    t.push(vec![
        zq.to_string(),
        r.tag.to_string(),
        r.abs_phi.as_ref().map_or_else(|| "n/a".to_string(), |m| opts.num(m)),
    ]);
    Ok(Output::ok(t.render(opts.format)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1:5:2").unwrap(), vec![1, 3, 5]);
        assert_eq!(parse_range("4:6").unwrap(), vec![4, 5, 6]);
        assert_eq!(parse_range("10:10:3").unwrap(), vec![10]);
        assert!(parse_range("5:1").is_err());
        assert!(parse_range("1:5:0").is_err());
        assert!(parse_range("a:b").is_err());
    }
}
