//! Composite Gauss–Legendre quadrature for the oscillatory integrals.

mod gauss;
mod integrals;

pub use gauss::{gauss_legendre, GaussRule};
pub use integrals::{cheb_integral, i_plus_minus, jacobi_fourier_lhs, moll_rhs};

use rayon::prelude::*;

use crate::arith::{BigComplex, BigFloat};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadratureConfig {
    /// Minimum panel count; integrals raise it to resolve their oscillation.
    pub panel_count: usize,
    pub nodes_per_panel: usize,
    /// Working precision; results are reported at half of it.
    pub precision_bits: u32,
    /// How many times the panel count may be doubled.
    pub refinement_limit: u32,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig { panel_count: 32, nodes_per_panel: 16, precision_bits: 128, refinement_limit: 4 }
    }
}

impl QuadratureConfig {
    pub fn with_precision(precision_bits: u32) -> Self {
        QuadratureConfig { precision_bits, ..Default::default() }
    }
}

/// A quadrature value with its doubling error estimate.
#[derive(Clone, Debug)]
pub struct QuadResult {
    pub value: BigComplex,
    /// `|Q(2P) - Q(P)|` for the last two panel counts.
    pub error_estimate: BigFloat,
    /// Panels used by the reported value.
    pub panels: usize,
}

fn pairwise_sum(xs: &[BigComplex]) -> BigComplex {
    match xs.len() {
        0 => unreachable!("pairwise_sum on empty slice"),
        1 => xs[0].clone(),
        n => {
            let (a, b) = xs.split_at(n / 2);
            &pairwise_sum(a) + &pairwise_sum(b)
        }
    }
}

fn composite<F>(f: &F, a: &BigFloat, b: &BigFloat, panels: usize, cfg: &QuadratureConfig) -> BigComplex
where
    F: Fn(&BigFloat) -> BigComplex + Sync,
{
    let wp = cfg.precision_bits;
    let rule = gauss_legendre(cfg.nodes_per_panel, wp);
    let width = &(b - a) / &BigFloat::from_i64(panels as i64, wp);
    let half = width.mul_pow2(-1);
    let sums: Vec<BigComplex> = (0..panels)
        .into_par_iter()
        .map(|j| {
            let mid = &(a + &(&width * &BigFloat::from_i64(j as i64, wp))) + &half;
            let terms: Vec<BigComplex> = rule
                .nodes
                .iter()
                .zip(&rule.weights)
                .map(|(x, w)| f(&(&mid + &(&half * x))).scale(w))
                .collect();
            pairwise_sum(&terms).scale(&half)
        })
        .collect();
    pairwise_sum(&sums)
}

/// `∫_a^b f` with panel doubling from `base_panels` until two successive
/// values agree to `2^{-precision_bits/2}`.
pub fn integrate<F>(f: F, a: &BigFloat, b: &BigFloat, base_panels: usize, cfg: &QuadratureConfig) -> Result<QuadResult>
where
    F: Fn(&BigFloat) -> BigComplex + Sync,
{
    let target = BigFloat::one(64).mul_pow2(-((cfg.precision_bits / 2) as i64));
    let mut panels = base_panels.max(cfg.panel_count).max(1);
    let mut prev = composite(&f, a, b, panels, cfg);
    let mut change = BigFloat::zero(64);
    for _ in 0..cfg.refinement_limit {
        panels *= 2;
        let next = composite(&f, a, b, panels, cfg);
        change = (&next - &prev).abs().with_precision(64);
        if change <= target {
            return Ok(QuadResult {
                value: next.with_precision(cfg.precision_bits / 2),
                error_estimate: change,
                panels,
            });
        }
        prev = next;
    }
    Err(Error::NonConvergence { doublings: cfg.refinement_limit, last_change: change.to_f64() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_and_exponential() {
        let cfg = QuadratureConfig::with_precision(160);
        let p = cfg.precision_bits;
        let zero = BigFloat::zero(p);
        let one = BigFloat::one(p);
        let r = integrate(|x| BigComplex::from_real(x.powi(5)), &zero, &one, 1, &cfg).unwrap();
        let d = (&r.value.re - &BigFloat::from_rational(&crate::arith::rational::rat(1, 6), 80)).abs();
        assert!(d.is_zero() || d.mag_exp().unwrap() < -78);
        let e = integrate(|x| BigComplex::from_real(x.exp()), &zero, &one, 1, &cfg).unwrap();
        let expected = &one.exp() - &one;
        assert!((&e.value.re - &expected.with_precision(80)).abs().to_f64() < 1e-23);
        assert_eq!(e.value.precision(), 80);
    }

    #[test]
    fn non_convergence_is_reported() {
        let cfg = QuadratureConfig { panel_count: 1, nodes_per_panel: 2, precision_bits: 256, refinement_limit: 1 };
        let zero = BigFloat::zero(256);
        let ten = BigFloat::from_i64(10, 256);
        let r = integrate(|x| BigComplex::exp_unit(&(x * &BigFloat::from_i64(50, 256))), &zero, &ten, 1, &cfg);
        assert!(matches!(r, Err(Error::NonConvergence { doublings: 1, .. })));
    }
}
