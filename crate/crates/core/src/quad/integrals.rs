//! The Chebyshev and Jacobi Fourier integrals and the closed-form right side.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{integrate, QuadResult, QuadratureConfig};
use crate::arith::rational::int;
use crate::arith::{factorial, pi, pochhammer, BigComplex, BigFloat, GaussianRational};
use crate::error::{Error, Result};
use crate::hyper::{f3f1_float, jacobi_coefficients, Argument, Terminating3F1, DEFAULT_PRECISION_CEILING};

fn check_y(y: &BigRational) -> Result<()> {
    if y.is_zero() || y.abs() > BigRational::one() {
        return Err(Error::InvalidParameter(format!("need y != 0 and |y| <= 1, got {y}")));
    }
    Ok(())
}

fn oscillation_panels(n: u64, y: &BigRational) -> usize {
    let inv = (BigRational::one() / y.abs()).to_f64().unwrap_or(f64::MAX);
    (4.0 * n as f64 * (1.0 + inv)).ceil().max(32.0) as usize
}

/// `I_n = ∫_{-1}^{1} T_n(t) e^{-int/y} dt`, integrated as
/// `∫_0^π cos(nθ) e^{-in cos θ / y} sin θ dθ`.
pub fn cheb_integral(n: u64, y: &BigRational, cfg: &QuadratureConfig) -> Result<QuadResult> {
    check_y(y)?;
    let wp = cfg.precision_bits;
    let nf = BigFloat::from_bigint(&n.into(), wp);
    let n_over_y = BigFloat::from_rational(&(BigRational::from_integer(n.into()) / y), wp);
    let f = |theta: &BigFloat| {
        let (s, c) = theta.sin_cos();
        let cheb = (&nf * theta).cos();
        let e = BigComplex::exp_unit(&-(&n_over_y * &c));
        e.scale(&(&cheb * &s))
    };
    integrate(f, &BigFloat::zero(wp), &pi(wp), oscillation_panels(n, y), cfg)
}

/// `I_n^± = ∫_0^π exp(in[-cos θ / y ± θ]) sin θ dθ`, returned as `(I^+, I^-)`.
pub fn i_plus_minus(n: u64, y: &BigRational, cfg: &QuadratureConfig) -> Result<(QuadResult, QuadResult)> {
    check_y(y)?;
    let wp = cfg.precision_bits;
    let nf = BigFloat::from_bigint(&n.into(), wp);
    let n_over_y = BigFloat::from_rational(&(BigRational::from_integer(n.into()) / y), wp);
    let branch = |sign: bool| {
        let (nf, n_over_y) = (&nf, &n_over_y);
        move |theta: &BigFloat| {
            let (s, c) = theta.sin_cos();
            let lin = nf * theta;
            let arg = &-(n_over_y * &c) + &(if sign { lin } else { -lin });
            BigComplex::exp_unit(&arg).scale(&s)
        }
    };
    let panels = oscillation_panels(n, y);
    let zero = BigFloat::zero(wp);
    let top = pi(wp);
    let plus = integrate(branch(true), &zero, &top, panels, cfg)?;
    let minus = integrate(branch(false), &zero, &top, panels, cfg)?;
    Ok((plus, minus))
}

/// `∫_{-1}^{1} P_n^{(α,β)}(t) e^{iλt} dt`.
///
/// The integrand is a polynomial times an exponential, smooth up to the
/// endpoints for any `α, β`, so it is integrated in `t` directly.
pub fn jacobi_fourier_lhs(
    n: u64,
    alpha: &BigRational,
    beta: &BigRational,
    lambda: &BigRational,
    cfg: &QuadratureConfig,
) -> Result<QuadResult> {
    let minus_one = -BigRational::one();
    if alpha <= &minus_one || beta <= &minus_one {
        return Err(Error::InvalidParameter(format!("need alpha, beta > -1, got ({alpha}, {beta})")));
    }
    // Monomial coefficients can exceed the polynomial's size on [-1, 1] by ~2^n.
    let wp = cfg.precision_bits;
    let cwp = wp + n as u32 + 16;
    let coeffs: Vec<BigFloat> =
        jacobi_coefficients(n, alpha, beta).iter().map(|c| BigFloat::from_rational(c, cwp)).collect();
    let lam = BigFloat::from_rational(lambda, wp);
    let f = |t: &BigFloat| {
        let tt = t.with_precision(cwp);
        let p = coeffs.iter().rev().fold(BigFloat::zero(cwp), |acc, c| &(&acc * &tt) + c);
        BigComplex::exp_unit(&(&lam * t)).scale(&p.with_precision(wp))
    };
    let lam_abs = lambda.abs().to_f64().unwrap_or(f64::MAX);
    let panels = (4.0 * (n as f64 + lam_abs)).ceil().max(32.0) as usize;
    integrate(f, &BigFloat::from_i64(-1, wp), &BigFloat::one(wp), panels, cfg)
}

/// Right side of the Jacobi finite Fourier transform:
///
/// `(β+1)_n / (iλ n!) (-1)^{n+1} e^{-iλ} ₃F₁(n+α+β+1, -n, 1; β+1; -1/(2iλ))
///  + (α+1)_n / (iλ n!) e^{iλ} ₃F₁(n+α+β+1, -n, 1; α+1; 1/(2iλ))`.
pub fn moll_rhs(n: u64, alpha: &BigRational, beta: &BigRational, lambda: &BigRational, prec: u32) -> Result<BigComplex> {
    if lambda.is_zero() {
        return Err(Error::InvalidParameter("lambda must be nonzero".into()));
    }
    let wp = prec + 32;
    let ni = int(n as i64);
    let upper = [&ni + alpha + beta + BigRational::one(), -&ni, BigRational::one()];
    // 1/(2iλ) = -i/(2λ)
    let x = GaussianRational::imag(-(BigRational::one() / (lambda * BigRational::from_integer(BigInt::from(2)))));
    let series = |lower: BigRational, arg: GaussianRational| -> Result<BigComplex> {
        let spec = Terminating3F1::new(upper.clone(), lower, Argument::Float(BigComplex::from_gaussian(&arg, wp)), n)?;
        Ok(f3f1_float(&spec, wp, DEFAULT_PRECISION_CEILING)?.value)
    };
    let first = series(beta + BigRational::one(), -&x)?;
    let second = series(alpha + BigRational::one(), x)?;

    let n_fact = BigRational::from_integer(factorial(n));
    let c1 = pochhammer(&(beta + BigRational::one()), n) / &n_fact;
    let c2 = pochhammer(&(alpha + BigRational::one()), n) / &n_fact;
    // 1/(iλ) = -i/λ
    let inv_i_lambda = BigComplex::from_gaussian(&GaussianRational::imag(-(BigRational::one() / lambda)), wp);
    let lam = BigFloat::from_rational(lambda, wp);
    let e_plus = BigComplex::exp_unit(&lam);
    let e_minus = e_plus.conj();

    let mut t1 = (&e_minus * &first).scale(&BigFloat::from_rational(&c1, wp));
    if n.is_multiple_of(2) {
        t1 = -t1;
    }
    let t2 = (&e_plus * &second).scale(&BigFloat::from_rational(&c2, wp));
    Ok((&inv_i_lambda * &(&t1 + &t2)).with_precision(prec))
}
