//! Gamma function values needed by the asymptotic formulas.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use super::elementary::sqrt_pi;
use super::float::BigFloat;
use super::rational::{pochhammer, rat};
use crate::error::{Error, Result};

/// `Γ(x)` for a positive rational `x`.
///
/// The argument is first shifted into `(0, 1]` with `Γ(x+1) = x Γ(x)`. There,
/// `Γ(x) = γ(x, N) + Γ(x, N)` and the upper incomplete part is below
/// `e^-N`, so with `N ≈ wp·ln 2` the lower incomplete part alone suffices:
///
/// `γ(x, N) = N^x e^-N Σ_k N^k / (x (x+1) ··· (x+k))`.
///
/// Every term of that sum is positive, so it evaluates without cancellation.
pub fn gamma_rational(x: &BigRational, prec: u32) -> Result<BigFloat> {
    if !x.is_positive() {
        return Err(Error::InvalidParameter(format!("gamma_rational needs a positive argument, got {x}")));
    }
    let shift = (x.ceil() - BigRational::one()).to_integer();
    let shift = shift.to_u64().unwrap_or(0);
    let base = x - BigRational::from_integer(BigInt::from(shift));
    let wp = prec + 32 + (64 - shift.leading_zeros());

    let n = (wp as f64 * std::f64::consts::LN_2).ceil() as i64 + 16;
    let nf = BigFloat::from_i64(n, wp);
    let xf = BigFloat::from_rational(&base, wp);
    let mut term = xf.recip();
    let mut sum = term.clone();
    let mut k = 1i64;
    loop {
        let denom = &xf + &BigFloat::from_i64(k, wp);
        term = &(&term * &nf) / &denom;
        sum = &sum + &term;
        let negligible = term.mag_exp().unwrap() < sum.mag_exp().unwrap() - wp as i64 - 2;
        if k > n && negligible {
            break;
        }
        k += 1;
    }
    // N^x e^-N = exp(x ln N - N)
    let ln_n = nf.ln();
    let prefactor = (&(&xf * &ln_n) - &nf).exp();
    let mut g = &prefactor * &sum;
    let shift_product = pochhammer(&base, shift);
    g = &g * &BigFloat::from_rational(&shift_product, wp);
    Ok(g.with_precision(prec))
}

/// `Γ(1/3)` to `prec` bits (`prec >= 16`).
pub fn gamma_one_third(prec: u32) -> BigFloat {
    assert!(prec >= 16, "gamma_one_third requires at least 16 bits");
    gamma_rational(&rat(1, 3), prec).expect("1/3 is positive")
}

/// `Γ(alpha + 1/2) = (1/2)_alpha √π` for a positive integer `alpha`.
pub fn gamma_half_shift(alpha: u32, prec: u32) -> BigFloat {
    assert!(alpha >= 1, "gamma_half_shift requires alpha >= 1");
    let wp = prec + 16;
    let p = pochhammer(&rat(1, 2), alpha as u64);
    (&BigFloat::from_rational(&p, wp) * &sqrt_pi(wp)).with_precision(prec)
}
