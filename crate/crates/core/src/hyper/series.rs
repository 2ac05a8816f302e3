//! Terminating ₃F₁ sums, exact and floating.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::rational::is_nonpositive_integer;
use crate::arith::{BigComplex, BigFloat, GaussianRational};
use crate::error::{Error, Result};

/// Working precision never exceeds this unless the caller asks otherwise.
pub const DEFAULT_PRECISION_CEILING: u32 = 1 << 16;

const FLOAT_GUARD: u32 = 16;
const CANCELLATION_MARGIN: u32 = 32;

/// The series argument, exact when it can be.
#[derive(Clone, Debug, PartialEq)]
pub enum Argument {
    Exact(GaussianRational),
    Float(BigComplex),
}

impl Argument {
    fn to_complex(&self, prec: u32) -> BigComplex {
        match self {
            Argument::Exact(g) => BigComplex::from_gaussian(g, prec),
            Argument::Float(z) => z.with_precision(prec),
        }
    }
}

impl From<GaussianRational> for Argument {
    fn from(g: GaussianRational) -> Self {
        Argument::Exact(g)
    }
}

impl From<BigComplex> for Argument {
    fn from(z: BigComplex) -> Self {
        Argument::Float(z)
    }
}

/// `Σ_{k=0}^{term_count} (a)_k (b)_k (c)_k / ((d)_k k!) x^k` where one upper
/// parameter equals `-term_count`.
#[derive(Clone, Debug, PartialEq)]
pub struct Terminating3F1 {
    upper: [BigRational; 3],
    lower: BigRational,
    argument: Argument,
    term_count: u64,
}

impl Terminating3F1 {
    pub fn new(upper: [BigRational; 3], lower: BigRational, argument: Argument, term_count: u64) -> Result<Self> {
        let witness = -BigRational::from_integer(BigInt::from(term_count));
        if !upper.contains(&witness) {
            return Err(Error::InvalidParameter(format!(
                "no upper parameter equals -{term_count}; the series would not terminate there"
            )));
        }
        if is_nonpositive_integer(&lower) {
            let m = (-lower.to_integer()).magnitude().clone();
            if m < num_bigint::BigUint::from(term_count) {
                return Err(Error::Singular(format!(
                    "lower parameter {lower} makes (d)_k vanish within {term_count} terms"
                )));
            }
        }
        Ok(Terminating3F1 { upper, lower, argument, term_count })
    }

    pub fn upper(&self) -> &[BigRational; 3] {
        &self.upper
    }

    pub fn lower(&self) -> &BigRational {
        &self.lower
    }

    pub fn argument(&self) -> &Argument {
        &self.argument
    }

    pub fn term_count(&self) -> u64 {
        self.term_count
    }

    /// `t_k / (t_{k-1} x)` for `k >= 1`.
    fn coefficient_ratio(&self, k: u64) -> BigRational {
        let km1 = BigRational::from_integer(BigInt::from(k - 1));
        let [a, b, c] = &self.upper;
        let num = (a + &km1) * (b + &km1) * (c + &km1);
        let den = (&self.lower + &km1) * BigRational::from_integer(BigInt::from(k));
        num / den
    }
}

/// Exact value of a terminating sum with a Gaussian-rational argument.
///
/// The sum is nested as `1 + r_1 (1 + r_2 (1 + ··· (1 + r_K)))` and folded
/// from the inside with one shared integer denominator, so the only gcd is
/// the final reduction.
pub fn f3f1_general_exact(spec: &Terminating3F1) -> Result<GaussianRational> {
    let Argument::Exact(x) = &spec.argument else {
        return Err(Error::InvalidParameter("exact evaluation needs a Gaussian-rational argument".into()));
    };
    Ok(nested_sum(spec.term_count, x, |k| spec.coefficient_ratio(k)))
}

pub(crate) fn nested_sum(
    term_count: u64,
    x: &GaussianRational,
    ratio: impl Fn(u64) -> BigRational,
) -> GaussianRational {
    if term_count == 0 || x.is_zero() {
        return GaussianRational::one();
    }
    // x = (xr + i xi) / xd
    let xd = x.re.denom().lcm(x.im.denom());
    let xr = x.re.numer() * (&xd / x.re.denom());
    let xi = x.im.numer() * (&xd / x.im.denom());

    let mut nr = BigInt::one();
    let mut ni = BigInt::zero();
    let mut d = BigInt::one();
    for k in (1..=term_count).rev() {
        let c = ratio(k);
        if c.is_zero() {
            nr = d.clone();
            ni = BigInt::zero();
            continue;
        }
        // r_k = (cn (xr + i xi)) / (cd xd), cd > 0
        let (cn, cd) = (c.numer(), c.denom());
        let ar = cn * &xr;
        let ai = cn * &xi;
        let rd = cd * &xd;
        let new_r = &rd * &d + (&ar * &nr - &ai * &ni);
        let new_i = &ar * &ni + &ai * &nr;
        nr = new_r;
        ni = new_i;
        d *= &rd;
    }
    let d = BigRational::from_integer(d);
    GaussianRational::new(BigRational::from_integer(nr) / &d, BigRational::from_integer(ni) / &d)
}

/// Result of the floating evaluation together with its cancellation record.
#[derive(Clone, Debug)]
pub struct FloatEvaluation {
    pub value: BigComplex,
    /// Largest term modulus seen in the final pass.
    pub max_term: BigFloat,
    /// `ceil(log2(max_term / |value|))`, clamped at zero.
    pub cancellation_bits: u32,
    /// Precision of the final pass.
    pub working_precision: u32,
}

struct Pass {
    sum: BigComplex,
    max_term: BigFloat,
    max_term_exp: i64,
}

fn float_pass(spec: &Terminating3F1, wp: u32) -> Pass {
    let x = spec.argument.to_complex(wp);
    let mut term = BigComplex::one(wp);
    let mut sum = term.clone();
    let mut max_term = BigFloat::one(wp);
    let mut max_term_exp = 1i64;
    for k in 1..=spec.term_count {
        let c = BigFloat::from_rational(&spec.coefficient_ratio(k), wp);
        term = (&term * &x).scale(&c);
        if term.is_zero() {
            break;
        }
        let e = term.re.mag_exp().unwrap_or(i64::MIN).max(term.im.mag_exp().unwrap_or(i64::MIN));
        if e >= max_term_exp {
            let m = term.abs();
            if m > max_term {
                max_term = m;
                max_term_exp = e;
            }
        }
        sum = &sum + &term;
    }
    Pass { sum, max_term, max_term_exp }
}

fn cancellation(pass: &Pass, wp: u32) -> u32 {
    let top = pass.sum.re.mag_exp().into_iter().chain(pass.sum.im.mag_exp()).max();
    match top {
        Some(e) => (pass.max_term_exp - e + 1).max(0) as u32,
        None => wp,
    }
}

/// Floating evaluation with adaptive working precision.
///
/// A first pass at `prec` (plus a small guard) bounds the largest term; the
/// sum is then recomputed at `prec + cancellation + 32` bits. If the second
/// pass reveals more cancellation than the first could resolve, it repeats.
pub fn f3f1_float(spec: &Terminating3F1, prec: u32, ceiling: u32) -> Result<FloatEvaluation> {
    if spec.term_count == 0 {
        return Ok(FloatEvaluation {
            value: BigComplex::one(prec),
            max_term: BigFloat::one(prec),
            cancellation_bits: 0,
            working_precision: prec,
        });
    }
    let mut wp = prec + FLOAT_GUARD;
    let mut pass = float_pass(spec, wp);
    let mut lost = cancellation(&pass, wp);
    loop {
        let needed = prec + lost + CANCELLATION_MARGIN;
        if needed > ceiling {
            return Err(Error::PrecisionCeiling { required: needed, ceiling });
        }
        let resolved = wp >= needed && wp > prec + FLOAT_GUARD;
        if resolved {
            break;
        }
        wp = needed.max(wp + 1);
        pass = float_pass(spec, wp);
        lost = cancellation(&pass, wp);
    }
    Ok(FloatEvaluation {
        value: pass.sum.with_precision(prec),
        max_term: pass.max_term.with_precision(prec),
        cancellation_bits: lost,
        working_precision: wp,
    })
}
