//! The family `F_n(z) = ₃F₁(-n, n, α; 1/2; z/(2n))`.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::series::{nested_sum, Argument, Terminating3F1};
use crate::arith::rational::{int, rat};
use crate::arith::{BigComplex, GaussianRational};
use crate::error::{Error, Result};

/// Degree `n` and upper parameter `alpha` of the family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PolyParams {
    n: u64,
    alpha: u32,
}

impl PolyParams {
    pub fn new(n: u64, alpha: u32) -> Result<Self> {
        if alpha == 0 {
            return Err(Error::InvalidParameter("alpha must be a positive integer".into()));
        }
        Ok(PolyParams { n, alpha })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    /// `t_k / (t_{k-1} x)`, i.e. `(k-1-n)(n+k-1)(α+k-1) / ((k-1/2) k)`.
    pub(crate) fn coefficient_ratio(&self, k: u64) -> BigRational {
        let n = self.n as i64;
        let k = k as i64;
        let num = BigInt::from(k - 1 - n) * BigInt::from(n + k - 1) * BigInt::from(self.alpha as i64 + k - 1);
        // (k - 1/2) k = (2k - 1) k / 2
        let den = BigInt::from((2 * k - 1) * k);
        BigRational::new(num * 2, den)
    }

    /// The general-series form with argument `z/(2n)`.
    pub fn series_spec(&self, z: Argument) -> Terminating3F1 {
        let argument = if self.n == 0 {
            match z {
                Argument::Exact(_) => Argument::Exact(GaussianRational::zero()),
                Argument::Float(w) => Argument::Float(BigComplex::zero(w.precision())),
            }
        } else {
            match z {
                Argument::Exact(g) => Argument::Exact(g.scale(&rat(1, 2 * self.n as i64))),
                Argument::Float(w) => {
                    let p = w.precision();
                    Argument::Float(w.scale(&crate::arith::BigFloat::from_rational(&rat(1, 2 * self.n as i64), p + 8)))
                }
            }
        };
        let n = self.n as i64;
        Terminating3F1::new([int(-n), int(n), int(self.alpha as i64)], rat(1, 2), argument, self.n)
            .expect("family parameters always satisfy the termination invariants")
    }
}

/// Exact `F_n(z)` for Gaussian-rational `z`; `F_0 = 1`.
pub fn f3f1_exact(params: &PolyParams, z: &GaussianRational) -> GaussianRational {
    if params.n == 0 {
        return GaussianRational::one();
    }
    let x = z.scale(&rat(1, 2 * params.n as i64));
    nested_sum(params.n, &x, |k| params.coefficient_ratio(k))
}
