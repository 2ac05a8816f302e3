//! Exact rational and Gaussian-rational arithmetic, arbitrary-precision
//! floats and complex numbers, and the special values the formulas need.

pub mod complex;
pub mod elementary;
pub mod float;
pub mod gamma;
pub mod gaussian;
pub mod rational;

pub use complex::BigComplex;
pub use elementary::{ln2, pi, sqrt_pi};
pub use float::BigFloat;
pub use gamma::{gamma_half_shift, gamma_one_third, gamma_rational};
pub use gaussian::GaussianRational;
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use rational::{factorial, gamma_pos_int, gen_binomial, parse_rational, pochhammer};

/// `e^{i theta}` at the precision of `theta`.
pub fn exp_unit(theta: &BigFloat) -> BigComplex {
    BigComplex::exp_unit(theta)
}
