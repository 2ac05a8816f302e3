//! Terminating ₃F₁ evaluation, Jacobi/Chebyshev polynomials and `S`.

mod family;
mod poly;
mod s_quantity;
mod series;

pub use family::{f3f1_exact, PolyParams};
pub use poly::{chebyshev_t, jacobi_coefficients, jacobi_p, poly_eval};
pub use s_quantity::{compute_s, target_quantity};
pub use series::{f3f1_float, f3f1_general_exact, Argument, FloatEvaluation, Terminating3F1, DEFAULT_PRECISION_CEILING};
