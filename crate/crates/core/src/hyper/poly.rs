//! Jacobi and Chebyshev polynomials with rational data.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::gen_binomial;
use crate::arith::rational::{int, rat};

/// `P_n^{(α,β)}(x) = 2^-n Σ_k C(α+n, k) C(β+n, n-k) (x-1)^{n-k} (x+1)^k`.
///
/// The sum is a polynomial identity, so any rational `α`, `β` are accepted;
/// the usual orthogonality needs `α, β > -1`.
pub fn jacobi_p(n: u64, alpha: &BigRational, beta: &BigRational, x: &BigRational) -> BigRational {
    let ca = binomial_row(&(alpha + int(n as i64)), n);
    let cb = binomial_row(&(beta + int(n as i64)), n);
    let xm = powers(&(x - BigRational::one()), n);
    let xp = powers(&(x + BigRational::one()), n);
    let mut sum = BigRational::zero();
    for k in 0..=n as usize {
        let c = &ca[k] * &cb[n as usize - k];
        if !c.is_zero() {
            sum += c * &xm[n as usize - k] * &xp[k];
        }
    }
    sum / pow(&int(2), n)
}

/// Monomial coefficients of `P_n^{(α,β)}`, lowest degree first.
pub fn jacobi_coefficients(n: u64, alpha: &BigRational, beta: &BigRational) -> Vec<BigRational> {
    let ca = binomial_row(&(alpha + int(n as i64)), n);
    let cb = binomial_row(&(beta + int(n as i64)), n);
    let mut out = vec![BigRational::zero(); n as usize + 1];
    let mut xp_pow = vec![BigRational::one()];
    let mut xm_pows: Vec<Vec<BigRational>> = Vec::with_capacity(n as usize + 1);
    // (x-1)^j for j = 0..=n
    let mut cur = vec![BigRational::one()];
    xm_pows.push(cur.clone());
    for _ in 0..n {
        cur = mul_linear(&cur, -1);
        xm_pows.push(cur.clone());
    }
    for k in 0..=n {
        let c = &ca[k as usize] * &cb[(n - k) as usize];
        if !c.is_zero() {
            let prod = poly_mul(&xm_pows[(n - k) as usize], &xp_pow);
            for (o, p) in out.iter_mut().zip(prod) {
                *o += &c * p;
            }
        }
        xp_pow = mul_linear(&xp_pow, 1);
    }
    let scale = BigRational::one() / pow(&int(2), n);
    out.into_iter().map(|c| c * &scale).collect()
}

/// `T_n(x)` from `T_{k+1} = 2x T_k - T_{k-1}`.
pub fn chebyshev_t(n: u64, x: &BigRational) -> BigRational {
    if n == 0 {
        return BigRational::one();
    }
    let two_x = x * rat(2, 1);
    let (mut prev, mut cur) = (BigRational::one(), x.clone());
    for _ in 1..n {
        let next = &two_x * &cur - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Horner evaluation of coefficients given lowest degree first.
pub fn poly_eval(coeffs: &[BigRational], x: &BigRational) -> BigRational {
    coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

/// `C(a, k)` for `k = 0..=n`, seeded by [`gen_binomial`] and extended with
/// `C(a, k+1) = C(a, k) (a - k) / (k + 1)`.
fn binomial_row(a: &BigRational, n: u64) -> Vec<BigRational> {
    let mut row = Vec::with_capacity(n as usize + 1);
    row.push(gen_binomial(a, 0));
    for k in 0..n {
        let next = &row[k as usize] * (a - int(k as i64)) / int(k as i64 + 1);
        row.push(next);
    }
    row
}

fn powers(x: &BigRational, n: u64) -> Vec<BigRational> {
    let mut out = vec![BigRational::one()];
    for k in 0..n as usize {
        let next = &out[k] * x;
        out.push(next);
    }
    out
}

fn pow(x: &BigRational, k: u64) -> BigRational {
    num_traits::pow(x.clone(), k as usize)
}

/// Multiply by `(x + s)`.
fn mul_linear(p: &[BigRational], s: i64) -> Vec<BigRational> {
    let s = int(s);
    let mut out = vec![BigRational::zero(); p.len() + 1];
    for (i, c) in p.iter().enumerate() {
        out[i] += c * &s;
        out[i + 1] += c;
    }
    out
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{factorial, pochhammer};
    use proptest::prelude::*;

    #[test]
    fn jacobi_low_degree() {
        let x = rat(3, 7);
        let h = rat(-1, 2);
        assert_eq!(jacobi_p(0, &h, &h, &x), BigRational::one());
        assert_eq!(jacobi_p(1, &h, &h, &x), &x / rat(2, 1));
        assert_eq!(jacobi_p(1, &int(0), &int(0), &x), x);
        // Legendre P_2 = (3x^2 - 1)/2
        assert_eq!(jacobi_p(2, &int(0), &int(0), &x), (rat(3, 1) * &x * &x - rat(1, 1)) / rat(2, 1));
    }

    #[test]
    fn row_matches_gen_binomial() {
        for a in [rat(-1, 2), rat(7, 3), int(5), int(-2)] {
            let row = binomial_row(&a, 12);
            for (k, c) in row.iter().enumerate() {
                assert_eq!(*c, gen_binomial(&a, k as u64));
            }
        }
    }

    #[test]
    fn chebyshev_values() {
        let x = rat(-5, 11);
        assert_eq!(chebyshev_t(2, &x), rat(2, 1) * &x * &x - rat(1, 1));
        for n in 0..30 {
            assert_eq!(chebyshev_t(n, &int(1)), BigRational::one());
        }
        // cos(3θ) at cos θ = 1/2
        assert_eq!(chebyshev_t(3, &rat(1, 2)), int(-1));
    }

    #[test]
    fn coefficients_reproduce_values() {
        let (a, b) = (rat(-1, 2), rat(3, 4));
        for n in [0u64, 1, 4, 11] {
            let c = jacobi_coefficients(n, &a, &b);
            assert_eq!(c.len(), n as usize + 1);
            for x in [rat(1, 3), rat(-7, 5), int(2)] {
                assert_eq!(poly_eval(&c, &x), jacobi_p(n, &a, &b, &x), "n={n}");
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(20))]
        #[test]
        fn chebyshev_jacobi_bridge(p in -1000i64..1000, q in 1i64..500) {
            let x = rat(p, q);
            let h = rat(-1, 2);
            for n in 0..=40u64 {
                let lhs = chebyshev_t(n, &x) * pochhammer(&rat(1, 2), n);
                let rhs = BigRational::from_integer(factorial(n)) * jacobi_p(n, &h, &h, &x);
                prop_assert_eq!(lhs, rhs, "n={}", n);
            }
        }
    }
}
