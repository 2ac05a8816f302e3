//! Exact rationals: literal parsing, Pochhammer symbols, generalized
//! binomials and factorials.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `p`, `p/q`, or a plain decimal such as `-0.125` / `1e-3`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let err = || Error::Parse(format!("invalid rational literal {s:?}"));
    if t.is_empty() {
        return Err(err());
    }
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = parse_int(p.trim()).ok_or_else(err)?;
        let q: BigInt = parse_int(q.trim()).ok_or_else(err)?;
        if q.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(BigRational::new(p, q));
    }
    if let Some(i) = parse_int(t) {
        return Ok(BigRational::from_integer(i));
    }
    parse_decimal(t).ok_or_else(err)
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.strip_prefix('+').unwrap_or(s).parse().ok()
}

fn parse_decimal(s: &str) -> Option<BigRational> {
    let (mant, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].strip_prefix('+').unwrap_or(&s[i + 1..]).parse::<i64>().ok()?),
        None => (s, 0),
    };
    let (neg, body) = match mant.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, mant.strip_prefix('+').unwrap_or(mant)),
    };
    let (ip, fp) = body.split_once('.').unwrap_or((body, ""));
    if ip.is_empty() && fp.is_empty() {
        return None;
    }
    if !ip.bytes().chain(fp.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("{ip}{fp}").parse().ok()?;
    let scale = exp - fp.len() as i64;
    if scale.unsigned_abs() > 100_000 {
        return None;
    }
    let ten = BigInt::from(10);
    let mut r = if scale >= 0 {
        BigRational::from_integer(digits * ten.pow(scale as u32))
    } else {
        BigRational::new(digits, ten.pow((-scale) as u32))
    };
    if neg {
        r = -r;
    }
    Some(r)
}

/// Rising factorial `a (a+1) ··· (a+k-1)`; the empty product is 1.
pub fn pochhammer(a: &BigRational, k: u64) -> BigRational {
    let mut acc = BigRational::one();
    let mut f = a.clone();
    for _ in 0..k {
        if f.is_zero() {
            return BigRational::zero();
        }
        acc *= &f;
        f += BigRational::one();
    }
    acc
}

pub fn factorial(k: u64) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, j| acc * j)
}

/// `binom(a, k) = (-1)^k (-a)_k / k!` for rational `a`.
pub fn gen_binomial(a: &BigRational, k: u64) -> BigRational {
    let p = pochhammer(&-a, k) / BigRational::from_integer(factorial(k));
    if k % 2 == 1 {
        -p
    } else {
        p
    }
}

/// `Γ(alpha) = (alpha - 1)!` for a positive integer.
pub fn gamma_pos_int(alpha: i64) -> Result<BigRational> {
    if alpha <= 0 {
        return Err(Error::InvalidParameter(format!("Gamma at nonpositive integer {alpha}")));
    }
    Ok(BigRational::from_integer(factorial(alpha as u64 - 1)))
}

/// Display form accepted back by [`parse_rational`].
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn is_nonpositive_integer(r: &BigRational) -> bool {
    r.is_integer() && !r.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&rat(7, 3), 0), int(1));
        assert_eq!(pochhammer(&rat(1, 2), 2), rat(3, 4));
        assert_eq!(pochhammer(&int(-3), 5), int(0));
        assert_eq!(pochhammer(&int(1), 5), int(120));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(gen_binomial(&rat(-5, 7), 0), int(1));
        assert_eq!(gen_binomial(&rat(1, 2), 1), rat(1, 2));
        assert_eq!(gen_binomial(&int(5), 2), int(10));
        assert_eq!(gen_binomial(&int(5), 6), int(0));
        // binom(-1/2, 2) = (-1/2)(-3/2)/2 = 3/8
        assert_eq!(gen_binomial(&rat(-1, 2), 2), rat(3, 8));
    }

    #[test]
    fn gamma_at_positive_integers() {
        assert_eq!(gamma_pos_int(1).unwrap(), int(1));
        assert_eq!(gamma_pos_int(2).unwrap(), int(1));
        assert_eq!(gamma_pos_int(5).unwrap(), int(24));
        assert!(gamma_pos_int(0).is_err());
        assert!(gamma_pos_int(-3).is_err());
    }

    #[test]
    fn literal_parsing() {
        assert_eq!(parse_rational("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("-6/8").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational("17").unwrap(), int(17));
        assert_eq!(parse_rational("-0.125").unwrap(), rat(-1, 8));
        assert_eq!(parse_rational("1e-3").unwrap(), rat(1, 1000));
        assert_eq!(parse_rational(" 2 ").unwrap(), int(2));
        for bad in ["", "1/0", "a", "1/2/3", "--1", "1.2.3", "/"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} should not parse");
        }
    }

    fn small_rational() -> impl Strategy<Value = BigRational> {
        (-200i64..200, 1i64..60).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn field_ops_are_exact(a in small_rational(), b in small_rational()) {
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            if !b.is_zero() {
                prop_assert_eq!(&(&a * &b) / &b, a);
            }
        }

        #[test]
        fn pochhammer_splits(a in small_rational(), j in 0u64..=50, k in 0u64..=50) {
            let lhs = pochhammer(&a, j + k);
            let rhs = pochhammer(&a, j) * pochhammer(&(&a + int(j as i64)), k);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn pochhammer_of_negative_integer_terminates(n in 0i64..40, extra in 1u64..20) {
            prop_assert!(pochhammer(&int(-n), n as u64 + extra).is_zero());
        }

        #[test]
        fn format_round_trips(a in small_rational()) {
            prop_assert_eq!(parse_rational(&format_rational(&a)).unwrap(), a);
        }
    }
}
