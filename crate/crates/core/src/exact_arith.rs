//! Exact scalars and the generalized binomial coefficient.
//!
//! `binomial(r, k)` is zero for `k < 0` and the falling-factorial quotient
//! `r (r-1) ... (r-k+1) / k!` for `k >= 0`, for any integer `r`. Every
//! summation formula in [`crate::closed_forms`] is evaluated under this
//! convention.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;

pub fn int(v: i64) -> Integer {
    Integer::from(v)
}

pub fn rat(v: i64) -> Rational {
    Rational::from_integer(Integer::from(v))
}

/// Generalized binomial coefficient with integer upper argument.
pub fn binomial(r: &Integer, k: i64) -> Integer {
    if k < 0 {
        return Integer::zero();
    }
    // For 0 <= r < k the product passes through zero.
    if !r.is_negative() && *r < Integer::from(k) {
        return Integer::zero();
    }
    // Use the smaller of k and r-k when the symmetric identity applies.
    let k = if !r.is_negative() {
        let rk = r - Integer::from(k);
        if rk < Integer::from(k) {
            i64::try_from(&rk).unwrap_or(k)
        } else {
            k
        }
    } else {
        k
    };
    let mut acc = Integer::one();
    for i in 0..k {
        // acc * (r - i) / (i + 1) stays integral at every step.
        acc *= r - Integer::from(i);
        acc /= Integer::from(i + 1);
    }
    acc
}

/// `binomial` for machine-sized arguments.
pub fn binom(r: i64, k: i64) -> Integer {
    binomial(&Integer::from(r), k)
}

/// Divides `a` by `b`, failing unless `b` divides `a` exactly.
pub fn exact_div(a: &Integer, b: &Integer) -> Result<Integer> {
    if b.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    let (q, r) = a.div_rem(b);
    if !r.is_zero() {
        return Err(Error::DivisibilityViolation {
            dividend: a.to_string(),
            divisor: b.to_string(),
        });
    }
    Ok(q)
}

/// Converts a rational to an integer when its denominator is one.
pub fn to_integer(q: &Rational) -> Option<Integer> {
    q.is_integer().then(|| q.numer().clone())
}
