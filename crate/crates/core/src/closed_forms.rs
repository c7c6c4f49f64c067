//! Closed binomial sums for the catalogued sequences.
//!
//! Each sum is evaluated exactly with the generalized binomial of
//! [`crate::exact_arith`] and then divided by its prefactor with
//! [`exact_div`], so a convention slip surfaces as a divisibility error
//! instead of a silently rounded term.
//!
//! Boundary cases:
//! * the odd-tile sum at `n = 0` evaluates to 1 under the `k < 0 => 0`
//!   binomial convention, while the value -1 is obtained only by also
//!   taking `C(-2, -2) = 1`. [`odd_term`] refuses `n = 0` instead of picking
//!   one.
//! * the even-tile sum at `n = 0` is empty (0); [`even_term`] returns the
//!   reversion value 1 without consulting the formula.
//! * the triangle-free and Schroeder sums are likewise bypassed at `n = 0`.

use crate::error::{Error, Result};
use crate::exact_arith::{binom, exact_div, Integer};

/// The five summation formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Formula {
    /// `sum_{k} C(n+k, k) C(n-k-1, k-1)`, over `n+1`.
    TriangleFree,
    /// `sum_{k} C(2n-2k, n-2k) C(n-k-1, k)`, over `n+1`.
    OddTiles,
    /// For `n = 2m`: `sum_{k} C(2m+k, k) C(m-1, k-1)`, over `2m+1`.
    EvenTiles,
    /// `sum_{k} C(2n-k, n) C(n-1, k)`, over `n+1`.
    Schroeder,
    /// `sum_{k} C(n+1, k) C(k, 2k-n-2)`, over `n+1`.
    Motzkin,
}

impl Formula {
    pub const ALL: [Formula; 5] = [
        Formula::TriangleFree,
        Formula::OddTiles,
        Formula::EvenTiles,
        Formula::Schroeder,
        Formula::Motzkin,
    ];

    /// Upper summation limit as published.
    pub fn upper_limit(self, n: i64) -> i64 {
        match self {
            // ceil((n-1)/2)
            Formula::TriangleFree => (n - 1).div_euclid(2) + (n - 1).rem_euclid(2),
            // ceil((n+1)/2)
            Formula::OddTiles => (n + 1).div_euclid(2) + (n + 1).rem_euclid(2),
            Formula::EvenTiles => n / 2,
            Formula::Schroeder | Formula::Motzkin => n + 1,
        }
    }

    pub fn divisor(self, n: i64) -> i64 {
        n + 1
    }

    /// The summand at index `k`. For [`Formula::EvenTiles`], `n` must be even.
    pub fn summand(self, n: i64, k: i64) -> Integer {
        match self {
            Formula::TriangleFree => binom(n + k, k) * binom(n - k - 1, k - 1),
            Formula::OddTiles => binom(2 * n - 2 * k, n - 2 * k) * binom(n - k - 1, k),
            Formula::EvenTiles => {
                let m = n / 2;
                binom(2 * m + k, k) * binom(m - 1, k - 1)
            }
            Formula::Schroeder => binom(2 * n - k, n) * binom(n - 1, k),
            Formula::Motzkin => binom(n + 1, k) * binom(k, 2 * k - n - 2),
        }
    }

    /// Raw sum for `k = 0 ..= upper`, before division.
    pub fn sum(self, n: i64, upper: i64) -> Integer {
        (0..=upper).map(|k| self.summand(n, k)).sum()
    }

    /// `sum / divisor` with the published upper limit, checked for exactness.
    pub fn evaluate(self, n: i64) -> Result<Integer> {
        let raw = self.sum(n, self.upper_limit(n));
        exact_div(&raw, &Integer::from(self.divisor(n)))
    }
}

/// Triangle-free dissections of the `(n+2)`-gon.
pub fn triangle_free_term(n: usize) -> Result<Integer> {
    if n == 0 {
        return Ok(Integer::from(1));
    }
    Formula::TriangleFree.evaluate(n as i64)
}

/// Odd-sided-tile dissections of the `(n+2)`-gon, for `n >= 1`.
pub fn odd_term(n: usize) -> Result<Integer> {
    if n == 0 {
        return Err(Error::DomainError(
            "odd-tile sum is not evaluated at n = 0: its value there depends on the \
             binomial convention at negative arguments"
                .into(),
        ));
    }
    Formula::OddTiles.evaluate(n as i64)
}

/// Even-sided-tile dissections; zero for odd `n`.
pub fn even_term(n: usize) -> Result<Integer> {
    if n == 0 {
        return Ok(Integer::from(1));
    }
    if n % 2 == 1 {
        return Ok(Integer::from(0));
    }
    Formula::EvenTiles.evaluate(n as i64)
}

pub fn schroeder_term(n: usize) -> Result<Integer> {
    if n == 0 {
        return Ok(Integer::from(1));
    }
    Formula::Schroeder.evaluate(n as i64)
}

/// `C(2n, n) / (n+1)`.
pub fn catalan_term(n: usize) -> Integer {
    let n = n as i64;
    exact_div(&binom(2 * n, n), &Integer::from(n + 1)).expect("n+1 divides C(2n, n)")
}

pub fn motzkin_term(n: usize) -> Result<Integer> {
    Formula::Motzkin.evaluate(n as i64)
}

/// Closed-form evaluator for a catalog name, if one exists.
pub fn for_catalog_name(name: &str) -> Option<fn(usize) -> Result<Integer>> {
    match name {
        "trianglefree" => Some(triangle_free_term),
        "oddtiles" => Some(odd_term),
        "eventiles" => Some(even_term),
        "schroeder" => Some(schroeder_term),
        "catalan" => Some(|n| Ok(catalan_term(n))),
        "motzkin" => Some(motzkin_term),
        _ => None,
    }
}
