//! Truncated formal power series with exact rational coefficients, and the
//! two reversion routes: Lagrange inversion and a direct triangular solve.
//!
//! A series of precision `N` stores the coefficients of `x^0 .. x^N`; every
//! identity between series holds modulo `x^(N+1)`. Binary operations return
//! a series at the smaller of the two operand precisions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::{to_integer, Integer, Rational};
use crate::symbols::ReversiveSymbol;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Builds a series of the given precision; missing coefficients are
    /// zero and coefficients beyond `precision` are dropped.
    pub fn new(mut coeffs: Vec<Rational>, precision: usize) -> Self {
        coeffs.resize(precision + 1, Rational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_integers<I>(coeffs: I, precision: usize) -> Self
    where
        I: IntoIterator,
        I::Item: Into<Integer>,
    {
        let coeffs = coeffs
            .into_iter()
            .take(precision + 1)
            .map(|c| Rational::from_integer(c.into()))
            .collect();
        Self::new(coeffs, precision)
    }

    pub fn zero(precision: usize) -> Self {
        Self::new(Vec::new(), precision)
    }

    pub fn one(precision: usize) -> Self {
        Self::new(vec![Rational::one()], precision)
    }

    /// The identity series `x`.
    pub fn identity(precision: usize) -> Self {
        Self::new(vec![Rational::zero(), Rational::one()], precision)
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the stored range.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Same series at a lower (or equal) precision.
    pub fn truncate(&self, precision: usize) -> Self {
        Self::new(self.coeffs.clone(), precision.min(self.precision()))
    }

    /// Multiplies by `x^k`, keeping the precision.
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.precision();
        let mut out = vec![Rational::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + k > n {
                break;
            }
            out[i + k] = c.clone();
        }
        TruncatedSeries { coeffs: out }
    }

    /// Integer coefficients, or `None` if any coefficient is fractional.
    pub fn to_integers(&self) -> Option<Vec<Integer>> {
        self.coeffs.iter().map(to_integer).collect()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.precision().min(other.precision());
        let coeffs = (0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect();
        TruncatedSeries { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.precision().min(other.precision());
        let coeffs = (0..=n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect();
        TruncatedSeries { coeffs }
    }

    pub fn negate(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Rational::is_integer)
    }

    /// Cauchy product.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.precision().min(other.precision());
        if self.is_integral() && other.is_integral() {
            return Self::mul_integral(&self.coeffs[..=n], &other.coeffs[..=n]);
        }
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs: out }
    }

    // Same product over the numerators alone, skipping rational
    // normalization.
    fn mul_integral(a: &[Rational], b: &[Rational]) -> Self {
        let n = a.len() - 1;
        let a: Vec<&Integer> = a.iter().map(Rational::numer).collect();
        let b: Vec<&Integer> = b.iter().map(Rational::numer).collect();
        let mut out = vec![Integer::zero(); n + 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().take(n + 1 - i).enumerate() {
                if !y.is_zero() {
                    out[i + j] += *x * *y;
                }
            }
        }
        TruncatedSeries {
            coeffs: out.into_iter().map(Rational::from_integer).collect(),
        }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NonUnitSeries);
        }
        let inv0 = c0.recip();
        let n = self.precision();
        let mut out: Vec<Rational> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = Rational::zero();
            for i in 1..=k {
                let a = &self.coeffs[i];
                if !a.is_zero() {
                    acc += a * &out[k - i];
                }
            }
            out.push(-acc * &inv0);
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `self^e` by repeated squaring; `pow(0)` is the constant 1.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.precision());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `self(inner(x))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonZeroInnerConstant);
        }
        let n = self.precision().min(inner.precision());
        let inner = inner.truncate(n);
        // Horner: ((c_n * g + c_{n-1}) * g + ...) + c_0
        let mut acc = Self::zero(n);
        for c in self.coeffs[..=n].iter().rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.precision() + 1)
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::add(self, rhs)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::sub(self, rhs)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::mul(self, rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        self.negate()
    }
}

/// `t / alpha(t)` to the given precision, i.e. `Q(t) / (P(t)/t)`.
fn lagrange_kernel(alpha: &ReversiveSymbol, precision: usize) -> Result<TruncatedSeries> {
    let reduced_num = alpha.numerator().coeffs().iter().skip(1).cloned();
    let p_over_t = TruncatedSeries::from_integers(reduced_num, precision);
    let q = TruncatedSeries::from_integers(alpha.denominator().coeffs().iter().cloned(), precision);
    Ok(q.mul(&p_over_t.reciprocal()?))
}

fn certify(index: usize, value: Rational) -> Result<Integer> {
    to_integer(&value).ok_or_else(|| Error::NonIntegerCoefficient {
        index,
        value: value.to_string(),
    })
}

/// Terms `a_0 ..= a_max` of the sequence whose generating function `A`
/// satisfies `alpha(x A(x)) = x`, by Lagrange inversion:
/// `a_(n-1) = [t^(n-1)] (t/alpha(t))^n / n`.
///
/// Powers of the kernel are accumulated one factor at a time; the result is
/// identical to [`lagrange_coefficient`] evaluated for each index.
pub fn lagrange_coefficients(alpha: &ReversiveSymbol, max: usize) -> Result<Vec<Integer>> {
    let kernel = lagrange_kernel(alpha, max)?;
    let mut power = kernel.clone();
    let mut out = Vec::with_capacity(max + 1);
    for n in 1..=max + 1 {
        if n > 1 {
            power = power.mul(&kernel);
        }
        let c = power.coeff(n - 1) / Rational::from_integer(Integer::from(n));
        out.push(certify(n - 1, c)?);
    }
    Ok(out)
}

/// Single term `a_index`, with the kernel raised to the power `index + 1`
/// by repeated squaring at precision `index`.
pub fn lagrange_coefficient(alpha: &ReversiveSymbol, index: usize) -> Result<Integer> {
    let n = index + 1;
    let kernel = lagrange_kernel(alpha, index)?;
    let c = kernel.pow(n as u64).coeff(index) / Rational::from_integer(Integer::from(n));
    certify(index, c)
}

/// Compositional inverse `G` of `alpha` (so `alpha(G(x)) = x`) computed
/// coefficient by coefficient from the triangular system, without Lagrange
/// inversion.
///
/// Keeps `[x^k] G^j` for all `j <= k`; the coefficient `g_k` enters
/// `[x^k] alpha(G)` only through the linear term `a_1 g_k`.
pub fn revert_direct(alpha: &TruncatedSeries) -> Result<TruncatedSeries> {
    let n = alpha.precision();
    let a = alpha.coeffs();
    if !a[0].is_zero() {
        return Err(Error::NotRevertible("nonzero constant term"));
    }
    if n == 0 {
        return Ok(TruncatedSeries::zero(0));
    }
    if a[1].is_zero() {
        return Err(Error::NotRevertible("zero linear coefficient"));
    }
    let inv_slope = a[1].recip();
    // powers[j][k] = [x^k] G^j for 1 <= j <= k <= n.
    let mut powers: Vec<Vec<Rational>> = vec![vec![Rational::zero(); n + 1]; n + 1];
    let mut g = vec![Rational::zero(); n + 1];
    g[1] = inv_slope.clone();
    powers[1][1] = inv_slope.clone();
    for k in 2..=n {
        let mut ck = Rational::zero();
        for j in 2..=k {
            let mut pjk = Rational::zero();
            for i in 1..=(k - j + 1) {
                let prev = &powers[j - 1][k - i];
                if !g[i].is_zero() && !prev.is_zero() {
                    pjk += &g[i] * prev;
                }
            }
            if !a[j].is_zero() {
                ck += &a[j] * &pjk;
            }
            powers[j][k] = pjk;
        }
        g[k] = -ck * &inv_slope;
        powers[1][k] = g[k].clone();
    }
    Ok(TruncatedSeries::new(g, n))
}
