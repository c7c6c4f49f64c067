use std::fmt;

use num_traits::Zero;

use crate::exact_arith::Integer;

/// Integer polynomial in one variable, coefficients by increasing degree.
/// The highest stored coefficient is nonzero; the zero polynomial stores
/// nothing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Integer>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Integer>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Integer::from(c)).collect())
    }

    /// `c * F^degree`.
    pub fn monomial(c: Integer, degree: usize) -> Self {
        let mut coeffs = vec![Integer::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Integer {
        self.coeffs.get(i).cloned().unwrap_or_else(Integer::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::default();
        }
        let mut out = vec![Integer::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }
}

/// Renders as the bracketed coefficient list, e.g. `(0,1,-2)`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_trailing_zeros() {
        let p = Polynomial::from_i64(&[0, 1, 0, 0]);
        assert_eq!(p.coeffs().len(), 2);
        assert_eq!(p.degree(), Some(1));
        assert!(Polynomial::from_i64(&[0, 0]).is_zero());
        assert_eq!(Polynomial::from_i64(&[]).degree(), None);
    }

    #[test]
    fn arithmetic() {
        let a = Polynomial::from_i64(&[1, -1]);
        let b = Polynomial::from_i64(&[1, 1, 1]);
        assert_eq!(a.mul(&b), Polynomial::from_i64(&[1, 0, 0, -1]));
        assert_eq!(a.add(&b), Polynomial::from_i64(&[2, 0, 1]));
        assert!(a.sub(&a).is_zero());
        assert_eq!(Polynomial::monomial(Integer::from(3), 2), Polynomial::from_i64(&[0, 0, 3]));
    }

    #[test]
    fn display() {
        assert_eq!(Polynomial::from_i64(&[0, 1, -2]).to_string(), "(0,1,-2)");
        assert_eq!(Polynomial::default().to_string(), "(0)");
    }
}
