//! Reversive symbols: the rational functions `alpha(F) = P(F)/Q(F)` whose
//! compositional inverse generates a counting sequence.
//!
//! A tile rule with allowed side-counts `S` decomposes a dissection at its
//! root edge, giving `A = 1 + sum_{s in S} x^(s-2) A^(s-1)`. With `F = xA`
//! this becomes `x = F - sum_{s in S} F^(s-1)`, which [`symbol_from_tile_rule`]
//! folds into a closed rational function.

mod polynomial;
mod tile_rule;

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

pub use polynomial::Polynomial;
pub use tile_rule::{CustomTiles, SideCounts, TileRule};

use crate::error::{Error, Result};
use crate::exact_arith::{Integer, Rational};
use crate::power_series::TruncatedSeries;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReversiveSymbol {
    name: String,
    numerator: Polynomial,
    denominator: Polynomial,
}

impl ReversiveSymbol {
    /// Checks that `P(0) = 0`, `Q(0) != 0` and that the expansion of `P/Q`
    /// has linear coefficient 1.
    pub fn new(name: impl Into<String>, numerator: Polynomial, denominator: Polynomial) -> Result<Self> {
        let name = name.into();
        if name.contains(':') || name.contains('(') || name.trim() != name || name.is_empty() {
            return Err(Error::InvalidSymbol(format!("bad symbol name `{name}`")));
        }
        if !numerator.coeff(0).is_zero() {
            return Err(Error::InvalidSymbol("numerator has a constant term".into()));
        }
        let q0 = denominator.coeff(0);
        if q0.is_zero() {
            return Err(Error::InvalidSymbol("denominator vanishes at 0".into()));
        }
        if numerator.coeff(1) != q0 {
            return Err(Error::InvalidSymbol("linear coefficient of the expansion is not 1".into()));
        }
        Ok(ReversiveSymbol {
            name,
            numerator,
            denominator,
        })
    }

    pub fn from_coeffs(name: &str, numerator: &[i64], denominator: &[i64]) -> Result<Self> {
        Self::new(name, Polynomial::from_i64(numerator), Polynomial::from_i64(denominator))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    pub fn with_name(self, name: impl Into<String>) -> Result<Self> {
        Self::new(name, self.numerator, self.denominator)
    }

    /// Same rational function, compared by cross-multiplication.
    pub fn equivalent(&self, other: &Self) -> bool {
        self.numerator.mul(&other.denominator) == other.numerator.mul(&self.denominator)
    }
}

/// `name: (c0,c1,...)/(d0,d1,...)`
impl fmt::Display for ReversiveSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}/{}", self.name, self.numerator, self.denominator)
    }
}

fn parse_coeff_list(s: &str) -> Result<Polynomial> {
    let inner = s
        .trim()
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::ParseError(format!("expected a parenthesised list, got `{s}`")))?;
    let coeffs = inner
        .split(',')
        .map(|c| {
            c.trim()
                .parse::<Integer>()
                .map_err(|_| Error::ParseError(format!("bad coefficient `{}`", c.trim())))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Polynomial::new(coeffs))
}

/// Parses the symbol text format; the `name:` prefix is optional and
/// defaults to `custom`.
impl FromStr for ReversiveSymbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, body) = match s.split_once(':') {
            Some((n, b)) => (n.trim(), b),
            None => ("custom", s),
        };
        let body: String = body.chars().filter(|c| !c.is_whitespace()).collect();
        let (num, den) = body
            .split_once(")/(")
            .map(|(n, d)| (format!("{n})"), format!("({d}")))
            .ok_or_else(|| Error::ParseError(format!("expected `(..)/(..)`, got `{body}`")))?;
        let numerator = parse_coeff_list(&num)?;
        let denominator = parse_coeff_list(&den)?;
        ReversiveSymbol::new(name, numerator, denominator)
    }
}

/// A catalogued sequence: its symbol and, for dissection counts, the tile
/// rule it enumerates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub symbol: ReversiveSymbol,
    pub rule: Option<TileRule>,
}

/// The six catalogued symbols.
pub fn catalog() -> Vec<CatalogEntry> {
    let entry = |name: &str, num: &[i64], den: &[i64], rule| CatalogEntry {
        symbol: ReversiveSymbol::from_coeffs(name, num, den).expect("catalog symbol is valid"),
        rule,
    };
    vec![
        entry("trianglefree", &[0, 1, -1, -1], &[1, -1], Some(TileRule::NoTriangles)),
        entry("oddtiles", &[0, 1, -1, -1], &[1, 0, -1], Some(TileRule::OddOnly)),
        entry("eventiles", &[0, 1, 0, -2], &[1, 0, -1], Some(TileRule::EvenOnly)),
        entry("schroeder", &[0, 1, -2], &[1, -1], Some(TileRule::Any)),
        entry("catalan", &[0, 1, -1], &[1], Some(TileRule::TrianglesOnly)),
        // Chord diagrams, not a tile rule.
        entry("motzkin", &[0, 1, -1], &[1, 0, 0, -1], None),
    ]
}

pub fn catalog_entry(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.symbol.name() == name)
}

/// `alpha(F) = F - sum_{s in S} F^(s-1)`, with a progression tail
/// `F^(start-1) / (1 - F^step)` put over the common denominator.
pub fn symbol_from_tile_rule(rule: &TileRule) -> Result<ReversiveSymbol> {
    let SideCounts { finite, progression } = rule.side_counts();
    if finite.is_empty() && progression.is_none() {
        return Err(Error::InvalidTileSet("no side-count is allowed".into()));
    }
    let one = || Integer::one();
    let denominator = match progression {
        Some((_, step)) => Polynomial::monomial(one(), 0).sub(&Polynomial::monomial(one(), step as usize)),
        None => Polynomial::monomial(one(), 0),
    };
    let mut finite_sum = Polynomial::default();
    for &s in &finite {
        finite_sum = finite_sum.add(&Polynomial::monomial(one(), s as usize - 1));
    }
    let mut numerator = Polynomial::monomial(one(), 1).sub(&finite_sum).mul(&denominator);
    if let Some((start, _)) = progression {
        numerator = numerator.sub(&Polynomial::monomial(one(), start as usize - 1));
    }
    let name = match rule.keyword() {
        Some(k) => format!("tiles-{k}"),
        None => format!("tiles-{rule}").replace(',', "-"),
    };
    ReversiveSymbol::new(name, numerator, denominator)
}

/// Taylor coefficients of `P/Q` up to `F^precision`.
pub fn expand(symbol: &ReversiveSymbol, precision: usize) -> TruncatedSeries {
    let p = TruncatedSeries::from_integers(symbol.numerator.coeffs().iter().cloned(), precision);
    let q = TruncatedSeries::from_integers(symbol.denominator.coeffs().iter().cloned(), precision);
    let q_inv = q.reciprocal().expect("denominator has nonzero constant term");
    p.mul(&q_inv)
}

fn shifted_series(terms: &[Integer], precision: usize) -> TruncatedSeries {
    let coeffs = std::iter::once(Rational::zero())
        .chain(terms.iter().map(|a| Rational::from_integer(a.clone())))
        .collect();
    TruncatedSeries::new(coeffs, precision)
}

/// Whether `alpha(sum a_n x^(n+1)) = x` modulo `x^(N+2)` for `terms = a_0..a_N`.
pub fn verify_inverse(symbol: &ReversiveSymbol, terms: &[Integer]) -> bool {
    let precision = terms.len();
    let f = shifted_series(terms, precision);
    match expand(symbol, precision).compose(&f) {
        Ok(s) => s == TruncatedSeries::identity(precision),
        Err(_) => false,
    }
}

/// Whether `A = sum a_n x^n` satisfies `A = 1 + sum_{s in S} x^(s-2) A^(s-1)`
/// modulo `x^(N+1)` for `terms = a_0..a_N`.
pub fn verify_tautological(rule: &TileRule, terms: &[Integer]) -> bool {
    let Some(n) = terms.len().checked_sub(1) else {
        return false;
    };
    let a = TruncatedSeries::from_integers(terms.iter().cloned(), n);
    let mut rhs = TruncatedSeries::one(n);
    let mut power = a.clone();
    for s in 3..=n + 2 {
        // power = A^(s-1)
        power = power.mul(&a);
        if rule.allows(s) {
            rhs = rhs.add(&power.shift_up(s - 2));
        }
    }
    rhs == a
}
