//! Counting restricted dissections of a convex polygon by non-crossing
//! diagonals.
//!
//! Every counting sequence here is catalogued by its *reversive symbol*: a
//! rational function `alpha(F) = P(F)/Q(F)` whose compositional inverse
//! `F(x) = sum a_n x^(n+1)` carries the sequence. Three independent routes
//! produce the terms and are checked against each other:
//!
//! * reversion of the symbol ([`power_series::lagrange_coefficients`] and the
//!   direct triangular solve [`power_series::revert_direct`]),
//! * closed binomial sums ([`closed_forms`]),
//! * brute-force and functional-equation oracles ([`dissection`]).

pub mod cli;
pub mod closed_forms;
pub mod dissection;
pub mod error;
pub mod exact_arith;
pub mod power_series;
pub mod symbols;

pub use error::{Error, Result};
pub use exact_arith::{Integer, Rational};
pub use power_series::TruncatedSeries;
pub use symbols::{Polynomial, ReversiveSymbol, TileRule};
