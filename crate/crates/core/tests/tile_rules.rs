//! Symbols synthesized from arbitrary tile rules against the series counter
//! and exhaustive enumeration.

use reversive::dissection::{count_by_series, enumerate_count, DEFAULT_DISSECTION_CAP};
use reversive::power_series::{lagrange_coefficients, revert_direct};
use reversive::symbols::{catalog, expand, symbol_from_tile_rule, verify_inverse, verify_tautological};
use reversive::{TileRule, TruncatedSeries};

const RULES: &[&str] = &["3,5", "4", "5+", "4,6+", "3,6+", "6", "any", "even", "odd", "notriangles", "triangles"];

#[test]
fn synthesized_symbols_count_dissections() {
    for spec in RULES {
        let rule: TileRule = spec.parse().unwrap();
        let symbol = symbol_from_tile_rule(&rule).unwrap();
        let terms = lagrange_coefficients(&symbol, 30).unwrap();
        assert_eq!(terms, count_by_series(30, &rule), "{spec}");
        assert!(verify_inverse(&symbol, &terms), "{spec}");
        assert!(verify_tautological(&rule, &terms), "{spec}");
        for n in 0..=9 {
            assert_eq!(enumerate_count(n, &rule, DEFAULT_DISSECTION_CAP).unwrap(), terms[n], "{spec} n={n}");
        }
    }
}

#[test]
fn catalog_reversion_round_trip() {
    for e in catalog() {
        let alpha = expand(&e.symbol, 100);
        let g = revert_direct(&alpha).unwrap();
        assert_eq!(alpha.compose(&g).unwrap(), TruncatedSeries::identity(100), "{}", e.symbol);
    }
}

#[test]
fn perturbed_terms_fail_both_identities() {
    for e in catalog().into_iter().filter(|e| e.rule.is_some()) {
        let mut terms = lagrange_coefficients(&e.symbol, 20).unwrap();
        terms[13] += 1;
        assert!(!verify_inverse(&e.symbol, &terms), "{}", e.symbol);
        assert!(!verify_tautological(e.rule.as_ref().unwrap(), &terms), "{}", e.symbol);
    }
}
