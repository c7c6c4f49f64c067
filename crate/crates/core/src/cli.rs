//! Command implementations behind the `reversive` binary. Each command
//! returns its output as text so it can be tested without a process.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use crate::closed_forms;
use crate::dissection::{
    count_by_series, count_chord_diagrams, enumerate_count, DEFAULT_CHORD_CAP, DEFAULT_DISSECTION_CAP,
    MAX_DISSECTION_N,
};
use crate::error::{Error, Result};
use crate::exact_arith::Integer;
use crate::power_series::{lagrange_coefficients, revert_direct};
use crate::symbols::{catalog, catalog_entry, expand, symbol_from_tile_rule, ReversiveSymbol, TileRule};

/// Annotation printed wherever the odd-tile sum is not evaluated at `n = 0`.
pub const ODD_ZERO_NOTE: &str = "formula: excluded (n=0 anomaly)";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub exhaustive_cap_n: usize,
    pub chord_cap_p: usize,
    pub default_count: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            exhaustive_cap_n: DEFAULT_DISSECTION_CAP,
            chord_cap_p: DEFAULT_CHORD_CAP,
            default_count: 10,
        }
    }
}

impl Config {
    /// `key = value` lines; blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = Config::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::ParseError(format!("config line {}: expected key=value", lineno + 1)))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::ParseError(format!("config line {}: bad value `{}`", lineno + 1, value.trim())))?;
            match key.trim() {
                "exhaustive_cap_n" => cfg.exhaustive_cap_n = value,
                "chord_cap_p" => cfg.chord_cap_p = value,
                "default_count" => cfg.default_count = value,
                other => return Err(Error::ParseError(format!("config line {}: unknown key `{other}`", lineno + 1))),
            }
        }
        Ok(cfg)
    }

    /// Rejects a dissection cap beyond what the enumerator can represent.
    pub fn validate(&self) -> Result<()> {
        if self.exhaustive_cap_n > MAX_DISSECTION_N {
            return Err(Error::CapExceeded {
                requested: self.exhaustive_cap_n,
                cap: MAX_DISSECTION_N,
            });
        }
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| io_error(path, e))?;
        Self::parse(&text)
    }
}

fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Reversion,
    Closed,
    Series,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Reversion => "reversion",
            Method::Closed => "closed",
            Method::Series => "series",
        }
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "reversion" => Ok(Method::Reversion),
            "closed" => Ok(Method::Closed),
            "series" => Ok(Method::Series),
            _ => Err(Error::ParseError(format!("unknown method `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Reversion,
    ClosedForm,
    Oracle,
    Series,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Value(Integer),
    /// Not computed by this path; the text says why.
    Excluded(&'static str),
}

impl std::fmt::Display for Term {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Term::Value(v) => write!(f, "{v}"),
            Term::Excluded(why) => f.write_str(why),
        }
    }
}

/// One run of one computation path over a sequence.
#[derive(Clone, Debug)]
pub struct SequenceRecord {
    pub name: String,
    pub symbol: ReversiveSymbol,
    pub rule: Option<TileRule>,
    /// Terms for `n = 0, 1, ...`.
    pub terms: Vec<Term>,
    pub provenance: Provenance,
}

impl SequenceRecord {
    /// `n a(n)` per line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (n, t) in self.terms.iter().enumerate() {
            writeln!(out, "{n} {t}").unwrap();
        }
        out
    }
}

struct Target {
    symbol: ReversiveSymbol,
    rule: Option<TileRule>,
    catalogued: bool,
}

/// A catalog name, or a symbol in text form.
fn resolve(name_or_symbol: &str) -> Result<Target> {
    if let Some(e) = catalog_entry(name_or_symbol) {
        return Ok(Target {
            symbol: e.symbol,
            rule: e.rule,
            catalogued: true,
        });
    }
    if name_or_symbol.contains('(') {
        let symbol: ReversiveSymbol = name_or_symbol.parse()?;
        return Ok(Target {
            symbol,
            rule: None,
            catalogued: false,
        });
    }
    Err(Error::UnknownName(name_or_symbol.to_string()))
}

fn reversion_terms(symbol: &ReversiveSymbol, count: usize) -> Result<Vec<Integer>> {
    match count {
        0 => Ok(Vec::new()),
        _ => lagrange_coefficients(symbol, count - 1),
    }
}

fn closed_terms(name: &str, count: usize) -> Option<Vec<Term>> {
    let eval = closed_forms::for_catalog_name(name)?;
    let terms = (0..count)
        .map(|n| match eval(n) {
            Ok(v) => Term::Value(v),
            // Only the odd-tile sum at n = 0 is refused.
            Err(_) => Term::Excluded(ODD_ZERO_NOTE),
        })
        .collect();
    Some(terms)
}

pub fn cmd_list() -> String {
    let mut out = String::new();
    for e in catalog() {
        writeln!(out, "{}", e.symbol).unwrap();
    }
    out
}

pub fn sequence_record(name_or_symbol: &str, count: usize, method: Method) -> Result<SequenceRecord> {
    let target = resolve(name_or_symbol)?;
    let unavailable = || Error::MethodUnavailable {
        method: method.as_str().to_string(),
        target: format!("`{name_or_symbol}`"),
    };
    let (terms, provenance) = match method {
        Method::Reversion => {
            let terms = reversion_terms(&target.symbol, count)?;
            (terms.into_iter().map(Term::Value).collect(), Provenance::Reversion)
        }
        Method::Closed => {
            if !target.catalogued {
                return Err(unavailable());
            }
            let terms = closed_terms(target.symbol.name(), count).ok_or_else(unavailable)?;
            (terms, Provenance::ClosedForm)
        }
        Method::Series => {
            let rule = target.rule.as_ref().ok_or_else(unavailable)?;
            let terms = match count {
                0 => Vec::new(),
                _ => count_by_series(count - 1, rule),
            };
            (terms.into_iter().map(Term::Value).collect(), Provenance::Series)
        }
    };
    Ok(SequenceRecord {
        name: target.symbol.name().to_string(),
        symbol: target.symbol,
        rule: target.rule,
        terms,
        provenance,
    })
}

pub fn cmd_terms(name_or_symbol: &str, count: usize, method: Method) -> Result<String> {
    Ok(sequence_record(name_or_symbol, count, method)?.render())
}

/// Output of `verify`: the agreement table and whether every path agreed.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub text: String,
    pub first_mismatch: Option<usize>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Runs every applicable path for a catalog entry and tabulates them:
/// Lagrange reversion, direct reversion, the closed sum, the series
/// counter (tile rules only) and the exhaustive oracle up to its cap.
pub fn cmd_verify(name: &str, count: usize, config: &Config) -> Result<VerifyReport> {
    config.validate()?;
    let entry = catalog_entry(name).ok_or_else(|| Error::UnknownName(name.to_string()))?;
    let symbol = &entry.symbol;
    let lagrange = reversion_terms(symbol, count)?;
    let direct: Vec<Integer> = if count == 0 {
        Vec::new()
    } else {
        let g = revert_direct(&expand(symbol, count))?;
        g.to_integers()
            .ok_or_else(|| Error::NonIntegerCoefficient {
                index: 0,
                value: "direct reversion".into(),
            })?
            .into_iter()
            .skip(1)
            .collect()
    };
    let closed = closed_terms(name, count);
    let series = match (&entry.rule, count) {
        (Some(rule), c) if c > 0 => Some(count_by_series(c - 1, rule)),
        _ => None,
    };

    let mut text = String::new();
    writeln!(text, "{symbol}").unwrap();
    writeln!(text, "n reversion direct closed series oracle status").unwrap();
    let mut first_mismatch = None;
    for n in 0..count {
        let reference = &lagrange[n];
        let mut agree = direct[n] == *reference;

        let closed_cell = match closed.as_ref().map(|c| &c[n]) {
            Some(Term::Value(v)) => {
                agree &= v == reference;
                v.to_string()
            }
            Some(Term::Excluded(why)) => why.to_string(),
            None => "-".into(),
        };
        let series_cell = match &series {
            Some(s) => {
                agree &= s[n] == *reference;
                s[n].to_string()
            }
            None => "-".into(),
        };
        let oracle = match &entry.rule {
            Some(rule) if n <= config.exhaustive_cap_n => Some(enumerate_count(n, rule, config.exhaustive_cap_n)?),
            None if n <= config.chord_cap_p => Some(count_chord_diagrams(n, config.chord_cap_p)?),
            _ => None,
        };
        let oracle_cell = match oracle {
            Some(v) => {
                agree &= v == *reference;
                v.to_string()
            }
            None => "-".into(),
        };
        if !agree && first_mismatch.is_none() {
            first_mismatch = Some(n);
        }
        writeln!(
            text,
            "{n} {reference} {} {closed_cell} {series_cell} {oracle_cell} {}",
            direct[n],
            if agree { "ok" } else { "MISMATCH" }
        )
        .unwrap();
    }
    match first_mismatch {
        Some(n) => writeln!(text, "first mismatch at n={n}").unwrap(),
        None => writeln!(text, "all paths agree for n < {count}").unwrap(),
    }
    Ok(VerifyReport { text, first_mismatch })
}

/// Output of `from-tiles`.
#[derive(Clone, Debug)]
pub struct FromTilesReport {
    pub symbol: ReversiveSymbol,
    pub terms: Vec<Integer>,
    /// First index where reversion disagrees with the series counter or
    /// the exhaustive oracle.
    pub first_mismatch: Option<usize>,
    /// Largest `n` checked against exhaustive enumeration.
    pub oracle_checked_to: Option<usize>,
}

impl FromTilesReport {
    pub fn ok(&self) -> bool {
        self.first_mismatch.is_none()
    }

    pub fn render(&self) -> String {
        let mut out = format!("{}\n", self.symbol);
        for (n, a) in self.terms.iter().enumerate() {
            writeln!(out, "{n} {a}").unwrap();
        }
        out
    }
}

pub fn cmd_from_tiles(spec: &str, count: usize, config: &Config) -> Result<FromTilesReport> {
    config.validate()?;
    let rule: TileRule = spec.parse()?;
    let symbol = symbol_from_tile_rule(&rule)?;
    let terms = reversion_terms(&symbol, count)?;
    let series = match count {
        0 => Vec::new(),
        c => count_by_series(c - 1, &rule),
    };
    let mut first_mismatch = terms.iter().zip(&series).position(|(a, b)| a != b);
    let oracle_to = count.checked_sub(1).map(|last| last.min(config.exhaustive_cap_n));
    if let Some(last) = oracle_to {
        for (n, term) in terms.iter().enumerate().take(last + 1) {
            if enumerate_count(n, &rule, config.exhaustive_cap_n)? != *term {
                first_mismatch = Some(first_mismatch.map_or(n, |m| m.min(n)));
                break;
            }
        }
    }
    Ok(FromTilesReport {
        symbol,
        terms,
        first_mismatch,
        oracle_checked_to: oracle_to,
    })
}

/// Writes `n a(n)` lines for `n = 0 .. count-1`, computed by reversion.
pub fn cmd_bfile(name_or_symbol: &str, count: usize, path: &Path) -> Result<()> {
    let target = resolve(name_or_symbol)?;
    let terms = reversion_terms(&target.symbol, count)?;
    let mut body = String::new();
    for (n, a) in terms.iter().enumerate() {
        writeln!(body, "{n} {a}").unwrap();
    }
    std::fs::write(path, body).map_err(|e| io_error(path, e))
}
