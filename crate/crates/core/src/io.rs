//! The points-file format: one site per line as `x y`, coordinates integer
//! or rational `p/q`, `#` comment lines and blank lines ignored. Parse
//! errors reject the whole file and carry the 1-based line number.

use std::fmt::Write as _;

use num_bigint::BigInt;
use thiserror::Error;

use crate::geom::{Point, SiteSet, SiteSetError};
use crate::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PointsFileError {
    #[error("line {line}: expected two coordinates, got {fields}")]
    FieldCount { line: usize, fields: usize },
    #[error("line {line}: invalid coordinate `{text}`")]
    BadCoordinate { line: usize, text: String },
    #[error("line {line}: zero denominator in `{text}`")]
    ZeroDenominator { line: usize, text: String },
    #[error("{0}")]
    SiteSet(#[from] SiteSetError),
}

/// Parses a rational coordinate: `p`, `-p`, or `p/q`.
fn parse_rat(text: &str, line: usize) -> Result<Rat, PointsFileError> {
    let bad = || PointsFileError::BadCoordinate {
        line,
        text: text.to_string(),
    };
    match text.split_once('/') {
        None => {
            let n: BigInt = text.parse().map_err(|_| bad())?;
            Ok(Rat::from_integer(n))
        }
        Some((num, den)) => {
            let n: BigInt = num.parse().map_err(|_| bad())?;
            let d: BigInt = den.parse().map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(PointsFileError::ZeroDenominator {
                    line,
                    text: text.to_string(),
                });
            }
            Ok(Rat::new(n, d))
        }
    }
}

/// Parses a whole points file into a site set.
pub fn parse_points(text: &str) -> Result<SiteSet<Rat>, PointsFileError> {
    let mut sites = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(PointsFileError::FieldCount {
                line,
                fields: fields.len(),
            });
        }
        sites.push(Point::new(
            parse_rat(fields[0], line)?,
            parse_rat(fields[1], line)?,
        ));
    }
    Ok(SiteSet::new(sites)?)
}

/// Renders a site set in the points-file format, one `x y` line per site.
/// Integer coordinates print without a denominator, so integer inputs
/// round-trip byte-identically.
pub fn format_points(s: &SiteSet<Rat>) -> String {
    let mut out = String::new();
    for site in s.sites() {
        let _ = writeln!(out, "{} {}", site.x, site.y);
    }
    out
}

/// Canonical string of one rational, as used in files and reports.
pub fn rat_to_string(r: &Rat) -> String {
    r.to_string()
}
