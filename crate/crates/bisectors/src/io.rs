//! The point-set text format.
//!
//! One point per line, two whitespace-separated rationals written as `p/q`
//! or as a bare integer; `#` starts a comment; blank lines are ignored;
//! there is no header. The format round-trips exactly: writing a set and
//! parsing it back yields the same points in the same order.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::geom::{Point, Rational};
use crate::pointset::PointSet;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("line {line}: expected two coordinates, found {found}")]
    MalformedPoint { line: usize, found: usize },
    #[error("line {line}: malformed rational {token:?}")]
    MalformedRational { line: usize, token: String },
    #[error("line {line}: zero denominator in {token:?}")]
    ZeroDenominator { line: usize, token: String },
    #[error("line {line}: duplicate point")]
    DuplicatePoint { line: usize },
}

fn parse_rational(token: &str, line: usize) -> Result<Rational, ParseError> {
    let malformed = || ParseError::MalformedRational {
        line,
        token: token.to_string(),
    };
    match token.split_once('/') {
        None => {
            let n = BigInt::from_str(token).map_err(|_| malformed())?;
            Ok(Rational::from_integer(n))
        }
        Some((num, den)) => {
            let n = BigInt::from_str(num).map_err(|_| malformed())?;
            let d = BigInt::from_str(den).map_err(|_| malformed())?;
            if d.is_zero() {
                return Err(ParseError::ZeroDenominator {
                    line,
                    token: token.to_string(),
                });
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Parses the text format from a string.
pub fn parse_pointset_str(input: &str) -> Result<PointSet, ParseError> {
    let mut points = Vec::new();
    let mut seen: HashSet<Point> = HashSet::new();
    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        if tokens.len() != 2 {
            return Err(ParseError::MalformedPoint {
                line: line_no,
                found: tokens.len(),
            });
        }
        let x = parse_rational(tokens[0], line_no)?;
        let y = parse_rational(tokens[1], line_no)?;
        let p = Point::new(x, y);
        if !seen.insert(p.clone()) {
            return Err(ParseError::DuplicatePoint { line: line_no });
        }
        points.push(p);
    }
    Ok(PointSet::new(points).expect("duplicates were rejected during parsing"))
}

/// Reads and parses a point-set file.
pub fn parse_pointset(path: &Path) -> Result<PointSet, ParseError> {
    let input = std::fs::read_to_string(path)?;
    parse_pointset_str(&input)
}

/// Renders a set in the text format. Integral coordinates print without a
/// denominator, so parsing the output reproduces the set exactly.
pub fn format_pointset(p: &PointSet) -> String {
    let mut out = String::new();
    for point in p.iter() {
        writeln!(out, "{} {}", point.x, point.y).expect("string writes cannot fail");
    }
    out
}

pub fn write_pointset(p: &PointSet, path: &Path) -> Result<(), ParseError> {
    std::fs::write(path, format_pointset(p))?;
    Ok(())
}
