//! Deliberately naive reference implementations for differential testing.
//!
//! Everything here recomputes its answer from first principles in raw
//! rational arithmetic. In particular, line equality is decided by pairwise
//! cross-multiplication of unreduced coefficients — no canonicalization, no
//! hashing — so these oracles share nothing with the fast paths beyond the
//! `geom` primitives themselves. Caps keep the worst-case loops under
//! control; exceeding a cap is an error, never a silent truncation.

use std::collections::HashMap;

use num_traits::Zero;
use thiserror::Error;

use crate::geom::{circumcircle, dist2, int, CanonicalCircle, GeomError, Point, Rational};
use crate::pointset::PointSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("oracle cap is {cap} points, got {got}")]
    SetTooLarge { cap: usize, got: usize },
}

/// Largest set accepted by the quartic-time energy oracle.
pub const ENERGY_CAP: usize = 30;
/// Largest set accepted by the cubic-time oracles.
pub const CUBIC_CAP: usize = 60;

fn cap(p: &PointSet, cap: usize) -> Result<(), OracleError> {
    if p.len() > cap {
        return Err(OracleError::SetTooLarge { cap, got: p.len() });
    }
    Ok(())
}

/// Unreduced line coefficients `ax + by = c`. `(a, b)` must be nonzero for
/// the triple to describe a line.
#[derive(Clone, Debug)]
pub struct RawLine {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl RawLine {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Self {
        RawLine { a, b, c }
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Self {
        RawLine::new(int(a), int(b), int(c))
    }

    /// The bisector of two distinct points, left unreduced.
    pub fn bisector(p: &Point, q: &Point) -> Result<Self, GeomError> {
        if p == q {
            return Err(GeomError::EqualPoints);
        }
        let two = int(2);
        Ok(RawLine::new(
            &two * (&q.x - &p.x),
            &two * (&q.y - &p.y),
            (&q.x * &q.x + &q.y * &q.y) - (&p.x * &p.x + &p.y * &p.y),
        ))
    }
}

/// Whether two raw coefficient triples describe the same solution set,
/// decided by cross-multiplication: the triples must be proportional.
pub fn brute_line_equality(l1: &RawLine, l2: &RawLine) -> bool {
    debug_assert!(!(l1.a.is_zero() && l1.b.is_zero()));
    debug_assert!(!(l2.a.is_zero() && l2.b.is_zero()));
    &l1.a * &l2.b == &l2.a * &l1.b
        && &l1.a * &l2.c == &l2.a * &l1.c
        && &l1.b * &l2.c == &l2.b * &l1.c
}

/// Bisector energy by literal enumeration of ordered pairs of ordered
/// pairs, comparing raw bisectors with [`brute_line_equality`].
pub fn brute_energy(p: &PointSet) -> Result<u64, OracleError> {
    cap(p, ENERGY_CAP)?;
    let pts = p.points();
    let n = pts.len();
    let mut raw = Vec::with_capacity(n * (n - 1));
    for i in 0..n {
        for j in 0..n {
            if i != j {
                raw.push(RawLine::bisector(&pts[i], &pts[j]).expect("distinct"));
            }
        }
    }
    // Every ordered pair coincides with itself; off-diagonal matches are
    // symmetric, so count each unordered match twice.
    let mut count = raw.len() as u64;
    for i in 0..raw.len() {
        for j in (i + 1)..raw.len() {
            if brute_line_equality(&raw[i], &raw[j]) {
                count += 2;
            }
        }
    }
    Ok(count)
}

/// Isoceles triples by literal scan over all ordered triples of distinct
/// indices.
pub fn brute_isoceles(p: &PointSet) -> Result<u64, OracleError> {
    cap(p, CUBIC_CAP)?;
    let pts = p.points();
    let n = pts.len();
    let mut d2 = vec![vec![Rational::zero(); n]; n];
    for (i, row) in d2.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = dist2(&pts[i], &pts[j]);
        }
    }
    let mut count = 0u64;
    for (a, row) in d2.iter().enumerate() {
        for q in 0..n {
            for r in 0..n {
                if a != q && a != r && q != r && row[q] == row[r] {
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

/// Cocircularity maximum by hashing the circumcircle of every non-collinear
/// triple and accumulating the point set of each circle.
pub fn brute_max_cocircular(p: &PointSet) -> Result<u64, OracleError> {
    cap(p, CUBIC_CAP)?;
    let pts = p.points();
    let n = pts.len();
    let mut on_circle: HashMap<CanonicalCircle, Vec<usize>> = HashMap::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                if let Ok(c) = circumcircle(&pts[i], &pts[j], &pts[k]) {
                    let members = on_circle.entry(c).or_default();
                    for idx in [i, j, k] {
                        if !members.contains(&idx) {
                            members.push(idx);
                        }
                    }
                }
            }
        }
    }
    Ok(on_circle
        .values()
        .map(|m| m.len() as u64)
        .max()
        .unwrap_or(0)
        .max(2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(coords: &[(i64, i64)]) -> PointSet {
        PointSet::new(coords.iter().map(|&(x, y)| Point::from_ints(x, y)).collect()).unwrap()
    }

    #[test]
    fn energy_of_tiny_sets() {
        assert_eq!(brute_energy(&set(&[(0, 0), (1, 1)])).unwrap(), 4);
        assert_eq!(brute_energy(&set(&[(0, 0), (1, 0), (2, 0)])).unwrap(), 12);
        assert_eq!(
            brute_energy(&set(&[(1, 0), (0, 1), (-1, 0), (0, -1)])).unwrap(),
            40
        );
    }

    #[test]
    fn isoceles_of_square() {
        assert_eq!(
            brute_isoceles(&set(&[(1, 0), (0, 1), (-1, 0), (0, -1)])).unwrap(),
            8
        );
    }

    #[test]
    fn cocircular_square_plus_center() {
        assert_eq!(
            brute_max_cocircular(&set(&[(1, 0), (0, 1), (-1, 0), (0, -1), (0, 0)])).unwrap(),
            4
        );
    }

    #[test]
    fn line_equality_ignores_scaling() {
        assert!(brute_line_equality(
            &RawLine::from_ints(1, 0, 1),
            &RawLine::from_ints(2, 0, 2)
        ));
        assert!(brute_line_equality(
            &RawLine::from_ints(-3, 6, -9),
            &RawLine::from_ints(1, -2, 3)
        ));
        assert!(!brute_line_equality(
            &RawLine::from_ints(1, 0, 1),
            &RawLine::from_ints(1, 0, 2)
        ));
        assert!(!brute_line_equality(
            &RawLine::from_ints(1, 2, 3),
            &RawLine::from_ints(2, 1, 3)
        ));
    }

    #[test]
    fn caps_are_enforced() {
        let big: Vec<_> = (0..31).map(|i| Point::from_ints(i, i * i)).collect();
        let p = PointSet::new(big).unwrap();
        assert_eq!(
            brute_energy(&p),
            Err(OracleError::SetTooLarge { cap: 30, got: 31 })
        );
    }
}
