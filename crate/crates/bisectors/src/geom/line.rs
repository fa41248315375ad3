use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{coprime_ints, int, GeomError, Point, Rational};

/// A line `Ax + By = C` in reduced integer form.
///
/// Invariants: `(A, B) ≠ (0, 0)`, `gcd(|A|, |B|, |C|) = 1`, and the sign rule
/// `A > 0`, or `A = 0 and B > 0`. Equal lines therefore have bit-identical
/// fields, which makes equality and hashing O(1) and exact.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalLine {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

/// A line viewed as `y = sx + t`, or the vertical marker `x = const` when
/// no such view exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SlopeIntercept {
    Sloped { slope: Rational, intercept: Rational },
    Vertical { x: Rational },
}

impl CanonicalLine {
    /// Canonicalizes `ax + by = c` with rational coefficients.
    pub fn from_coeffs(a: &Rational, b: &Rational, c: &Rational) -> Result<Self, GeomError> {
        if a.is_zero() && b.is_zero() {
            return Err(GeomError::DegenerateLine);
        }
        let mut v = coprime_ints(&[a, b, c]);
        let flip = v[0].is_negative() || (v[0].is_zero() && v[1].is_negative());
        if flip {
            for x in &mut v {
                *x = -&*x;
            }
        }
        let c = v.pop().expect("three coefficients");
        let b = v.pop().expect("three coefficients");
        let a = v.pop().expect("three coefficients");
        Ok(CanonicalLine { a, b, c })
    }

    /// The line through two distinct points.
    pub fn through(p: &Point, q: &Point) -> Result<Self, GeomError> {
        if p == q {
            return Err(GeomError::EqualPoints);
        }
        let a = &q.y - &p.y;
        let b = &p.x - &q.x;
        let c = &a * &p.x + &b * &p.y;
        Self::from_coeffs(&a, &b, &c)
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    /// Exact membership test, done in integers after clearing denominators.
    pub fn contains(&self, p: &Point) -> bool {
        let lhs = &self.a * p.x.numer() * p.y.denom() + &self.b * p.y.numer() * p.x.denom();
        let rhs = &self.c * p.x.denom() * p.y.denom();
        lhs == rhs
    }

    pub fn is_parallel_to(&self, other: &Self) -> bool {
        &self.a * &other.b == &other.a * &self.b
    }

    /// The unique common point of two non-parallel lines; `None` when the
    /// lines are parallel or equal.
    pub fn intersection(&self, other: &Self) -> Option<Point> {
        let det = &self.a * &other.b - &other.a * &self.b;
        if det.is_zero() {
            return None;
        }
        let x = Rational::new(&self.c * &other.b - &other.c * &self.b, det.clone());
        let y = Rational::new(&self.a * &other.c - &other.a * &self.c, det);
        Some(Point::new(x, y))
    }

    /// The slope–intercept view. Vertical lines have no such view and come
    /// back as the `Vertical` marker carrying their x-value.
    pub fn slope_intercept(&self) -> SlopeIntercept {
        if self.b.is_zero() {
            SlopeIntercept::Vertical {
                x: Rational::new(self.c.clone(), self.a.clone()),
            }
        } else {
            SlopeIntercept::Sloped {
                slope: Rational::new(-self.a.clone(), self.b.clone()),
                intercept: Rational::new(self.c.clone(), self.b.clone()),
            }
        }
    }
}

impl fmt::Display for CanonicalLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x + {}y = {}", self.a, self.b, self.c)
    }
}

/// The perpendicular bisector of two distinct points: the locus of points
/// equidistant from `a` and `b`. Its normal is parallel to `b − a` and it
/// passes through the midpoint of the segment.
pub fn bisector(a: &Point, b: &Point) -> Result<CanonicalLine, GeomError> {
    if a == b {
        return Err(GeomError::EqualPoints);
    }
    // Expanding |p−a|² = |p−b|²: 2(bx−ax)·x + 2(by−ay)·y = |b|² − |a|².
    let two = int(2);
    let ca = &two * (&b.x - &a.x);
    let cb = &two * (&b.y - &a.y);
    let cc = (&b.x * &b.x + &b.y * &b.y) - (&a.x * &a.x + &a.y * &a.y);
    CanonicalLine::from_coeffs(&ca, &cb, &cc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{dist2, rat};

    fn line(a: i64, b: i64, c: i64) -> CanonicalLine {
        CanonicalLine::from_coeffs(&int(a), &int(b), &int(c)).unwrap()
    }

    fn pt(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn bisector_of_horizontal_pair_is_vertical() {
        let l = bisector(&pt(0, 0), &pt(2, 0)).unwrap();
        assert_eq!(l, line(1, 0, 1));
    }

    #[test]
    fn bisector_matches_hand_derived_cases() {
        assert_eq!(bisector(&pt(0, 0), &pt(2, 2)).unwrap(), line(1, 1, 2));
        assert_eq!(bisector(&pt(0, 0), &pt(1, 3)).unwrap(), line(1, 3, 5));
    }

    #[test]
    fn bisector_is_symmetric_and_equidistant() {
        let a = Point::new(rat(1, 2), int(0));
        let b = Point::new(int(0), rat(1, 3));
        let l = bisector(&a, &b).unwrap();
        assert_eq!(l, bisector(&b, &a).unwrap());
        // A point of the line from the x = (c - b*y)/a parametrization.
        let on = pt(5, 0);
        let l2 = bisector(&pt(0, 0), &pt(1, 3)).unwrap();
        assert!(l2.contains(&on));
        assert_eq!(dist2(&on, &pt(0, 0)), dist2(&on, &pt(1, 3)));
    }

    #[test]
    fn bisector_rejects_equal_points() {
        assert_eq!(bisector(&pt(1, 1), &pt(1, 1)), Err(GeomError::EqualPoints));
    }

    #[test]
    fn slope_intercept_views() {
        assert_eq!(
            line(1, 1, 2).slope_intercept(),
            SlopeIntercept::Sloped {
                slope: int(-1),
                intercept: int(2)
            }
        );
        assert_eq!(
            line(0, 1, 5).slope_intercept(),
            SlopeIntercept::Sloped {
                slope: int(0),
                intercept: int(5)
            }
        );
        assert_eq!(
            line(1, 0, 1).slope_intercept(),
            SlopeIntercept::Vertical { x: int(1) }
        );
    }

    #[test]
    fn canonical_form_reduces_and_fixes_sign() {
        let l = CanonicalLine::from_coeffs(&int(-2), &int(-4), &int(-6)).unwrap();
        assert_eq!(l, line(1, 2, 3));
        let v = CanonicalLine::from_coeffs(&int(0), &rat(-1, 3), &int(1)).unwrap();
        assert_eq!(v, line(0, 1, -3));
    }

    #[test]
    fn intersection_and_parallelism() {
        let l1 = line(1, 1, 2);
        let l2 = line(1, -1, 0);
        assert_eq!(l1.intersection(&l2), Some(pt(1, 1)));
        let l3 = line(1, 1, 5);
        assert!(l1.is_parallel_to(&l3));
        assert!(l1.intersection(&l3).is_none());
        assert!(l1.is_parallel_to(&l1));
    }
}
