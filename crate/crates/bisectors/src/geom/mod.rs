//! Exact planar geometry over the rationals.
//!
//! Coordinates are arbitrary-precision rationals and every predicate is
//! decided in integer arithmetic after clearing denominators. There is no
//! floating point in this module and no epsilon anywhere: two lines are equal
//! exactly when their reduced coefficient vectors are bit-identical.

mod circle;
mod line;
mod rigid;

pub use circle::{circumcircle, CanonicalCircle};
pub use line::{bisector, CanonicalLine, SlopeIntercept};
pub use rigid::RigidMap;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

/// Coordinate field: arbitrary-precision rationals, always stored reduced
/// with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for `n/d` as a [`Rational`]. Panics on `d = 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for an integer-valued [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeomError {
    #[error("operation requires two distinct points")]
    EqualPoints,
    #[error("the three points are collinear")]
    Collinear,
    #[error("coefficients do not define a line")]
    DegenerateLine,
    #[error("coefficients do not define a nonempty circle")]
    DegenerateCircle,
}

/// A point of the rational plane.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(int(x), int(y))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Squared euclidean distance. Distances themselves are irrational in
/// general; their squares stay in the field, so all comparisons downstream
/// are between squares.
pub fn dist2(a: &Point, b: &Point) -> Rational {
    let dx = &a.x - &b.x;
    let dy = &a.y - &b.y;
    &dx * &dx + &dy * &dy
}

/// Inversion in the unit circle around `center`:
/// `q ↦ center + (q − center) / |q − center|²`.
///
/// Involutive on the punctured plane, and maps circles through `center` to
/// lines, which reduces cocircularity questions to collinearity questions.
pub fn invert(center: &Point, q: &Point) -> Result<Point, GeomError> {
    let d2 = dist2(center, q);
    if d2.is_zero() {
        return Err(GeomError::EqualPoints);
    }
    Ok(Point::new(
        &center.x + (&q.x - &center.x) / &d2,
        &center.y + (&q.y - &center.y) / &d2,
    ))
}

/// Clears denominators from rational coefficients and divides out the common
/// integer factor, yielding the coprime integer vector (unique up to sign).
pub(crate) fn coprime_ints(vals: &[&Rational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for v in vals {
        lcm = lcm.lcm(v.denom());
    }
    let mut ints: Vec<BigInt> = vals
        .iter()
        .map(|v| v.numer() * (&lcm / v.denom()))
        .collect();
    let mut gcd = BigInt::zero();
    for i in &ints {
        gcd = gcd.gcd(i);
    }
    if !gcd.is_zero() && !gcd.is_one() {
        for i in &mut ints {
            *i = &*i / &gcd;
        }
    }
    ints
}
