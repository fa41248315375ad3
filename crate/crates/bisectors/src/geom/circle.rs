use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{coprime_ints, int, GeomError, Point, Rational};

/// A circle `G(x² + y²) + Dx + Ey + F = 0` in reduced integer form.
///
/// Invariants: `G > 0`, `gcd(G, |D|, |E|, |F|) = 1`, and the discriminant
/// `D² + E² − 4GF > 0` (the circle is nonempty and nondegenerate). The
/// general form is the storage form because circumcenters of rational points
/// are rational while radii usually are not.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCircle {
    g: BigInt,
    d: BigInt,
    e: BigInt,
    f: BigInt,
}

impl CanonicalCircle {
    /// Canonicalizes `g(x² + y²) + dx + ey + f = 0` with rational
    /// coefficients.
    pub fn from_coeffs(
        g: &Rational,
        d: &Rational,
        e: &Rational,
        f: &Rational,
    ) -> Result<Self, GeomError> {
        if g.is_zero() {
            return Err(GeomError::DegenerateCircle);
        }
        let mut v = coprime_ints(&[g, d, e, f]);
        if v[0].is_negative() {
            for x in &mut v {
                *x = -&*x;
            }
        }
        let f = v.pop().expect("four coefficients");
        let e = v.pop().expect("four coefficients");
        let d = v.pop().expect("four coefficients");
        let g = v.pop().expect("four coefficients");
        let disc = &d * &d + &e * &e - BigInt::from(4) * &g * &f;
        if !disc.is_positive() {
            return Err(GeomError::DegenerateCircle);
        }
        Ok(CanonicalCircle { g, d, e, f })
    }

    /// The circle with the given center and positive squared radius.
    pub fn from_center_radius2(center: &Point, r2: &Rational) -> Result<Self, GeomError> {
        if !r2.is_positive() {
            return Err(GeomError::DegenerateCircle);
        }
        let two = int(2);
        let d = -(&two * &center.x);
        let e = -(&two * &center.y);
        let f = &center.x * &center.x + &center.y * &center.y - r2;
        Self::from_coeffs(&int(1), &d, &e, &f)
    }

    pub fn g(&self) -> &BigInt {
        &self.g
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn e(&self) -> &BigInt {
        &self.e
    }

    pub fn f(&self) -> &BigInt {
        &self.f
    }

    pub fn center(&self) -> Point {
        let two_g = BigInt::from(2) * &self.g;
        Point::new(
            Rational::new(-self.d.clone(), two_g.clone()),
            Rational::new(-self.e.clone(), two_g),
        )
    }

    pub fn radius2(&self) -> Rational {
        let num = &self.d * &self.d + &self.e * &self.e - BigInt::from(4) * &self.g * &self.f;
        let den = BigInt::from(4) * &self.g * &self.g;
        Rational::new(num, den)
    }

    /// Exact membership test, done in integers after clearing denominators.
    pub fn contains(&self, p: &Point) -> bool {
        let (xn, xd) = (p.x.numer(), p.x.denom());
        let (yn, yd) = (p.y.numer(), p.y.denom());
        let xd2 = xd * xd;
        let yd2 = yd * yd;
        let lhs = &self.g * (xn * xn * &yd2 + yn * yn * &xd2)
            + &self.d * xn * xd * &yd2
            + &self.e * yn * yd * &xd2
            + &self.f * &xd2 * &yd2;
        lhs.is_zero()
    }
}

impl fmt::Display for CanonicalCircle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}(x²+y²) + {}x + {}y + {} = 0",
            self.g, self.d, self.e, self.f
        )
    }
}

/// The unique circle through three pairwise distinct, non-collinear points.
pub fn circumcircle(p: &Point, q: &Point, r: &Point) -> Result<CanonicalCircle, GeomError> {
    if p == q || q == r || p == r {
        return Err(GeomError::EqualPoints);
    }
    let sp = &p.x * &p.x + &p.y * &p.y;
    let sq = &q.x * &q.x + &q.y * &q.y;
    let sr = &r.x * &r.x + &r.y * &r.y;
    // Cofactors of the first row of |x²+y², x, y, 1| over the three points.
    let g = det3(&p.x, &p.y, &int(1), &q.x, &q.y, &int(1), &r.x, &r.y, &int(1));
    if g.is_zero() {
        return Err(GeomError::Collinear);
    }
    let d = -det3(&sp, &p.y, &int(1), &sq, &q.y, &int(1), &sr, &r.y, &int(1));
    let e = det3(&sp, &p.x, &int(1), &sq, &q.x, &int(1), &sr, &r.x, &int(1));
    let f = -det3(&sp, &p.x, &p.y, &sq, &q.x, &q.y, &sr, &r.x, &r.y);
    CanonicalCircle::from_coeffs(&g, &d, &e, &f)
}

#[allow(clippy::too_many_arguments)]
fn det3(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    d: &Rational,
    e: &Rational,
    f: &Rational,
    g: &Rational,
    h: &Rational,
    i: &Rational,
) -> Rational {
    a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::dist2;

    fn pt(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    fn circ(g: i64, d: i64, e: i64, f: i64) -> CanonicalCircle {
        CanonicalCircle::from_coeffs(&int(g), &int(d), &int(e), &int(f)).unwrap()
    }

    #[test]
    fn circumcircle_unit_circle() {
        let c = circumcircle(&pt(1, 0), &pt(0, 1), &pt(-1, 0)).unwrap();
        assert_eq!(c, circ(1, 0, 0, -1));
        assert_eq!(c.center(), pt(0, 0));
        assert_eq!(c.radius2(), int(1));
    }

    #[test]
    fn circumcircle_through_given_points() {
        let c = circumcircle(&pt(0, 0), &pt(2, 0), &pt(0, 2)).unwrap();
        assert_eq!(c, circ(1, -2, -2, 0));
        for p in [pt(0, 0), pt(2, 0), pt(0, 2)] {
            assert!(c.contains(&p));
        }
        assert!(!c.contains(&pt(1, 1)));
    }

    #[test]
    fn circumcircle_rejects_collinear_and_equal() {
        assert_eq!(
            circumcircle(&pt(0, 0), &pt(1, 0), &pt(2, 0)),
            Err(GeomError::Collinear)
        );
        assert_eq!(
            circumcircle(&pt(0, 0), &pt(0, 0), &pt(2, 0)),
            Err(GeomError::EqualPoints)
        );
    }

    #[test]
    fn circumcircle_is_permutation_invariant() {
        let pts = [pt(3, 1), pt(-2, 4), pt(1, -5)];
        let c = circumcircle(&pts[0], &pts[1], &pts[2]).unwrap();
        assert_eq!(c, circumcircle(&pts[1], &pts[2], &pts[0]).unwrap());
        assert_eq!(c, circumcircle(&pts[2], &pts[0], &pts[1]).unwrap());
        assert_eq!(c, circumcircle(&pts[1], &pts[0], &pts[2]).unwrap());
        // All three points are equidistant from the center.
        let r2 = dist2(&c.center(), &pts[0]);
        assert_eq!(r2, dist2(&c.center(), &pts[1]));
        assert_eq!(r2, dist2(&c.center(), &pts[2]));
        assert_eq!(r2, c.radius2());
    }

    #[test]
    fn center_radius_roundtrip() {
        let c = CanonicalCircle::from_center_radius2(&pt(2, -3), &int(5)).unwrap();
        assert_eq!(c.center(), pt(2, -3));
        assert_eq!(c.radius2(), int(5));
        assert!(c.contains(&pt(1, -1)));
        assert!(CanonicalCircle::from_center_radius2(&pt(0, 0), &int(0)).is_err());
    }
}
