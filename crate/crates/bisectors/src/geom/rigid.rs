use num_traits::{One, Zero};

use super::{int, rat, GeomError, Point, Rational};

/// An exact rigid motion `p ↦ M·p + t` with `M` orthogonal.
///
/// `det(M) = +1` for rotations and translations, `−1` for reflections.
/// Squared distances are preserved exactly, so every statistic in this crate
/// is invariant under application of a `RigidMap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidMap {
    // Row-major 2×2 matrix.
    m: [Rational; 4],
    t: [Rational; 2],
}

impl RigidMap {
    pub fn identity() -> Self {
        RigidMap {
            m: [int(1), int(0), int(0), int(1)],
            t: [int(0), int(0)],
        }
    }

    pub fn translation(dx: &Rational, dy: &Rational) -> Self {
        RigidMap {
            m: [int(1), int(0), int(0), int(1)],
            t: [dx.clone(), dy.clone()],
        }
    }

    /// Rotation about the origin by `k` steps of the Pythagorean angle with
    /// cosine 3/5 and sine 4/5. That angle is an irrational multiple of π,
    /// so the orbit of any direction never repeats; composing enough steps
    /// moves any finite point set into general position while keeping all
    /// coordinates rational.
    pub fn rational_rotation(k: u32) -> Self {
        let step = RigidMap {
            m: [rat(3, 5), rat(-4, 5), rat(4, 5), rat(3, 5)],
            t: [int(0), int(0)],
        };
        let mut out = RigidMap::identity();
        for _ in 0..k {
            out = step.compose(&out);
        }
        out
    }

    /// Reflection across the perpendicular bisector of `a` and `b`. Swaps the
    /// two points, fixes the bisector pointwise, and is an exact involution.
    pub fn reflection(a: &Point, b: &Point) -> Result<Self, GeomError> {
        if a == b {
            return Err(GeomError::EqualPoints);
        }
        // Householder reflection with normal u = b − a, through the midpoint.
        let ux = &b.x - &a.x;
        let uy = &b.y - &a.y;
        let len2 = &ux * &ux + &uy * &uy;
        let two = int(2);
        let m00 = int(1) - &two * &ux * &ux / &len2;
        let m01 = -(&two * &ux * &uy / &len2);
        let m11 = int(1) - &two * &uy * &uy / &len2;
        let mid_x = (&a.x + &b.x) / &two;
        let mid_y = (&a.y + &b.y) / &two;
        let s = &mid_x * &ux + &mid_y * &uy;
        let tx = &two * &s * &ux / &len2;
        let ty = &two * &s * &uy / &len2;
        Ok(RigidMap {
            m: [m00, m01.clone(), m01, m11],
            t: [tx, ty],
        })
    }

    pub fn apply(&self, p: &Point) -> Point {
        Point::new(
            &self.m[0] * &p.x + &self.m[1] * &p.y + &self.t[0],
            &self.m[2] * &p.x + &self.m[3] * &p.y + &self.t[1],
        )
    }

    /// Composition `self ∘ inner` (apply `inner` first).
    pub fn compose(&self, inner: &Self) -> Self {
        let m = [
            &self.m[0] * &inner.m[0] + &self.m[1] * &inner.m[2],
            &self.m[0] * &inner.m[1] + &self.m[1] * &inner.m[3],
            &self.m[2] * &inner.m[0] + &self.m[3] * &inner.m[2],
            &self.m[2] * &inner.m[1] + &self.m[3] * &inner.m[3],
        ];
        let t = [
            &self.m[0] * &inner.t[0] + &self.m[1] * &inner.t[1] + &self.t[0],
            &self.m[2] * &inner.t[0] + &self.m[3] * &inner.t[1] + &self.t[1],
        ];
        RigidMap { m, t }
    }

    pub fn det(&self) -> Rational {
        &self.m[0] * &self.m[3] - &self.m[1] * &self.m[2]
    }

    /// Exact orthogonality check: unit-length, mutually perpendicular
    /// columns.
    pub fn is_orthogonal(&self) -> bool {
        let c0 = &self.m[0] * &self.m[0] + &self.m[2] * &self.m[2];
        let c1 = &self.m[1] * &self.m[1] + &self.m[3] * &self.m[3];
        let dot = &self.m[0] * &self.m[1] + &self.m[2] * &self.m[3];
        c0.is_one() && c1.is_one() && dot.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::dist2;

    fn pt(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn reflection_swaps_endpoints_and_involutes() {
        let a = pt(0, 0);
        let b = pt(2, 0);
        let r = RigidMap::reflection(&a, &b).unwrap();
        assert_eq!(r.apply(&a), b);
        assert_eq!(r.apply(&b), a);
        assert_eq!(r.apply(&pt(5, 7)), pt(-3, 7));
        assert!(r.is_orthogonal());
        assert_eq!(r.det(), int(-1));
        let p = Point::new(rat(7, 3), rat(-2, 5));
        assert_eq!(r.apply(&r.apply(&p)), p);
    }

    #[test]
    fn reflection_across_diagonal_bisector() {
        let r = RigidMap::reflection(&pt(0, 0), &pt(2, 2)).unwrap();
        assert_eq!(r.apply(&pt(1, 0)), pt(2, 1));
    }

    #[test]
    fn rotation_steps_match_double_angle() {
        let r1 = RigidMap::rational_rotation(1);
        assert_eq!(r1.apply(&pt(1, 0)), Point::new(rat(3, 5), rat(4, 5)));
        assert_eq!(r1.apply(&pt(5, 0)), pt(3, 4));
        assert!(r1.is_orthogonal());
        assert_eq!(r1.det(), int(1));
        let r2 = RigidMap::rational_rotation(2);
        assert_eq!(r2.apply(&pt(1, 0)), Point::new(rat(-7, 25), rat(24, 25)));
        assert_eq!(r2, r1.compose(&r1));
    }

    #[test]
    fn rigid_maps_preserve_squared_distance() {
        let maps = [
            RigidMap::rational_rotation(3),
            RigidMap::reflection(&pt(1, 2), &pt(-4, 7)).unwrap(),
            RigidMap::translation(&rat(1, 3), &int(-2)),
        ];
        let p = Point::new(rat(5, 2), rat(-1, 7));
        let q = pt(-3, 4);
        for m in &maps {
            assert_eq!(dist2(&m.apply(&p), &m.apply(&q)), dist2(&p, &q));
        }
    }

    #[test]
    fn reflection_rejects_equal_points() {
        assert!(RigidMap::reflection(&pt(1, 1), &pt(1, 1)).is_err());
    }
}
