//! Generators for the benchmark point-set families.
//!
//! All generators produce exact rational coordinates and validate their
//! output through [`PointSet::new`], so distinctness is checked rather than
//! assumed. Randomness is always seeded explicitly and never ambient.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::geom::{int, rat, Point, Rational, RigidMap};
use crate::pointset::PointSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("ellipse train needs M ≥ 8, M ≡ 0 (mod 8) and M | n; got n = {n}, m = {m}")]
    BadEllipseParams { n: u32, m: u32 },
    #[error("{n} distinct integer points do not fit in [-{range}, {range}]²")]
    RangeTooSmall { n: u32, range: i64 },
}

/// A reproducible description of one generated family instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorSpec {
    /// The k×k integer grid {0..k−1}².
    Grid { k: u32 },
    /// n equally spaced collinear points (i, 0).
    Line { n: u32 },
    /// n rational points on the unit circle.
    RationalCircle { n: u32 },
    /// The mirrored ellipse-train construction with n points on m/8
    /// translated ellipses.
    EllipseTrain { n: u32, m: u32 },
    /// n distinct integer points drawn uniformly from [−range, range]².
    Random { n: u32, range: i64, seed: u64 },
}

impl GeneratorSpec {
    pub fn family_name(&self) -> &'static str {
        match self {
            GeneratorSpec::Grid { .. } => "grid",
            GeneratorSpec::Line { .. } => "line",
            GeneratorSpec::RationalCircle { .. } => "circle",
            GeneratorSpec::EllipseTrain { .. } => "ellipse-train",
            GeneratorSpec::Random { .. } => "random",
        }
    }

    pub fn generate(&self) -> Result<PointSet, GenError> {
        match *self {
            GeneratorSpec::Grid { k } => Ok(gen_grid(k)),
            GeneratorSpec::Line { n } => Ok(gen_line(n)),
            GeneratorSpec::RationalCircle { n } => Ok(gen_rational_circle(n)),
            GeneratorSpec::EllipseTrain { n, m } => gen_ellipse_train(n, m),
            GeneratorSpec::Random { n, range, seed } => gen_random(n, range, seed),
        }
    }
}

/// The k×k integer grid.
pub fn gen_grid(k: u32) -> PointSet {
    let mut pts = Vec::with_capacity((k * k) as usize);
    for x in 0..k {
        for y in 0..k {
            pts.push(Point::from_ints(x as i64, y as i64));
        }
    }
    PointSet::new(pts).expect("grid points are distinct")
}

/// n equally spaced points on the x-axis.
pub fn gen_line(n: u32) -> PointSet {
    let pts = (0..n).map(|i| Point::from_ints(i as i64, 0)).collect();
    PointSet::new(pts).expect("line points are distinct")
}

/// n distinct rational points on the unit circle, via the tangent
/// half-angle parametrization u ↦ ((1−u²)/(1+u²), 2u/(1+u²)) at u = 0..n−1.
pub fn gen_rational_circle(n: u32) -> PointSet {
    let pts = (0..n)
        .map(|i| {
            let u = int(i as i64);
            let u2 = &u * &u;
            let den = int(1) + &u2;
            Point::new((int(1) - &u2) / &den, int(2) * &u / &den)
        })
        .collect();
    PointSet::new(pts).expect("the parametrization is injective")
}

/// The ellipse-train construction: 4n/m points with positive x-coordinate
/// on the ellipse 4x² + y² = 1 (major axis 2 along y, minor axis 1 along
/// x), their mirror images across the y-axis, and the union of the m/8
/// translates of that ellipse by (4j, 0).
///
/// A line meets each ellipse at most twice and a circle at most four times,
/// so no line or circle contains m or more of the points, while each
/// mirror line x = 4j bisects many pairs, forcing large bisector energy.
pub fn gen_ellipse_train(n: u32, m: u32) -> Result<PointSet, GenError> {
    if m < 8 || !m.is_multiple_of(8) || n == 0 || !n.is_multiple_of(m) {
        return Err(GenError::BadEllipseParams { n, m });
    }
    let per_side = (4 * n / m) as i64;
    let copies = m / 8;
    // Strictly positive x needs u in (0, 1); evenly spaced rational
    // parameters keep the construction deterministic and exact.
    let mut half = Vec::with_capacity(per_side as usize);
    for i in 1..=per_side {
        let u = rat(i, per_side + 1);
        let u2 = &u * &u;
        let den = int(1) + &u2;
        let x = (int(1) - &u2) / (int(2) * &den);
        let y = int(2) * &u / &den;
        half.push(Point::new(x, y));
    }
    let mut pts = Vec::with_capacity(n as usize);
    for j in 0..copies {
        let shift = int(4 * j as i64);
        for p in &half {
            pts.push(Point::new(&p.x + &shift, p.y.clone()));
            pts.push(Point::new(-&p.x + &shift, p.y.clone()));
        }
    }
    let set = PointSet::new(pts).expect("train points are distinct");
    debug_assert_eq!(set.len(), n as usize);
    Ok(set)
}

/// n distinct integer points drawn uniformly from [−range, range]²;
/// duplicates are rejected and redrawn. A fixed seed reproduces the same
/// set on every platform.
pub fn gen_random(n: u32, range: i64, seed: u64) -> Result<PointSet, GenError> {
    let side = 2 * range as i128 + 1;
    if (n as i128) > side * side {
        return Err(GenError::RangeTooSmall { n, range });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen: HashSet<(i64, i64)> = HashSet::with_capacity(n as usize);
    let mut pts = Vec::with_capacity(n as usize);
    while pts.len() < n as usize {
        let x = rng.gen_range(-range..=range);
        let y = rng.gen_range(-range..=range);
        if seen.insert((x, y)) {
            pts.push(Point::from_ints(x, y));
        }
    }
    Ok(PointSet::new(pts).expect("duplicates were rejected"))
}

/// Returns an exact isometric image of the set in which no two points share
/// an x- or a y-coordinate, by applying the rational rotation step until the
/// certificate holds. An already-generic set is returned unchanged.
///
/// Each step turns by an irrational multiple of π, and a pair of points can
/// clash in x (or in y) for at most one step count, so at most n(n−1) + 1
/// steps are ever needed.
pub fn ensure_generic(p: &PointSet) -> PointSet {
    if p.is_generic() {
        return p.clone();
    }
    let step = RigidMap::rational_rotation(1);
    let mut current = p.apply(&step);
    let budget = p.len() * p.len() + 1;
    for _ in 0..budget {
        if current.is_generic() {
            return current;
        }
        current = current.apply(&step);
    }
    unreachable!("a generic rotation exists within the step budget");
}

/// Multiplicity of the vertical line x = v in the bisector spectrum of a
/// set: the number of ordered pairs mirrored across it. Convenient for
/// inspecting the mirror lines x = 4j of the ellipse train.
pub fn vertical_line_multiplicity(p: &PointSet, v: &Rational) -> u64 {
    let line = crate::geom::CanonicalLine::from_coeffs(&int(1), &int(0), v)
        .expect("vertical lines are nondegenerate");
    match crate::stats::bisector_spectrum(p) {
        Ok(spectrum) => spectrum.multiplicity(&line),
        Err(_) => 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stats;

    #[test]
    fn grid_and_line_shapes() {
        let g = gen_grid(3);
        assert_eq!(g.len(), 9);
        assert_eq!(stats::max_collinear(&g).unwrap(), 3);
        let l = gen_line(5);
        assert_eq!(stats::distinct_bisectors(&l).unwrap(), 7);
        assert_eq!(stats::max_collinear(&l).unwrap(), 5);
    }

    #[test]
    fn circle_points_are_cocircular_unit_points() {
        let c = gen_rational_circle(10);
        assert_eq!(c.len(), 10);
        for p in c.iter() {
            assert_eq!(&p.x * &p.x + &p.y * &p.y, int(1));
        }
        assert_eq!(stats::max_cocircular(&c).unwrap(), 10);
    }

    #[test]
    fn ellipse_train_smallest_instance() {
        let t = gen_ellipse_train(16, 8).unwrap();
        assert_eq!(t.len(), 16);
        // Every point satisfies 4x² + y² = 1.
        for p in t.iter() {
            assert_eq!(int(4) * &p.x * &p.x + &p.y * &p.y, int(1));
        }
        // Each positive-x point pairs with its mirror across x = 0.
        assert_eq!(vertical_line_multiplicity(&t, &int(0)), 16);
        assert!(stats::bisector_energy(&t).unwrap() >= 256);
    }

    #[test]
    fn ellipse_train_divisibility_errors() {
        assert!(gen_ellipse_train(16, 12).is_err());
        assert!(gen_ellipse_train(10, 8).is_err());
        assert!(gen_ellipse_train(64, 4).is_err());
    }

    #[test]
    fn ellipse_train_two_copies() {
        let t = gen_ellipse_train(64, 16).unwrap();
        assert_eq!(t.len(), 64);
        assert!(stats::max_collinear(&t).unwrap() <= 4);
        assert!(stats::max_cocircular(&t).unwrap() <= 8);
    }

    #[test]
    fn random_is_deterministic() {
        let a = gen_random(10, 100, 1).unwrap();
        let b = gen_random(10, 100, 1).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 10);
        assert!(gen_random(10, 1, 7).is_err());
    }

    #[test]
    fn ensure_generic_fixes_grids_and_keeps_stats() {
        let g = gen_grid(3);
        assert!(!g.is_generic());
        let rotated = ensure_generic(&g);
        assert!(rotated.is_generic());
        let opts = stats::StatsOptions::default();
        assert_eq!(
            stats::stats_report(&g, &opts).unwrap(),
            stats::stats_report(&rotated, &opts).unwrap()
        );
    }

    #[test]
    fn ensure_generic_is_identity_on_generic_sets() {
        let r = gen_random(12, 1000, 3).unwrap();
        if r.is_generic() {
            assert_eq!(ensure_generic(&r), r);
        }
    }
}
