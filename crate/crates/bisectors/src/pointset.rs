//! Validated point sets.

use std::collections::HashSet;

use thiserror::Error;

use crate::geom::{Point, RigidMap};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PointSetError {
    #[error("duplicate point at index {index}")]
    DuplicatePoint { index: usize },
}

/// An ordered list of pairwise distinct points, together with a genericity
/// certificate: `generic` is true exactly when no two points share an
/// x-coordinate or a y-coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<Point>,
    generic: bool,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self, PointSetError> {
        let mut seen = HashSet::with_capacity(points.len());
        for (index, p) in points.iter().enumerate() {
            if !seen.insert(p.clone()) {
                return Err(PointSetError::DuplicatePoint { index });
            }
        }
        let generic = Self::check_generic(&points);
        Ok(PointSet { points, generic })
    }

    fn check_generic(points: &[Point]) -> bool {
        let xs: HashSet<_> = points.iter().map(|p| &p.x).collect();
        let ys: HashSet<_> = points.iter().map(|p| &p.y).collect();
        xs.len() == points.len() && ys.len() == points.len()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn get(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point> {
        self.points.iter()
    }

    /// Whether no two points share an x- or a y-coordinate.
    pub fn is_generic(&self) -> bool {
        self.generic
    }

    /// The image of the set under a rigid motion. Rigid maps are injective,
    /// so distinctness is preserved; the genericity certificate is
    /// recomputed for the new coordinates.
    pub fn apply(&self, map: &RigidMap) -> PointSet {
        let points = self.points.iter().map(|p| map.apply(p)).collect();
        PointSet::new(points).expect("rigid maps preserve distinctness")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{int, rat};

    fn pt(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn rejects_duplicates() {
        let err = PointSet::new(vec![pt(1, 1), pt(2, 2), pt(1, 1)]).unwrap_err();
        assert_eq!(err, PointSetError::DuplicatePoint { index: 2 });
    }

    #[test]
    fn genericity_certificate() {
        let generic = PointSet::new(vec![pt(0, 1), pt(1, 2), pt(2, 0)]).unwrap();
        assert!(generic.is_generic());
        // Shared x-coordinate.
        let shared = PointSet::new(vec![pt(0, 0), pt(0, 1)]).unwrap();
        assert!(!shared.is_generic());
        let rationals = PointSet::new(vec![
            Point::new(rat(1, 2), int(0)),
            Point::new(rat(1, 2), int(1)),
        ])
        .unwrap();
        assert!(!rationals.is_generic());
    }

    #[test]
    fn apply_preserves_size_and_order() {
        let set = PointSet::new(vec![pt(0, 0), pt(1, 0), pt(2, 0)]).unwrap();
        let rotated = set.apply(&crate::geom::RigidMap::rational_rotation(1));
        assert_eq!(rotated.len(), 3);
        assert_eq!(rotated.get(1), &Point::new(rat(3, 5), rat(4, 5)));
    }
}
