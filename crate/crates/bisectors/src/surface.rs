//! Bisector surfaces in R⁴ and their structural audits.
//!
//! A pair of distinct anchor points (a, c) induces the surface of pairs
//! (b, d) whose bisectors coincide: bi(a, b) = bi(c, d). The surface is
//! contained in the zero set of two explicit polynomials (evaluated by
//! [`fg_eval`]), and any two surfaces with the same anchor distance
//! intersect inside a product of two concentric circles or two parallel
//! lines ([`intersection_curves`]). The audit passes enumerate these claims
//! exhaustively over a point set and report violations; on correct inputs
//! the expected violation count is zero.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::geom::{
    bisector, dist2, CanonicalCircle, CanonicalLine, Point, Rational, RigidMap,
};
use crate::pointset::PointSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurfaceError {
    #[error("anchor points must be distinct")]
    EqualAnchorPoints,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("audit cap is {cap} points, got {got}")]
    SetTooLarge { cap: usize, got: usize },
}

/// Default cap for [`lemma32_audit`] (loops over pairs of anchor pairs).
pub const CURVE_AUDIT_CAP: usize = 20;
/// Default cap for [`quadruple_invariant_audit`].
pub const QUADRUPLE_AUDIT_CAP: usize = 40;
/// Default cap for [`k2m_audit`].
pub const BICLIQUE_AUDIT_CAP: usize = 16;

/// The anchor (a, c) of a bisector surface; a ≠ c is enforced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceAnchor {
    a: Point,
    c: Point,
}

impl SurfaceAnchor {
    pub fn new(a: Point, c: Point) -> Result<Self, SurfaceError> {
        if a == c {
            return Err(SurfaceError::EqualAnchorPoints);
        }
        Ok(SurfaceAnchor { a, c })
    }

    pub fn a(&self) -> &Point {
        &self.a
    }

    pub fn c(&self) -> &Point {
        &self.c
    }

    /// Squared distance between the anchor points; never zero.
    pub fn delta2(&self) -> Rational {
        dist2(&self.a, &self.c)
    }
}

/// A candidate point (b, d) of R⁴ = R² × R². Ordered pairs drawn from a
/// point set additionally satisfy b ≠ d; [`surface_member`] checks that
/// side condition itself, so the struct carries no invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairPoint {
    pub b: Point,
    pub d: Point,
}

impl PairPoint {
    pub fn new(b: Point, d: Point) -> Self {
        PairPoint { b, d }
    }
}

/// Membership of (b, d) in the surface of (a, c): requires a ≠ b, c ≠ d,
/// b ≠ d, and bi(a, b) = bi(c, d) as canonical lines. All distinctness side
/// conditions live here so that every audit agrees on the edge cases.
pub fn surface_member(anchor: &SurfaceAnchor, p: &PairPoint) -> bool {
    if anchor.a == p.b || anchor.c == p.d || p.b == p.d {
        return false;
    }
    let lab = bisector(&anchor.a, &p.b).expect("a != b");
    let lcd = bisector(&anchor.c, &p.d).expect("c != d");
    lab == lcd
}

/// Membership of (a, c) in the dual surface of (b, d): same predicate with
/// the roles of anchor and pair exchanged. `surface_member(anchor, p)` and
/// `dual_member(p, anchor)` agree whenever both arguments come from the
/// ordered-pair set of a point set.
pub fn dual_member(pair: &PairPoint, a: &Point, c: &Point) -> bool {
    if a == &pair.b || c == &pair.d || a == c {
        return false;
    }
    let lab = bisector(a, &pair.b).expect("a != b");
    let lcd = bisector(c, &pair.d).expect("c != d");
    lab == lcd
}

/// Exact evaluation of the two defining polynomials of the surface variety
/// at (b, d). Both vanish on every surface member; the converse holds on
/// generic sets up to the degenerate solutions with a = b or c = d.
pub fn fg_eval(anchor: &SurfaceAnchor, p: &PairPoint) -> (Rational, Rational) {
    let (ax, ay) = (&anchor.a.x, &anchor.a.y);
    let (cx, cy) = (&anchor.c.x, &anchor.c.y);
    let (bx, by) = (&p.b.x, &p.b.y);
    let (dx, dy) = (&p.d.x, &p.d.y);
    let f = (ax - bx) * (cy - dy) - (ay - by) * (cx - dx);
    let g = (ay - by) * (cx * cx + cy * cy - dx * dx - dy * dy)
        - (cy - dy) * (ax * ax + ay * ay - bx * bx - by * by);
    (f, g)
}

/// The curve pair confining the intersection of two equal-distance bisector
/// surfaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurvePair {
    /// b is confined to `c1`, d to `c2`; the circles share `center`.
    ConcentricCircles {
        center: Point,
        c1: CanonicalCircle,
        c2: CanonicalCircle,
    },
    /// b is confined to `l1`, d to `l2`; the lines are parallel.
    ParallelLines {
        l1: CanonicalLine,
        l2: CanonicalLine,
    },
    /// Shared anchor point on one side: the surfaces cannot intersect at
    /// all, because one reflection would have to send a single point to two
    /// different images.
    EmptyIntersection,
    /// The center pinning construction fails (the two anchor segments lie
    /// on one common line perpendicular to the shared bisector); only the
    /// distance constraint is audited in this case.
    Degenerate,
}

/// Classifies the intersection of the surfaces anchored at (a, c) and
/// (a2, c2), which must be distinct anchors with the same nonzero squared
/// anchor distance.
///
/// Writing ℓ₁ = bi(a, a2) and ℓ₂ = bi(c, c2):
///
/// - ℓ₁ and ℓ₂ meet in one point o: concentric circles about o, through a
///   and through c;
/// - ℓ₁ parallel to ℓ₂: the parallel lines through {a, a2} and {c, c2};
/// - ℓ₁ = ℓ₂ = ℓ: if the segment ac is parallel to ℓ the common motion is a
///   translation and the answer is again the two parallel lines; otherwise
///   the center is o = line(a, c) ∩ ℓ and the answer is concentric circles,
///   except in the perpendicular sub-case where line(a, c) and line(a2, c2)
///   coincide and no single center can be pinned (`Degenerate`).
pub fn intersection_curves(
    a: &Point,
    c: &Point,
    a2: &Point,
    c2: &Point,
) -> Result<CurvePair, SurfaceError> {
    if a == c || a2 == c2 {
        return Err(SurfaceError::PreconditionViolated(
            "anchor points must be distinct".into(),
        ));
    }
    if a == a2 && c == c2 {
        return Err(SurfaceError::PreconditionViolated(
            "the two anchors must differ".into(),
        ));
    }
    if dist2(a, c) != dist2(a2, c2) {
        return Err(SurfaceError::PreconditionViolated(
            "anchors must span the same squared distance".into(),
        ));
    }
    if a == a2 || c == c2 {
        return Ok(CurvePair::EmptyIntersection);
    }

    let l1 = bisector(a, a2).expect("a != a2");
    let l2 = bisector(c, c2).expect("c != c2");

    if l1 == l2 {
        let line_ac = CanonicalLine::through(a, c).expect("a != c");
        if line_ac.is_parallel_to(&l1) {
            // Translation case: b moves along line(a, a2), d along
            // line(c, c2).
            return Ok(CurvePair::ParallelLines {
                l1: CanonicalLine::through(a, a2).expect("a != a2"),
                l2: CanonicalLine::through(c, c2).expect("c != c2"),
            });
        }
        let line_a2c2 = CanonicalLine::through(a2, c2).expect("a2 != c2");
        return match line_ac.intersection(&line_a2c2) {
            Some(center) => Ok(concentric(center, a, c)),
            None => Ok(CurvePair::Degenerate),
        };
    }
    match l1.intersection(&l2) {
        Some(center) => Ok(concentric(center, a, c)),
        None => Ok(CurvePair::ParallelLines {
            l1: CanonicalLine::through(a, a2).expect("a != a2"),
            l2: CanonicalLine::through(c, c2).expect("c != c2"),
        }),
    }
}

fn concentric(center: Point, a: &Point, c: &Point) -> CurvePair {
    // The center sits on bi(a, a2) and bi(c, c2), so both radii are nonzero.
    let c1 = CanonicalCircle::from_center_radius2(&center, &dist2(&center, a))
        .expect("center is off the anchor points");
    let c2 = CanonicalCircle::from_center_radius2(&center, &dist2(&center, c))
        .expect("center is off the anchor points");
    CurvePair::ConcentricCircles { center, c1, c2 }
}

/// Result of one audit pass.
#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    pub audit: String,
    /// Number of individual checks performed.
    pub checked: u64,
    /// Human-readable violation records, sorted; empty on correct inputs.
    pub violations: Vec<String>,
    pub skipped_empty_intersection: u64,
    pub skipped_degenerate: u64,
}

impl AuditReport {
    fn new(audit: &str) -> Self {
        AuditReport {
            audit: audit.to_string(),
            checked: 0,
            violations: Vec::new(),
            skipped_empty_intersection: 0,
            skipped_degenerate: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// An ordered pair of point indices.
type IndexPair = (usize, usize);

/// Interned bisectors and membership lists shared by the audits.
struct SurfaceIndex<'a> {
    pts: &'a [Point],
    /// Anchor list: all ordered pairs of distinct indices.
    anchors: Vec<IndexPair>,
    /// members[k] = ordered pairs (b, d) on the surface of anchors[k].
    members: Vec<Vec<IndexPair>>,
    /// Squared anchor distance per anchor.
    delta2: Vec<Rational>,
}

impl<'a> SurfaceIndex<'a> {
    fn build(p: &'a PointSet) -> Self {
        let pts = p.points();
        let n = pts.len();
        // Intern the bisector of every ordered pair once.
        let mut line_ids: HashMap<CanonicalLine, u32> = HashMap::new();
        let mut bis = vec![vec![u32::MAX; n]; n];
        for i in 0..n {
            for j in (i + 1)..n {
                let line = bisector(&pts[i], &pts[j]).expect("distinct");
                let next = line_ids.len() as u32;
                let id = *line_ids.entry(line).or_insert(next);
                bis[i][j] = id;
                bis[j][i] = id;
            }
        }
        // For each point c, the pairs (line id of bi(c, d)) → d.
        let mut by_point: Vec<HashMap<u32, Vec<usize>>> = vec![HashMap::new(); n];
        for (c, map) in by_point.iter_mut().enumerate() {
            for (d, line_id) in bis[c].iter().enumerate() {
                if c != d {
                    map.entry(*line_id).or_default().push(d);
                }
            }
        }
        let mut anchors = Vec::new();
        let mut members = Vec::new();
        let mut delta2 = Vec::new();
        for a in 0..n {
            for c in 0..n {
                if a == c {
                    continue;
                }
                let mut list = Vec::new();
                for (b, line_id) in bis[a].iter().enumerate() {
                    if b == a {
                        continue;
                    }
                    if let Some(ds) = by_point[c].get(line_id) {
                        for &d in ds {
                            if d != b {
                                list.push((b, d));
                            }
                        }
                    }
                }
                list.sort_unstable();
                anchors.push((a, c));
                members.push(list);
                delta2.push(dist2(&pts[a], &pts[c]));
            }
        }
        SurfaceIndex {
            pts,
            anchors,
            members,
            delta2,
        }
    }

    fn common_members(&self, x: usize, y: usize) -> Vec<IndexPair> {
        let (mut i, mut j) = (0, 0);
        let (ma, mb) = (&self.members[x], &self.members[y]);
        let mut out = Vec::new();
        while i < ma.len() && j < mb.len() {
            match ma[i].cmp(&mb[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(ma[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }
}

/// Audits the curve-confinement claim: for every two distinct anchors at
/// the same squared distance, every common surface member (b, d) has b on
/// the first curve, d on the second, and |bd|² equal to the anchor
/// distance. Anchors classified `EmptyIntersection` must have no common
/// members; `Degenerate` anchors fall back to the distance check alone.
pub fn lemma32_audit(p: &PointSet, cap: usize) -> Result<AuditReport, SurfaceError> {
    if p.len() > cap {
        return Err(SurfaceError::SetTooLarge { cap, got: p.len() });
    }
    let mut report = AuditReport::new("lemma32");
    if p.len() < 2 {
        return Ok(report);
    }
    let index = SurfaceIndex::build(p);
    let pts = index.pts;

    // Group anchors by squared distance; only equal-distance pairs are in
    // scope.
    let mut classes: HashMap<&Rational, Vec<usize>> = HashMap::new();
    for (k, d2) in index.delta2.iter().enumerate() {
        classes.entry(d2).or_default().push(k);
    }

    for class in classes.values() {
        for (xi, &x) in class.iter().enumerate() {
            for &y in &class[xi + 1..] {
                let (a, c) = index.anchors[x];
                let (a2, c2) = index.anchors[y];
                let curves =
                    intersection_curves(&pts[a], &pts[c], &pts[a2], &pts[c2])?;
                let common = index.common_members(x, y);
                let delta2 = &index.delta2[x];
                match curves {
                    CurvePair::EmptyIntersection => {
                        report.skipped_empty_intersection += 1;
                        if !common.is_empty() {
                            report.violations.push(format!(
                                "anchors ({}, {}) and ({}, {}): expected empty intersection, found {} common pairs",
                                pts[a], pts[c], pts[a2], pts[c2], common.len()
                            ));
                        }
                    }
                    CurvePair::Degenerate => {
                        report.skipped_degenerate += 1;
                        for (b, d) in common {
                            report.checked += 1;
                            if &dist2(&pts[b], &pts[d]) != delta2 {
                                report.violations.push(format!(
                                    "anchors ({}, {}) and ({}, {}): common pair ({}, {}) breaks the distance constraint",
                                    pts[a], pts[c], pts[a2], pts[c2], pts[b], pts[d]
                                ));
                            }
                        }
                    }
                    CurvePair::ConcentricCircles { c1, c2: circ2, .. } => {
                        for (b, d) in common {
                            report.checked += 1;
                            let ok = c1.contains(&pts[b])
                                && circ2.contains(&pts[d])
                                && &dist2(&pts[b], &pts[d]) == delta2;
                            if !ok {
                                report.violations.push(format!(
                                    "anchors ({}, {}) and ({}, {}): common pair ({}, {}) escapes the concentric circles",
                                    pts[a], pts[c], pts[a2], pts[c2], pts[b], pts[d]
                                ));
                            }
                        }
                    }
                    CurvePair::ParallelLines { l1, l2 } => {
                        for (b, d) in common {
                            report.checked += 1;
                            let ok = l1.contains(&pts[b])
                                && l2.contains(&pts[d])
                                && &dist2(&pts[b], &pts[d]) == delta2;
                            if !ok {
                                report.violations.push(format!(
                                    "anchors ({}, {}) and ({}, {}): common pair ({}, {}) escapes the parallel lines",
                                    pts[a], pts[c], pts[a2], pts[c2], pts[b], pts[d]
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    report.violations.sort();
    Ok(report)
}

/// Audits the reflection identity behind the surfaces: whenever two ordered
/// pairs (a, b) and (c, d) span the same bisector, the reflection across
/// that line sends c to d, and |ac|² = |bd|².
pub fn quadruple_invariant_audit(p: &PointSet, cap: usize) -> Result<AuditReport, SurfaceError> {
    if p.len() > cap {
        return Err(SurfaceError::SetTooLarge { cap, got: p.len() });
    }
    let mut report = AuditReport::new("quadruple");
    if p.len() < 2 {
        return Ok(report);
    }
    let pts = p.points();
    let n = pts.len();
    let mut by_line: HashMap<CanonicalLine, Vec<(usize, usize)>> = HashMap::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                by_line
                    .entry(bisector(&pts[i], &pts[j]).expect("distinct"))
                    .or_default()
                    .push((i, j));
            }
        }
    }
    for pairs in by_line.values() {
        for (idx, &(a, b)) in pairs.iter().enumerate() {
            let refl = RigidMap::reflection(&pts[a], &pts[b]).expect("distinct");
            for &(c, d) in &pairs[idx + 1..] {
                report.checked += 1;
                let distances_match = dist2(&pts[a], &pts[c]) == dist2(&pts[b], &pts[d]);
                let reflection_maps = refl.apply(&pts[c]) == pts[d];
                if !distances_match || !reflection_maps {
                    report.violations.push(format!(
                        "pairs ({}, {}) and ({}, {}) share a bisector but break the rigid-motion invariant",
                        pts[a], pts[b], pts[c], pts[d]
                    ));
                }
            }
        }
    }
    report.violations.sort();
    Ok(report)
}

/// The two biclique maxima of the incidence graph between ordered pairs and
/// surfaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BicliqueMaxima {
    /// Max over distinct same-distance anchor pairs of the number of common
    /// surface members.
    pub surface_pair_common_points: u64,
    /// Max over distinct ordered pairs of the number of surfaces containing
    /// both.
    pub point_pair_common_surfaces: u64,
}

/// Measures the biclique maxima. Both are bounded by the larger of the
/// collinearity and cocircularity maxima of the set; the audit harness
/// checks that bound.
pub fn k2m_audit(p: &PointSet, cap: usize) -> Result<BicliqueMaxima, SurfaceError> {
    if p.len() > cap {
        return Err(SurfaceError::SetTooLarge { cap, got: p.len() });
    }
    let mut maxima = BicliqueMaxima {
        surface_pair_common_points: 0,
        point_pair_common_surfaces: 0,
    };
    if p.len() < 2 {
        return Ok(maxima);
    }
    let index = SurfaceIndex::build(p);

    // Anchors per member pair, inverted from the membership lists.
    let mut anchors_of: HashMap<IndexPair, Vec<usize>> = HashMap::new();
    for (k, members) in index.members.iter().enumerate() {
        for &pair in members {
            anchors_of.entry(pair).or_default().push(k);
        }
    }

    // K_{M,2} side: common members of two distinct same-distance anchors.
    let mut common_points: HashMap<IndexPair, u64> = HashMap::new();
    for anchor_list in anchors_of.values() {
        for (i, &x) in anchor_list.iter().enumerate() {
            for &y in &anchor_list[i + 1..] {
                if index.delta2[x] == index.delta2[y] {
                    *common_points.entry((x, y)).or_insert(0) += 1;
                }
            }
        }
    }
    maxima.surface_pair_common_points = common_points.values().copied().max().unwrap_or(0);

    // K_{2,M} side: surfaces containing two distinct member pairs.
    let mut common_surfaces: HashMap<(IndexPair, IndexPair), u64> = HashMap::new();
    for members in &index.members {
        for (i, &p1) in members.iter().enumerate() {
            for &p2 in &members[i + 1..] {
                *common_surfaces.entry((p1, p2)).or_insert(0) += 1;
            }
        }
    }
    maxima.point_pair_common_surfaces = common_surfaces.values().copied().max().unwrap_or(0);

    Ok(maxima)
}
