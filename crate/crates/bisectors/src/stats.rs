//! Global statistics of a point set.
//!
//! The central object is the bisector multiplicity spectrum: for every line
//! spanned as a perpendicular bisector of an ordered pair, the number μ(ℓ)
//! of ordered pairs spanning it. The bisector energy is Σ μ(ℓ)², the number
//! of distinct bisectors is the number of keys. Alongside it live the
//! distance spectrum (ordered-pair counts per squared distance), isoceles
//! triple and incidence counts, and the collinearity/cocircularity maxima
//! computed by direction hashing.
//!
//! All multiplicities are over *ordered* pairs, so every μ and every m is
//! even and Σ μ = Σ m = n(n−1).

mod fast;

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::geom::{bisector, dist2, invert, CanonicalLine, Point, Rational};
use crate::pointset::PointSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StatsError {
    #[error("operation needs at least {needed} points, got {got}")]
    TooFewPoints { needed: usize, got: usize },
}

fn require(p: &PointSet, needed: usize) -> Result<(), StatsError> {
    if p.len() < needed {
        return Err(StatsError::TooFewPoints {
            needed,
            got: p.len(),
        });
    }
    Ok(())
}

/// Multiplicity spectrum of the bisector multiset: μ(ℓ) is the number of
/// ordered pairs of distinct set points whose bisector is ℓ.
#[derive(Clone, Debug)]
pub struct BisectorSpectrum {
    mu: HashMap<CanonicalLine, u64>,
    n: u64,
}

impl BisectorSpectrum {
    /// Number of points of the source set.
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn multiplicity(&self, line: &CanonicalLine) -> u64 {
        self.mu.get(line).copied().unwrap_or(0)
    }

    /// Number of distinct spanned bisectors.
    pub fn distinct_count(&self) -> u64 {
        self.mu.len() as u64
    }

    /// Σ μ(ℓ)² — the bisector energy: the number of ordered quadruples
    /// (a, b, c, d) with a ≠ b, c ≠ d and equal bisectors. Quadruples of the
    /// form (a, b, a, b) and (a, b, b, a) are included, so the energy is at
    /// least 2·n(n−1) on every set.
    pub fn energy(&self) -> u64 {
        self.mu.values().map(|&m| m * m).sum()
    }

    /// Σ μ(ℓ) — always n(n−1).
    pub fn total(&self) -> u64 {
        self.mu.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CanonicalLine, u64)> {
        self.mu.iter().map(|(l, &m)| (l, m))
    }
}

/// Distance spectrum: m(δ²) is the number of ordered pairs of distinct set
/// points at squared distance δ².
#[derive(Clone, Debug)]
pub struct DistanceSpectrum {
    m: HashMap<Rational, u64>,
    n: u64,
}

impl DistanceSpectrum {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn count(&self, d2: &Rational) -> u64 {
        self.m.get(d2).copied().unwrap_or(0)
    }

    /// Number of distinct squared distances.
    pub fn distinct_count(&self) -> u64 {
        self.m.len() as u64
    }

    /// Σ mᵢ² over the ordered-pair counts.
    pub fn sum_m_squared(&self) -> u64 {
        self.m.values().map(|&m| m * m).sum()
    }

    pub fn total(&self) -> u64 {
        self.m.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Rational, u64)> {
        self.m.iter().map(|(d, &m)| (d, m))
    }
}

pub fn bisector_spectrum(p: &PointSet) -> Result<BisectorSpectrum, StatsError> {
    require(p, 2)?;
    let pts = p.points();
    let n = pts.len();
    let mut mu: HashMap<CanonicalLine, u64> = HashMap::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let line = bisector(&pts[i], &pts[j]).expect("set points are distinct");
            // Both orders of the pair span the same line.
            *mu.entry(line).or_insert(0) += 2;
        }
    }
    let spectrum = BisectorSpectrum { mu, n: n as u64 };
    debug_assert_eq!(spectrum.total(), (n * (n - 1)) as u64);
    Ok(spectrum)
}

pub fn bisector_energy(p: &PointSet) -> Result<u64, StatsError> {
    Ok(bisector_spectrum(p)?.energy())
}

pub fn distinct_bisectors(p: &PointSet) -> Result<u64, StatsError> {
    Ok(bisector_spectrum(p)?.distinct_count())
}

pub fn distance_spectrum(p: &PointSet) -> Result<DistanceSpectrum, StatsError> {
    require(p, 2)?;
    let pts = p.points();
    let n = pts.len();
    let mut m: HashMap<Rational, u64> = HashMap::new();
    for i in 0..n {
        for j in (i + 1)..n {
            *m.entry(dist2(&pts[i], &pts[j])).or_insert(0) += 2;
        }
    }
    let spectrum = DistanceSpectrum { m, n: n as u64 };
    debug_assert_eq!(spectrum.total(), (n * (n - 1)) as u64);
    Ok(spectrum)
}

pub fn distinct_distances(p: &PointSet) -> Result<u64, StatsError> {
    Ok(distance_spectrum(p)?.distinct_count())
}

pub fn sum_m_squared(p: &PointSet) -> Result<u64, StatsError> {
    Ok(distance_spectrum(p)?.sum_m_squared())
}

/// Per-apex scan shared by the isoceles count and the richness map: group
/// the other points by squared distance from each apex p. A pair {a, b}
/// inside one group witnesses both an isoceles triple apexed at p and the
/// incidence of p with the bisector of a and b.
fn apex_scan(p: &PointSet, want_richness: bool) -> (u64, HashMap<CanonicalLine, u64>) {
    let pts = p.points();
    let n = pts.len();
    let mut triples = 0u64;
    // line → (last apex counted, number of distinct apexes on the line)
    let mut rho: HashMap<CanonicalLine, (usize, u64)> = HashMap::new();
    for apex in 0..n {
        let mut groups: HashMap<Rational, Vec<usize>> = HashMap::new();
        for j in 0..n {
            if j != apex {
                groups.entry(dist2(&pts[apex], &pts[j])).or_default().push(j);
            }
        }
        for members in groups.values() {
            let k = members.len() as u64;
            triples += k * (k - 1);
            if want_richness && members.len() >= 2 {
                for (idx, &a) in members.iter().enumerate() {
                    for &b in &members[idx + 1..] {
                        let line = bisector(&pts[a], &pts[b]).expect("distinct");
                        let entry = rho.entry(line).or_insert((apex, 0));
                        if entry.1 == 0 || entry.0 != apex {
                            *entry = (apex, entry.1 + 1);
                        }
                    }
                }
            }
        }
    }
    (triples, rho.into_iter().map(|(l, (_, r))| (l, r)).collect())
}

/// Number of ordered triples (p, q, r) of distinct points with
/// |pq| = |pr|, counted as Σ_p Σ_i Δᵢ(Δᵢ − 1) over the per-apex distance
/// counts.
pub fn isoceles_triples(p: &PointSet) -> Result<u64, StatsError> {
    require(p, 3)?;
    Ok(apex_scan(p, false).0)
}

/// For every spanned bisector that passes through at least one set point,
/// the number ρ(ℓ) of set points on it. A point lies on a spanned bisector
/// exactly when it is equidistant from some pair spanning that line, so the
/// apex-side scan discovers every such incidence.
pub fn point_richness(p: &PointSet) -> HashMap<CanonicalLine, u64> {
    apex_scan(p, true).1
}

/// Bisector incidences counted with multiplicity: Σ_ℓ μ(ℓ)·ρ(ℓ) over the
/// spectrum. Always equals [`isoceles_triples`]; the two are computed along
/// different routes and the test suite checks the identity exactly.
pub fn incidence_mult(p: &PointSet) -> Result<u64, StatsError> {
    require(p, 2)?;
    let spectrum = bisector_spectrum(p)?;
    let rho = point_richness(p);
    Ok(spectrum
        .iter()
        .map(|(l, mu)| mu * rho.get(l).copied().unwrap_or(0))
        .sum())
}

/// Number of spanned bisectors incident to at least `threshold` set points
/// (`threshold ≥ 1`).
pub fn rich_bisectors(p: &PointSet, threshold: u64) -> Result<u64, StatsError> {
    require(p, 2)?;
    let threshold = threshold.max(1);
    Ok(point_richness(p)
        .values()
        .filter(|&&r| r >= threshold)
        .count() as u64)
}

/// Reduced integer direction vector of q − p, normalized so that the first
/// nonzero component is positive. Directions are line slopes, not rays:
/// p→q and q→p give the same value.
fn canonical_direction(p: &Point, q: &Point) -> (BigInt, BigInt) {
    let dx = &q.x - &p.x;
    let dy = &q.y - &p.y;
    let mut ux = dx.numer() * dy.denom();
    let mut uy = dy.numer() * dx.denom();
    let g = ux.gcd(&uy);
    if !g.is_zero() {
        ux = &ux / &g;
        uy = &uy / &g;
    }
    if ux.is_negative() || (ux.is_zero() && uy.is_negative()) {
        ux = -ux;
        uy = -uy;
    }
    (ux, uy)
}


/// The line through `p` in integer direction `dir`.
fn line_through_direction(p: &Point, dir: &(BigInt, BigInt)) -> CanonicalLine {
    let a = Rational::from(dir.1.clone());
    let b = Rational::from(-dir.0.clone());
    let c = &a * &p.x + &b * &p.y;
    CanonicalLine::from_coeffs(&a, &b, &c).expect("directions are nonzero")
}

/// Size of the largest collinear subset, by direction hashing from each
/// anchor: a line with r points is seen from its first point as a direction
/// group of size r − 1.
pub fn max_collinear(p: &PointSet) -> Result<u64, StatsError> {
    require(p, 2)?;
    if let Some(coords) = fast::int_coords(p) {
        return Ok(fast::max_collinear(&coords));
    }
    let pts = p.points();
    let n = pts.len();
    let mut best = 2u64;
    for i in 0..n {
        let mut groups: HashMap<(BigInt, BigInt), u64> = HashMap::new();
        for j in (i + 1)..n {
            *groups
                .entry(canonical_direction(&pts[i], &pts[j]))
                .or_insert(0) += 1;
        }
        if let Some(&m) = groups.values().max() {
            best = best.max(m + 1);
        }
    }
    Ok(best)
}

/// Number of distinct lines containing at least `k` set points (`k ≥ 2`).
pub fn rich_lines(p: &PointSet, k: u64) -> Result<u64, StatsError> {
    require(p, 2)?;
    let k = k.max(2);
    let pts = p.points();
    let n = pts.len();
    let mut lines: HashSet<CanonicalLine> = HashSet::new();
    for i in 0..n {
        let mut groups: HashMap<(BigInt, BigInt), u64> = HashMap::new();
        for j in (i + 1)..n {
            *groups
                .entry(canonical_direction(&pts[i], &pts[j]))
                .or_insert(0) += 1;
        }
        for (dir, count) in &groups {
            if count + 1 >= k {
                lines.insert(line_through_direction(&pts[i], dir));
            }
        }
    }
    Ok(lines.len() as u64)
}

/// Size of the largest cocircular subset.
///
/// For each anchor point p, the other points are inverted about p; a circle
/// through p with k set points becomes a line with k − 1 inverted points
/// that avoids p, while lines through p stay lines through p. The answer is
/// the maximum of 1 + (largest collinear image set on a line avoiding p),
/// and at least 2, since any two points lie on a circle.
pub fn max_cocircular(p: &PointSet) -> Result<u64, StatsError> {
    require(p, 3)?;
    if let Some(coords) = fast::int_coords(p) {
        return Ok(fast::max_cocircular(&coords));
    }
    let pts = p.points();
    let n = pts.len();
    let mut best = 2u64;
    for center in 0..n {
        let center_proj = Proj::from_point(&pts[center]);
        // Inverted images in projective form: differences of two images
        // share the denominator w_i·w_j, so directions reduce to numerator
        // cross terms without any rational normalization.
        let images: Vec<Proj> = (0..n)
            .filter(|&i| i != center)
            .map(|i| Proj::from_point(&invert(&pts[center], &pts[i]).expect("distinct")))
            .collect();
        let m = images.len();
        for i in 0..m {
            let mut groups: HashMap<(BigInt, BigInt), u64> = HashMap::new();
            for j in (i + 1)..m {
                *groups.entry(images[i].direction_to(&images[j])).or_insert(0) += 1;
            }
            for (dir, count) in &groups {
                // count+1 collinear images plus the inversion center itself.
                if count + 2 > best && !images[i].line_contains(dir, &center_proj) {
                    best = count + 2;
                }
            }
        }
    }
    Ok(best)
}

/// A rational point as an integer triple (x/w, y/w) with w > 0.
struct Proj {
    x: BigInt,
    y: BigInt,
    w: BigInt,
}

impl Proj {
    fn from_point(p: &Point) -> Self {
        let w = p.x.denom().lcm(p.y.denom());
        Proj {
            x: p.x.numer() * (&w / p.x.denom()),
            y: p.y.numer() * (&w / p.y.denom()),
            w,
        }
    }

    /// Reduced direction towards `other`, sign-normalized.
    fn direction_to(&self, other: &Proj) -> (BigInt, BigInt) {
        let mut ux = &other.x * &self.w - &self.x * &other.w;
        let mut uy = &other.y * &self.w - &self.y * &other.w;
        let g = ux.gcd(&uy);
        if !g.is_zero() {
            ux = &ux / &g;
            uy = &uy / &g;
        }
        if ux.is_negative() || (ux.is_zero() && uy.is_negative()) {
            ux = -ux;
            uy = -uy;
        }
        (ux, uy)
    }

    /// Whether the line through `self` with direction `dir` contains `p`.
    fn line_contains(&self, dir: &(BigInt, BigInt), p: &Proj) -> bool {
        let vx = &p.x * &self.w - &self.x * &p.w;
        let vy = &p.y * &self.w - &self.y * &p.w;
        &dir.0 * vy == &dir.1 * vx
    }
}

/// Options for [`stats_report`].
#[derive(Clone, Debug, Default)]
pub struct StatsOptions {
    /// Skip the cubic-time cocircularity maximum; the field is reported as
    /// absent.
    pub skip_cocircular: bool,
    /// Thresholds for the optional rich-line table.
    pub rich_line_thresholds: Vec<u64>,
}

/// The aggregate statistics of one point set. Field names are the wire
/// format of the JSON reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StatsReport {
    pub n: u64,
    pub energy: u64,
    pub distinct_bisectors: u64,
    pub distinct_distances: u64,
    pub max_collinear: u64,
    pub max_cocircular: Option<u64>,
    pub isoceles_triples: u64,
    pub incidence_mult: u64,
    pub sum_m_squared: u64,
    pub rich_lines: Option<BTreeMap<u64, u64>>,
}

impl StatsReport {
    /// The measured M(n): the larger of the collinearity and cocircularity
    /// maxima (the former alone when cocircularity was skipped).
    pub fn max_on_line_or_circle(&self) -> u64 {
        self.max_collinear.max(self.max_cocircular.unwrap_or(0))
    }
}

impl std::fmt::Display for StatsReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "n                  {}", self.n)?;
        writeln!(f, "energy             {}", self.energy)?;
        writeln!(f, "distinct_bisectors {}", self.distinct_bisectors)?;
        writeln!(f, "distinct_distances {}", self.distinct_distances)?;
        writeln!(f, "max_collinear      {}", self.max_collinear)?;
        match self.max_cocircular {
            Some(v) => writeln!(f, "max_cocircular     {v}")?,
            None => writeln!(f, "max_cocircular     (skipped)")?,
        }
        writeln!(f, "isoceles_triples   {}", self.isoceles_triples)?;
        writeln!(f, "incidence_mult     {}", self.incidence_mult)?;
        write!(f, "sum_m_squared      {}", self.sum_m_squared)?;
        if let Some(table) = &self.rich_lines {
            for (k, count) in table {
                write!(f, "\nrich_lines[>={k}]    {count}")?;
            }
        }
        Ok(())
    }
}

/// Computes every statistic of the report in one call. Requires at least
/// three points. Bounded integer coordinates take an allocation-free i128
/// path; anything else takes the general rational path. Both are exact and
/// produce identical reports.
pub fn stats_report(p: &PointSet, opts: &StatsOptions) -> Result<StatsReport, StatsError> {
    require(p, 3)?;
    if let Some(coords) = fast::int_coords(p) {
        return Ok(fast::report(&coords, opts));
    }
    let n = p.len() as u64;

    let (energy, distinct_bisectors, incidence, isoceles) = {
        let spectrum = bisector_spectrum(p)?;
        let (isoceles, rho) = apex_scan(p, true);
        let incidence = spectrum
            .iter()
            .map(|(l, mu)| mu * rho.get(l).copied().unwrap_or(0))
            .sum();
        (
            spectrum.energy(),
            spectrum.distinct_count(),
            incidence,
            isoceles,
        )
    };

    let (distinct_distances, sum_m_squared) = {
        let ds = distance_spectrum(p)?;
        (ds.distinct_count(), ds.sum_m_squared())
    };

    let max_collinear = max_collinear(p)?;
    let rich_table = if opts.rich_line_thresholds.is_empty() {
        None
    } else {
        let mut table = BTreeMap::new();
        for &k in &opts.rich_line_thresholds {
            table.insert(k, rich_lines(p, k)?);
        }
        Some(table)
    };

    let max_cocircular = if opts.skip_cocircular {
        None
    } else {
        Some(max_cocircular(p)?)
    };

    Ok(StatsReport {
        n,
        energy,
        distinct_bisectors,
        distinct_distances,
        max_collinear,
        max_cocircular,
        isoceles_triples: isoceles,
        incidence_mult: incidence,
        sum_m_squared,
        rich_lines: rich_table,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::int;

    fn pt(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    fn set(coords: &[(i64, i64)]) -> PointSet {
        PointSet::new(coords.iter().map(|&(x, y)| pt(x, y)).collect()).unwrap()
    }

    fn square() -> PointSet {
        set(&[(1, 0), (0, 1), (-1, 0), (0, -1)])
    }

    fn collinear3() -> PointSet {
        set(&[(0, 0), (1, 0), (2, 0)])
    }

    fn grid3() -> PointSet {
        let mut pts = Vec::new();
        for x in 0..3 {
            for y in 0..3 {
                pts.push(pt(x, y));
            }
        }
        PointSet::new(pts).unwrap()
    }

    #[test]
    fn two_point_spectrum() {
        let p = set(&[(0, 0), (2, 0)]);
        let s = bisector_spectrum(&p).unwrap();
        assert_eq!(s.distinct_count(), 1);
        assert_eq!(s.total(), 2);
        assert_eq!(s.energy(), 4);
        assert_eq!(incidence_mult(&p).unwrap(), 0);
    }

    #[test]
    fn collinear_spectrum_and_energy() {
        let p = collinear3();
        let s = bisector_spectrum(&p).unwrap();
        assert_eq!(s.distinct_count(), 3);
        let half = CanonicalLine::from_coeffs(&int(2), &int(0), &int(1)).unwrap();
        let one = CanonicalLine::from_coeffs(&int(1), &int(0), &int(1)).unwrap();
        let three_halves = CanonicalLine::from_coeffs(&int(2), &int(0), &int(3)).unwrap();
        assert_eq!(s.multiplicity(&half), 2);
        assert_eq!(s.multiplicity(&one), 2);
        assert_eq!(s.multiplicity(&three_halves), 2);
        assert_eq!(s.energy(), 12);
        assert_eq!(bisector_energy(&p).unwrap(), 12);
        assert_eq!(isoceles_triples(&p).unwrap(), 2);
        assert_eq!(incidence_mult(&p).unwrap(), 2);
    }

    #[test]
    fn square_statistics() {
        let p = square();
        let s = bisector_spectrum(&p).unwrap();
        let diag_up = CanonicalLine::from_coeffs(&int(1), &int(-1), &int(0)).unwrap();
        let diag_down = CanonicalLine::from_coeffs(&int(1), &int(1), &int(0)).unwrap();
        let x_axis = CanonicalLine::from_coeffs(&int(0), &int(1), &int(0)).unwrap();
        let y_axis = CanonicalLine::from_coeffs(&int(1), &int(0), &int(0)).unwrap();
        assert_eq!(s.multiplicity(&diag_up), 4);
        assert_eq!(s.multiplicity(&diag_down), 4);
        assert_eq!(s.multiplicity(&x_axis), 2);
        assert_eq!(s.multiplicity(&y_axis), 2);
        assert_eq!(s.distinct_count(), 4);
        assert_eq!(s.energy(), 40);
        assert_eq!(distinct_distances(&p).unwrap(), 2);
        assert_eq!(sum_m_squared(&p).unwrap(), 80);
        assert_eq!(isoceles_triples(&p).unwrap(), 8);
        assert_eq!(incidence_mult(&p).unwrap(), 8);
        assert_eq!(max_collinear(&p).unwrap(), 2);
        assert_eq!(max_cocircular(&p).unwrap(), 4);
        assert_eq!(rich_bisectors(&p, 2).unwrap(), 2);
    }

    #[test]
    fn square_report_is_the_expected_composite() {
        let r = stats_report(&square(), &StatsOptions::default()).unwrap();
        assert_eq!(r.n, 4);
        assert_eq!(r.energy, 40);
        assert_eq!(r.distinct_bisectors, 4);
        assert_eq!(r.distinct_distances, 2);
        assert_eq!(r.max_collinear, 2);
        assert_eq!(r.max_cocircular, Some(4));
        assert_eq!(r.isoceles_triples, 8);
        assert_eq!(r.incidence_mult, 8);
        assert_eq!(r.sum_m_squared, 80);
    }

    #[test]
    fn grid_statistics() {
        let p = grid3();
        assert_eq!(distinct_distances(&p).unwrap(), 5);
        assert_eq!(max_collinear(&p).unwrap(), 3);
        assert_eq!(max_cocircular(&p).unwrap(), 4);
        assert!(rich_lines(&p, 3).unwrap() >= 6);
    }

    #[test]
    fn isoceles_empty_for_scalene() {
        let p = set(&[(0, 0), (1, 0), (0, 2)]);
        assert_eq!(isoceles_triples(&p).unwrap(), 0);
    }

    #[test]
    fn small_sets_are_rejected() {
        let p = set(&[(0, 0), (1, 0)]);
        assert!(matches!(
            isoceles_triples(&p),
            Err(StatsError::TooFewPoints { needed: 3, got: 2 })
        ));
        assert!(max_cocircular(&p).is_err());
        assert!(stats_report(&p, &StatsOptions::default()).is_err());
        let one = set(&[(0, 0)]);
        assert!(bisector_spectrum(&one).is_err());
    }

    #[test]
    fn cocircular_on_collinear_set_is_two() {
        let p = set(&[(0, 0), (1, 0), (2, 0), (3, 0)]);
        assert_eq!(max_cocircular(&p).unwrap(), 2);
    }

    #[test]
    fn square_plus_center_keeps_max_cocircular() {
        let p = set(&[(1, 0), (0, 1), (-1, 0), (0, -1), (0, 0)]);
        assert_eq!(max_cocircular(&p).unwrap(), 4);
    }

    #[test]
    fn rich_lines_on_line_and_grid() {
        let line: Vec<_> = (0..7).map(|i| pt(i, 0)).collect();
        let p = PointSet::new(line).unwrap();
        assert_eq!(rich_lines(&p, 7).unwrap(), 1);
        assert_eq!(rich_lines(&grid3(), 3).unwrap(), 8);
    }

    #[test]
    fn report_is_isometry_invariant() {
        use crate::geom::RigidMap;
        let p = grid3();
        let moved = p
            .apply(&RigidMap::rational_rotation(2))
            .apply(&RigidMap::translation(&crate::geom::rat(5, 7), &int(-3)));
        let opts = StatsOptions::default();
        assert_eq!(
            stats_report(&p, &opts).unwrap(),
            stats_report(&moved, &opts).unwrap()
        );
    }

    #[test]
    fn integer_and_rational_paths_agree() {
        use crate::geom::RigidMap;
        let opts = StatsOptions {
            skip_cocircular: false,
            rich_line_thresholds: vec![2, 3],
        };
        // A rational translation forces the general path without changing
        // any report field.
        let shift = RigidMap::translation(&crate::geom::rat(1, 7), &crate::geom::rat(2, 9));
        for p in [
            grid3(),
            square(),
            crate::generators::gen_random(20, 50, 11).unwrap(),
            crate::generators::gen_line(9),
        ] {
            let fast = stats_report(&p, &opts).unwrap();
            let general = stats_report(&p.apply(&shift), &opts).unwrap();
            assert_eq!(fast, general);
            assert_eq!(
                max_cocircular(&p).unwrap(),
                max_cocircular(&p.apply(&shift)).unwrap()
            );
        }
    }
}
