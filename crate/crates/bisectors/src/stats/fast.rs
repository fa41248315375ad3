//! Integer fast path for the statistics report.
//!
//! When every coordinate is an integer of magnitude below 2³⁰ the whole
//! report can be computed in i128 arithmetic with no allocations in the
//! inner loops. The bound makes every intermediate fit: squared distances
//! stay below 2⁶³, bisector coefficients below 2⁶³, and the inversion
//! direction products used by the cocircularity maximum below 2¹²⁷. Debug
//! builds additionally carry checked arithmetic.
//!
//! The path is exact, not approximate: it mirrors the rational
//! canonicalization (coprime coefficients, fixed sign rule) over a
//! representation that happens to be cheap. The test suite runs both paths
//! on the same sets and requires identical reports.

use std::collections::{BTreeMap, HashMap};

use num_integer::Integer;

use crate::pointset::PointSet;

use super::{StatsOptions, StatsReport};

const COORD_BOUND: i128 = 1 << 30;

pub(super) type ICoord = (i128, i128);
type ILine = (i128, i128, i128);

/// The coordinates as bounded integers, if the set qualifies for the fast
/// path.
pub(super) fn int_coords(p: &PointSet) -> Option<Vec<ICoord>> {
    let mut out = Vec::with_capacity(p.len());
    for pt in p.iter() {
        if !pt.x.is_integer() || !pt.y.is_integer() {
            return None;
        }
        let x = i128::try_from(pt.x.numer()).ok()?;
        let y = i128::try_from(pt.y.numer()).ok()?;
        if x.abs() >= COORD_BOUND || y.abs() >= COORD_BOUND {
            return None;
        }
        out.push((x, y));
    }
    Some(out)
}

fn dist2(a: ICoord, b: ICoord) -> i128 {
    let dx = a.0 - b.0;
    let dy = a.1 - b.1;
    dx * dx + dy * dy
}

/// Canonical bisector of two distinct integer points: coprime coefficients
/// of Ax + By = C with A > 0, or A = 0 and B > 0.
fn bisector(a: ICoord, b: ICoord) -> ILine {
    let ca = 2 * (b.0 - a.0);
    let cb = 2 * (b.1 - a.1);
    let cc = (b.0 * b.0 + b.1 * b.1) - (a.0 * a.0 + a.1 * a.1);
    normalize_line(ca, cb, cc)
}

fn normalize_line(mut a: i128, mut b: i128, mut c: i128) -> ILine {
    let g = a.gcd(&b).gcd(&c);
    if g != 0 {
        a /= g;
        b /= g;
        c /= g;
    }
    if a < 0 || (a == 0 && b < 0) {
        a = -a;
        b = -b;
        c = -c;
    }
    (a, b, c)
}

/// Reduced direction of b − a with the first nonzero component positive.
fn direction(a: ICoord, b: ICoord) -> ICoord {
    let mut ux = b.0 - a.0;
    let mut uy = b.1 - a.1;
    let g = ux.gcd(&uy);
    if g != 0 {
        ux /= g;
        uy /= g;
    }
    if ux < 0 || (ux == 0 && uy < 0) {
        ux = -ux;
        uy = -uy;
    }
    (ux, uy)
}

pub(super) fn report(pts: &[ICoord], opts: &StatsOptions) -> StatsReport {
    let n = pts.len();

    // Bisector spectrum: energy and key count.
    let (energy, distinct_bisectors, mu) = {
        let mut mu: HashMap<ILine, u64> = HashMap::new();
        for i in 0..n {
            for j in (i + 1)..n {
                *mu.entry(bisector(pts[i], pts[j])).or_insert(0) += 2;
            }
        }
        let energy = mu.values().map(|&m| m * m).sum();
        let distinct = mu.len() as u64;
        (energy, distinct, mu)
    };

    // Apex scan: isoceles triples and per-line point counts.
    let mut triples = 0u64;
    let mut rho: HashMap<ILine, (usize, u64)> = HashMap::new();
    for apex in 0..n {
        let mut groups: HashMap<i128, Vec<usize>> = HashMap::new();
        for j in 0..n {
            if j != apex {
                groups.entry(dist2(pts[apex], pts[j])).or_default().push(j);
            }
        }
        for members in groups.values() {
            let k = members.len() as u64;
            triples += k * (k - 1);
            for (idx, &a) in members.iter().enumerate() {
                for &b in &members[idx + 1..] {
                    let line = bisector(pts[a], pts[b]);
                    let entry = rho.entry(line).or_insert((apex, 0));
                    if entry.1 == 0 || entry.0 != apex {
                        *entry = (apex, entry.1 + 1);
                    }
                }
            }
        }
    }
    let incidence = rho
        .iter()
        .map(|(line, &(_, r))| mu.get(line).copied().unwrap_or(0) * r)
        .sum();
    drop(mu);
    drop(rho);

    // Distance spectrum.
    let (distinct_distances, sum_m_squared) = {
        let mut m: HashMap<i128, u64> = HashMap::new();
        for i in 0..n {
            for j in (i + 1)..n {
                *m.entry(dist2(pts[i], pts[j])).or_insert(0) += 2;
            }
        }
        (m.len() as u64, m.values().map(|&c| c * c).sum())
    };

    // Direction pass: collinearity maximum and the rich-line table.
    let min_rich = opts.rich_line_thresholds.iter().copied().min();
    let mut max_collinear = 2u64.min(n as u64);
    let mut rich: HashMap<ILine, u64> = HashMap::new();
    for i in 0..n {
        let mut groups: HashMap<ICoord, u64> = HashMap::new();
        for j in (i + 1)..n {
            *groups.entry(direction(pts[i], pts[j])).or_insert(0) += 1;
        }
        for (dir, count) in &groups {
            max_collinear = max_collinear.max(count + 1);
            if let Some(k) = min_rich {
                if count + 1 >= k.max(2) {
                    // Line through pts[i] with direction dir.
                    let line = normalize_line(
                        dir.1,
                        -dir.0,
                        dir.1 * pts[i].0 - dir.0 * pts[i].1,
                    );
                    let entry = rich.entry(line).or_insert(0);
                    *entry = (*entry).max(count + 1);
                }
            }
        }
    }
    let rich_lines = if opts.rich_line_thresholds.is_empty() {
        None
    } else {
        let mut table = BTreeMap::new();
        for &k in &opts.rich_line_thresholds {
            let k2 = k.max(2);
            table.insert(k, rich.values().filter(|&&c| c >= k2).count() as u64);
        }
        Some(table)
    };

    let max_cocircular = if opts.skip_cocircular {
        None
    } else {
        Some(max_cocircular(pts))
    };

    StatsReport {
        n: n as u64,
        energy,
        distinct_bisectors,
        distinct_distances,
        max_collinear,
        max_cocircular,
        isoceles_triples: triples,
        incidence_mult: incidence,
        sum_m_squared,
        rich_lines,
    }
}

/// Cocircularity maximum over integer points: per-anchor inversion with the
/// denominators kept implicit. The image of point i is p + vᵢ/dᵢ with
/// vᵢ = ptsᵢ − p and dᵢ = |vᵢ|², so image directions are reduced from
/// vⱼ·dᵢ − vᵢ·dⱼ and the anchor-avoidance test is cross(dir, vᵢ) ≠ 0.
pub(super) fn max_cocircular(pts: &[ICoord]) -> u64 {
    let n = pts.len();
    let mut best = 2u64;
    let mut vs: Vec<(i128, i128, i128)> = Vec::with_capacity(n - 1);
    for center in 0..n {
        vs.clear();
        for (i, &q) in pts.iter().enumerate() {
            if i != center {
                let vx = q.0 - pts[center].0;
                let vy = q.1 - pts[center].1;
                vs.push((vx, vy, vx * vx + vy * vy));
            }
        }
        let m = vs.len();
        let mut groups: HashMap<ICoord, u64> = HashMap::new();
        for i in 0..m {
            groups.clear();
            let (vix, viy, di) = vs[i];
            for &(vjx, vjy, dj) in &vs[i + 1..] {
                let mut ux = vjx * di - vix * dj;
                let mut uy = vjy * di - viy * dj;
                let g = ux.gcd(&uy);
                if g != 0 {
                    ux /= g;
                    uy /= g;
                }
                if ux < 0 || (ux == 0 && uy < 0) {
                    ux = -ux;
                    uy = -uy;
                }
                *groups.entry((ux, uy)).or_insert(0) += 1;
            }
            for (dir, count) in &groups {
                // count+1 collinear images plus the inversion center, on a
                // line that must avoid the center.
                if count + 2 > best && dir.0 * viy - dir.1 * vix != 0 {
                    best = count + 2;
                }
            }
        }
    }
    best
}

/// Collinearity maximum over integer points.
pub(super) fn max_collinear(pts: &[ICoord]) -> u64 {
    let n = pts.len();
    let mut best = 2u64.min(n as u64);
    for i in 0..n {
        let mut groups: HashMap<ICoord, u64> = HashMap::new();
        for j in (i + 1)..n {
            *groups.entry(direction(pts[i], pts[j])).or_insert(0) += 1;
        }
        if let Some(&m) = groups.values().max() {
            best = best.max(m + 1);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{rat, Point};

    #[test]
    fn qualifies_only_bounded_integer_sets() {
        let ints = PointSet::new(vec![Point::from_ints(0, 0), Point::from_ints(1, 7)]).unwrap();
        assert!(int_coords(&ints).is_some());
        let rational =
            PointSet::new(vec![Point::from_ints(0, 0), Point::new(rat(1, 2), rat(0, 1))]).unwrap();
        assert!(int_coords(&rational).is_none());
        let huge = PointSet::new(vec![
            Point::from_ints(0, 0),
            Point::from_ints(1 << 40, 1),
        ])
        .unwrap();
        assert!(int_coords(&huge).is_none());
    }

    #[test]
    fn canonical_line_normalization() {
        assert_eq!(normalize_line(-2, -4, -6), (1, 2, 3));
        assert_eq!(normalize_line(0, -3, 9), (0, 1, -3));
        assert_eq!(bisector((0, 0), (2, 0)), (1, 0, 1));
        assert_eq!(bisector((0, 0), (1, 3)), (1, 3, 5));
        assert_eq!(bisector((1, 3), (0, 0)), (1, 3, 5));
    }
}
